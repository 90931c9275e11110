#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gscramble/entropy.hpp"
#include "gscramble/experiments/config.hpp"

namespace {

using nlohmann::json;

json minimal_config() {
  return json{{"experiment", "otoc"},
              {"model", {{"type", "hl"}, {"n", 16}}},
              {"grid", {{"start", 1e-3}, {"stop", 1.0}, {"points", 10},
                        {"log", true}}}};
}

TEST_CASE("minimal_config_parses_with_defaults") {
  gsc::ExperimentConfig c = gsc::parse_config(minimal_config());
  CHECK(c.experiment == "otoc");
  CHECK(c.model.type == "hl");
  CHECK(c.model.n == 16);
  CHECK(c.samples == 1);
  CHECK(c.seed == 1u);
  CHECK(c.entropy == "von_neumann");
  CHECK(c.entropy_kind() == gsc::EntropyKind::VonNeumann);
  CHECK(c.beta == 0.01);
  CHECK(c.smooth_window == 51);
  CHECK(c.grid.log_spaced);
  CHECK(c.otoc.j == 1);
  CHECK(c.otoc.k == 0);
}

TEST_CASE("unknown_keys_are_rejected_everywhere") {
  json top = minimal_config();
  top["typo"] = 1;
  CHECK_THROWS(gsc::parse_config(top));

  json model = minimal_config();
  model["model"]["coupling"] = 2.0;
  CHECK_THROWS(gsc::parse_config(model));

  json grid = minimal_config();
  grid["grid"]["log_spaced"] = true;  // the key is "log"
  CHECK_THROWS(gsc::parse_config(grid));

  json nested = minimal_config();
  nested["model"]["omega"] = {{"dist", "uniform"}, {"lo", 0.5}};
  CHECK_THROWS(gsc::parse_config(nested));
}

TEST_CASE("invalid_values_are_rejected") {
  json bad_exp = minimal_config();
  bad_exp["experiment"] = "otok";
  CHECK_THROWS(gsc::parse_config(bad_exp));

  json bad_entropy = minimal_config();
  bad_entropy["entropy"] = "renyi3";
  CHECK_THROWS(gsc::parse_config(bad_entropy));

  json bad_samples = minimal_config();
  bad_samples["samples"] = 0;
  CHECK_THROWS(gsc::parse_config(bad_samples));

  json bad_window = minimal_config();
  bad_window["smooth_window"] = 10;
  CHECK_THROWS(gsc::parse_config(bad_window));

  json bad_type = minimal_config();
  bad_type["model"]["type"] = "sho";
  CHECK_THROWS(gsc::parse_config(bad_type));

  json bad_policy = minimal_config();
  bad_policy["model"]["bs_policy"] = "random";
  CHECK_THROWS(gsc::parse_config(bad_policy));
}

TEST_CASE("distributions_and_complex_parameters_round_trip") {
  json j = minimal_config();
  j["model"]["omega"] = {{"dist", "exponential"}, {"rate", 2.0},
                         {"offset", 0.3}};
  j["otoc"] = {{"j", 2}, {"k", 5}, {"mu", {0.5, -0.5}}, {"nu", {1.0, 2.0}}};
  gsc::ExperimentConfig c = gsc::parse_config(j);
  CHECK(c.model.omega.kind == gsc::DistributionSpec::Kind::ExponentialShifted);
  CHECK(c.model.omega.rate == 2.0);
  CHECK(c.model.omega.offset == 0.3);
  CHECK(c.otoc.mu == gsc::Complex(0.5, -0.5));
  CHECK(c.otoc.nu == gsc::Complex(1.0, 2.0));

  gsc::ExperimentConfig back = gsc::parse_config(gsc::serialize_config(c));
  CHECK(back == c);
}

TEST_CASE("serialization_round_trip_preserves_everything") {
  json j = minimal_config();
  j["experiment"] = "tmi";
  j["model"] = {{"type", "passive_random"}, {"n", 200}};
  j["state"] = {{"lambda", 10.0}, {"noise", 0.5}};
  j["partition"] = {{"n_a", 20}, {"n_b", 80}, {"n_c", 30}};
  j["sweep"] = {{"lambdas", {1.0, 2.0, 5.0, 10.0}}};
  j["samples"] = 7;
  j["seed"] = 999;
  j["entropy"] = "renyi2";
  gsc::ExperimentConfig c = gsc::parse_config(j);
  gsc::ExperimentConfig back = gsc::parse_config(gsc::serialize_config(c));
  CHECK(back == c);
  CHECK(back.entropy_kind() == gsc::EntropyKind::Renyi2);
  CHECK(back.sweep.lambdas.size() == 4u);
  CHECK(back.state.lambda == 10.0);
}

TEST_CASE("config_hash_tracks_content") {
  gsc::ExperimentConfig a = gsc::parse_config(minimal_config());
  gsc::ExperimentConfig b = gsc::parse_config(minimal_config());
  CHECK(gsc::config_hash(a) == gsc::config_hash(b));
  b.seed = 2;
  CHECK(gsc::config_hash(a) != gsc::config_hash(b));
  CHECK(gsc::config_hash(a).size() == 16u);
}

TEST_CASE("paper_scale_block_merges_recursively_on_request") {
  json j = minimal_config();
  j["samples"] = 5;
  j["paper_scale"] = {{"samples", 100},
                      {"model", {{"n", 500}}}};
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "gsc_cfg_test.json";
  {
    std::ofstream out(path);
    out << j.dump(2);
  }
  gsc::ExperimentConfig desk = gsc::load_config(path.string(), false);
  CHECK(desk.model.n == 16);
  CHECK(desk.samples == 5);
  CHECK_FALSE(desk.paper_scale.is_null());

  gsc::ExperimentConfig paper = gsc::load_config(path.string(), true);
  CHECK(paper.model.n == 500);
  CHECK(paper.samples == 100);
  CHECK(paper.model.type == "hl");  // untouched sibling key survives

  // Asking for paper scale without a block is an error, not a no-op.
  json bare = minimal_config();
  std::filesystem::path path2 =
      std::filesystem::temp_directory_path() / "gsc_cfg_test2.json";
  {
    std::ofstream out(path2);
    out << bare.dump(2);
  }
  CHECK_THROWS(gsc::load_config(path2.string(), true));
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("missing_file_and_bad_json_are_reported") {
  CHECK_THROWS(gsc::load_config("/nonexistent/config.json", false));
  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "gsc_cfg_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS(gsc::load_config(path.string(), false));
  std::filesystem::remove(path);
}

}  // namespace
