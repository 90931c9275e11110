#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gscramble/experiments/emit.hpp"
#include "gscramble/rng.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

gsc::ResultTable sample_table() {
  gsc::ResultTable t;
  t.name = "emit_test_series";
  t.columns = {"t", "value", "std_error", "sample_count"};
  gsc::Vec x(3), v(3), e(3), n(3);
  x << 0.0, 0.5, 1.0;
  v << 1.0, 0.25, 1.0 / 3.0;
  e << 0.0, 0.01, 0.02;
  n << 5, 5, 5;
  t.data = {x, v, e, n};
  t.add_meta("model", "hl");
  t.add_meta("lambda", 2.0);
  return t;
}

TEST_CASE("csv_layout_and_determinism") {
  fs::path dir = fs::temp_directory_path() / "gsc_emit_test";
  fs::create_directories(dir);
  gsc::ResultTable t = sample_table();
  std::string file = gsc::emit_csv(t, dir.string());
  CHECK(file == "emit_test_series.csv");
  std::string body = slurp(dir / file);

  // Metadata lines first, then the header, then one line per row.
  CHECK(body.rfind("# model: hl\n", 0) == 0);
  CHECK(body.find("# lambda: 2\n") != std::string::npos);
  CHECK(body.find("t,value,std_error,sample_count\n") != std::string::npos);
  CHECK(body.find("\n0,1,0,5\n") != std::string::npos);
  // 17 significant digits preserve the double exactly.
  CHECK(body.find("0.33333333333333331") != std::string::npos);

  gsc::emit_csv(t, dir.string());
  CHECK(slurp(dir / file) == body);  // byte-identical on re-emit
  fs::remove_all(dir);
}

TEST_CASE("format_value_round_trips_doubles") {
  gsc::Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    double v = std::exp(rng.uniform(-40.0, 40.0)) *
               (rng.uniform01() < 0.5 ? -1.0 : 1.0);
    double back = std::stod(gsc::format_value(v));
    CHECK(back == v);
  }
  CHECK(gsc::format_value(0.0) == "0");
}

TEST_CASE("svg_plots_value_but_not_error_columns") {
  fs::path dir = fs::temp_directory_path() / "gsc_emit_svg";
  fs::create_directories(dir);
  std::string file = gsc::emit_svg(sample_table(), dir.string());
  std::string body = slurp(dir / file);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("polyline") != std::string::npos);
  CHECK(body.find(">value</text>") != std::string::npos);
  CHECK(body.find(">std_error</text>") == std::string::npos);
  CHECK(body.find(">sample_count</text>") == std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("emit_rejects_malformed_tables") {
  fs::path dir = fs::temp_directory_path() / "gsc_emit_bad";
  fs::create_directories(dir);
  gsc::ResultTable t = sample_table();
  t.columns.pop_back();
  CHECK_THROWS(gsc::emit_csv(t, dir.string()));

  gsc::ResultTable ragged = sample_table();
  ragged.data[1] = gsc::Vec::Zero(2);
  CHECK_THROWS(gsc::emit_csv(ragged, dir.string()));

  gsc::ResultTable empty;
  empty.name = "empty";
  CHECK_THROWS(gsc::emit_csv(empty, dir.string()));
  fs::remove_all(dir);
}

TEST_CASE("manifest_lists_outputs_and_versions") {
  fs::path dir = fs::temp_directory_path() / "gsc_emit_manifest";
  fs::create_directories(dir);
  gsc::write_manifest(dir.string(), "otoc", "00deadbeef001234",
                      {"otoc.csv", "otoc.svg"});
  nlohmann::json j = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(j.at("experiment") == "otoc");
  CHECK(j.at("config_hash") == "00deadbeef001234");
  CHECK(j.at("files").size() == 2u);
  CHECK(j.contains("version"));
  fs::remove_all(dir);
}

}  // namespace
