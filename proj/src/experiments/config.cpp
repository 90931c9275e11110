#include "gscramble/experiments/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gscramble/rng.hpp"

namespace gsc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      fail(where, "unknown key \"" + it.key() + "\"");
    }
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(where, std::string("bad value for \"") + key + "\"");
  }
}

DistributionSpec parse_dist(const json& j, const std::string& where) {
  std::string kind = get_or<std::string>(j, "dist", "uniform", where);
  if (kind == "uniform") {
    check_keys(j, {"dist", "a", "b"}, where);
    return DistributionSpec::uniform(get_or(j, "a", 0.0, where),
                                     get_or(j, "b", 1.0, where));
  }
  if (kind == "exponential") {
    check_keys(j, {"dist", "rate", "offset"}, where);
    return DistributionSpec::exponential_shifted(
        get_or(j, "rate", 1.0, where), get_or(j, "offset", 0.0, where));
  }
  fail(where, "unknown dist \"" + kind + "\"");
}

json dist_to_json(const DistributionSpec& d) {
  json j;
  if (d.kind == DistributionSpec::Kind::Uniform) {
    j["dist"] = "uniform";
    j["a"] = d.a;
    j["b"] = d.b;
  } else {
    j["dist"] = "exponential";
    j["rate"] = d.rate;
    j["offset"] = d.offset;
  }
  return j;
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

const std::set<std::string> kExperiments = {
    "memory-effect", "circuit-memory", "tmi",         "tmi-static",
    "otoc",          "sff",            "wigner-check"};

}  // namespace

TimeGrid GridConfig::time_grid() const {
  TimeGrid g;
  g.start = start;
  g.stop = stop;
  g.points = points;
  g.log_spaced = log_spaced;
  return g;
}

EntropyKind ExperimentConfig::entropy_kind() const {
  if (entropy == "von_neumann") return EntropyKind::VonNeumann;
  if (entropy == "renyi2") return EntropyKind::Renyi2;
  throw std::invalid_argument("config: unknown entropy \"" + entropy + "\"");
}

bool ExperimentConfig::operator==(const ExperimentConfig& other) const {
  return serialize_config(*this) == serialize_config(other);
}

ExperimentConfig parse_config(const json& j) {
  check_keys(j,
             {"schema_version", "experiment", "model", "state", "partition",
              "grid", "samples", "seed", "entropy", "beta", "otoc", "qp",
              "sweep", "sff", "smooth_window", "paper_scale"},
             "top level");
  ExperimentConfig c;
  c.schema_version = get_or(j, "schema_version", 1, "top level");
  if (c.schema_version != 1) fail("top level", "unsupported schema_version");
  if (!j.contains("experiment")) fail("top level", "missing \"experiment\"");
  c.experiment = j.at("experiment").get<std::string>();
  if (kExperiments.find(c.experiment) == kExperiments.end()) {
    fail("top level", "unknown experiment \"" + c.experiment + "\"");
  }

  if (j.contains("model")) {
    const json& m = j.at("model");
    check_keys(m,
               {"type", "n", "m", "m_quench", "j_low", "j_high", "scale",
                "shift_margin", "omega", "bs_policy"},
               "model");
    c.model.type = get_or<std::string>(m, "type", "hl", "model");
    static const std::set<std::string> kTypes = {
        "hl", "dhl", "goe", "gue", "passive_random", "circuit"};
    if (kTypes.find(c.model.type) == kTypes.end()) {
      fail("model", "unknown type \"" + c.model.type + "\"");
    }
    c.model.n = get_or(m, "n", 0, "model");
    c.model.m = get_or(m, "m", 1.0, "model");
    c.model.m_quench = get_or(m, "m_quench", -1.0, "model");
    c.model.j_low = get_or(m, "j_low", 1.0, "model");
    c.model.j_high = get_or(m, "j_high", 1.0, "model");
    c.model.scale = get_or(m, "scale", 1.0, "model");
    c.model.shift_margin = get_or(m, "shift_margin", 0.1, "model");
    if (m.contains("omega")) c.model.omega = parse_dist(m.at("omega"), "model.omega");
    c.model.bs_policy = get_or<std::string>(m, "bs_policy", "balanced", "model");
    static const std::set<std::string> kPolicies = {"balanced", "fixed_random",
                                                    "resampled"};
    if (kPolicies.find(c.model.bs_policy) == kPolicies.end()) {
      fail("model", "unknown bs_policy \"" + c.model.bs_policy + "\"");
    }
  }

  if (j.contains("state")) {
    const json& s = j.at("state");
    check_keys(s, {"lambda", "noise"}, "state");
    c.state.lambda = get_or(s, "lambda", 0.0, "state");
    c.state.noise = get_or(s, "noise", 0.0, "state");
    if (c.state.noise < 0.0) fail("state", "noise < 0");
  }

  if (j.contains("partition")) {
    const json& p = j.at("partition");
    check_keys(p,
               {"block_a", "block_b", "gap", "n_a", "n_b", "n_c", "gap_ab",
                "gap_bc"},
               "partition");
    c.partition.block_a = get_or(p, "block_a", 0, "partition");
    c.partition.block_b = get_or(p, "block_b", 0, "partition");
    c.partition.gap = get_or(p, "gap", 0, "partition");
    c.partition.n_a = get_or(p, "n_a", 0, "partition");
    c.partition.n_b = get_or(p, "n_b", 0, "partition");
    c.partition.n_c = get_or(p, "n_c", 0, "partition");
    c.partition.gap_ab = get_or(p, "gap_ab", 0, "partition");
    c.partition.gap_bc = get_or(p, "gap_bc", 0, "partition");
  }

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    check_keys(g, {"start", "stop", "points", "log", "steps"}, "grid");
    c.grid.start = get_or(g, "start", 0.0, "grid");
    c.grid.stop = get_or(g, "stop", 1.0, "grid");
    c.grid.points = get_or(g, "points", 2, "grid");
    c.grid.log_spaced = get_or(g, "log", false, "grid");
    c.grid.steps = get_or(g, "steps", -1, "grid");
  }

  c.samples = get_or(j, "samples", 1, "top level");
  if (c.samples < 1) fail("top level", "samples < 1");
  c.seed = get_or<std::uint64_t>(j, "seed", 1, "top level");
  c.entropy = get_or<std::string>(j, "entropy", "von_neumann", "top level");
  if (c.entropy != "von_neumann" && c.entropy != "renyi2") {
    fail("top level", "unknown entropy \"" + c.entropy + "\"");
  }
  c.beta = get_or(j, "beta", 0.01, "top level");

  if (j.contains("otoc")) {
    const json& o = j.at("otoc");
    check_keys(o, {"j", "k", "mu", "nu"}, "otoc");
    c.otoc.j = get_or(o, "j", 1, "otoc");
    c.otoc.k = get_or(o, "k", 0, "otoc");
    if (o.contains("mu")) c.otoc.mu = parse_complex(o.at("mu"), "otoc.mu");
    if (o.contains("nu")) c.otoc.nu = parse_complex(o.at("nu"), "otoc.nu");
  }

  if (j.contains("qp")) {
    const json& q = j.at("qp");
    check_keys(q, {"enabled", "samples", "n_modes", "s", "v"}, "qp");
    c.qp.enabled = get_or(q, "enabled", true, "qp");
    c.qp.samples = get_or(q, "samples", 50, "qp");
    c.qp.n_modes = get_or(q, "n_modes", 0, "qp");
    c.qp.s = get_or(q, "s", 0.32, "qp");
    if (q.contains("v")) c.qp.v = parse_dist(q.at("v"), "qp.v");
    if (c.qp.samples < 1) fail("qp", "samples < 1");
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    check_keys(s, {"lambdas", "blocks_b"}, "sweep");
    c.sweep.lambdas =
        get_or<std::vector<double>>(s, "lambdas", {}, "sweep");
    c.sweep.blocks_b = get_or<std::vector<int>>(s, "blocks_b", {}, "sweep");
  }

  if (j.contains("sff")) {
    const json& s = j.at("sff");
    check_keys(s, {"annealed", "discrete"}, "sff");
    c.sff.annealed = get_or(s, "annealed", false, "sff");
    c.sff.discrete = get_or(s, "discrete", false, "sff");
  }

  c.smooth_window = get_or(j, "smooth_window", 51, "top level");
  if (c.smooth_window < 1 || c.smooth_window % 2 == 0) {
    fail("top level", "smooth_window must be odd and >= 1");
  }

  if (j.contains("paper_scale")) {
    if (!j.at("paper_scale").is_object()) {
      fail("paper_scale", "expected an object");
    }
    if (j.at("paper_scale").contains("paper_scale")) {
      fail("paper_scale", "cannot nest paper_scale");
    }
    c.paper_scale = j.at("paper_scale");
  }
  return c;
}

nlohmann::json serialize_config(const ExperimentConfig& c) {
  json j;
  j["schema_version"] = c.schema_version;
  j["experiment"] = c.experiment;
  j["model"] = {{"type", c.model.type},
                {"n", c.model.n},
                {"m", c.model.m},
                {"m_quench", c.model.m_quench},
                {"j_low", c.model.j_low},
                {"j_high", c.model.j_high},
                {"scale", c.model.scale},
                {"shift_margin", c.model.shift_margin},
                {"omega", dist_to_json(c.model.omega)},
                {"bs_policy", c.model.bs_policy}};
  j["state"] = {{"lambda", c.state.lambda}, {"noise", c.state.noise}};
  j["partition"] = {{"block_a", c.partition.block_a},
                    {"block_b", c.partition.block_b},
                    {"gap", c.partition.gap},
                    {"n_a", c.partition.n_a},
                    {"n_b", c.partition.n_b},
                    {"n_c", c.partition.n_c},
                    {"gap_ab", c.partition.gap_ab},
                    {"gap_bc", c.partition.gap_bc}};
  j["grid"] = {{"start", c.grid.start},
               {"stop", c.grid.stop},
               {"points", c.grid.points},
               {"log", c.grid.log_spaced},
               {"steps", c.grid.steps}};
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["entropy"] = c.entropy;
  j["beta"] = c.beta;
  j["otoc"] = {{"j", c.otoc.j},
               {"k", c.otoc.k},
               {"mu", {c.otoc.mu.real(), c.otoc.mu.imag()}},
               {"nu", {c.otoc.nu.real(), c.otoc.nu.imag()}}};
  j["qp"] = {{"enabled", c.qp.enabled},
             {"samples", c.qp.samples},
             {"n_modes", c.qp.n_modes},
             {"s", c.qp.s},
             {"v", dist_to_json(c.qp.v)}};
  j["sweep"] = {{"lambdas", c.sweep.lambdas},
                {"blocks_b", c.sweep.blocks_b}};
  j["sff"] = {{"annealed", c.sff.annealed}, {"discrete", c.sff.discrete}};
  j["smooth_window"] = c.smooth_window;
  if (!c.paper_scale.is_null()) j["paper_scale"] = c.paper_scale;
  return j;
}

namespace {

void merge_into(json& base, const json& override_obj) {
  for (auto it = override_obj.begin(); it != override_obj.end(); ++it) {
    if (it->is_object() && base.contains(it.key()) &&
        base.at(it.key()).is_object()) {
      merge_into(base.at(it.key()), *it);
    } else {
      base[it.key()] = *it;
    }
  }
}

}  // namespace

ExperimentConfig load_config(const std::string& path, bool apply_paper_scale) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config: " + path + ": " + e.what());
  }
  if (apply_paper_scale) {
    if (!j.contains("paper_scale")) {
      throw std::runtime_error("config: " + path +
                               " has no paper_scale block");
    }
    json override_obj = j.at("paper_scale");
    j.erase("paper_scale");
    merge_into(j, override_obj);
  }
  return parse_config(j);
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = fnv1a64(serialize_config(config).dump());
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace gsc
