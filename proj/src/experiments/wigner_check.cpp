#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "gscramble/dynamics.hpp"
#include "gscramble/experiments/parallel.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/states.hpp"
#include "gscramble/wigner.hpp"

namespace gsc {

namespace {

struct NamedState {
  std::string name;
  Mat sigma;
};

// A fixed panel of states spanning the cases of interest: pure vacuum,
// mixed thermal, strongly squeezed pure, and a multimode state entangled by
// a few random beam-splitter layers.
std::vector<NamedState> test_states(std::uint64_t seed) {
  std::vector<NamedState> states;
  states.push_back({"vacuum_1mode", vacuum_state(1)});
  states.push_back({"thermal_nbar1_2mode", thermal_state(2, 1.0)});
  states.push_back({"squeezed_r1_1mode", squeezed_vacuum(1, 1.0)});

  Mat sigma = squeezed_vacuum(4, 1.0);
  Rng rng = Rng::from(seed, "wigner-state", 0);
  CircuitSpec spec;
  spec.n_modes = 4;
  spec.policy = BsPolicy::FixedRandom;
  CircuitEvolution circ(spec, rng);
  for (int s = 0; s < 3; ++s) circ.step(sigma, rng);
  states.push_back({"circuit_evolved_4mode", std::move(sigma)});
  return states;
}

}  // namespace

WignerCheckResult run_wigner_check(const ExperimentConfig& c, int workers) {
  if (c.samples < 64) {
    throw std::invalid_argument(
        "wigner-check: needs at least 64 phase-space samples");
  }
  const std::vector<NamedState> states = test_states(c.seed);
  const int ns = static_cast<int>(states.size());

  auto one_state = [&](int idx) -> CorrespondenceReport {
    Rng rng = Rng::from(c.seed, "wigner", static_cast<std::uint64_t>(idx));
    return renyi2_correspondence_check(states[idx].sigma, c.samples, rng);
  };
  std::vector<CorrespondenceReport> reports =
      parallel_map(ns, workers, one_state);

  WignerCheckResult res;
  Vec idx(ns), est(ns), se(ns), pred(ns), z(ns);
  for (int i = 0; i < ns; ++i) {
    idx[i] = i;
    est[i] = reports[i].estimate;
    se[i] = reports[i].std_error;
    pred[i] = reports[i].predicted;
    z[i] = reports[i].z;
    res.state_names.push_back(states[i].name);
  }
  res.report.name = "wigner_check";
  res.report.columns = {"state_index", "estimate", "std_error", "predicted",
                        "z"};
  res.report.data = {idx, est, se, pred, z};
  detail::add_run_meta(res.report, c);
  for (int i = 0; i < ns; ++i) {
    res.report.add_meta("state_" + std::to_string(i), states[i].name);
  }
  return res;
}

std::vector<ResultTable> WignerCheckResult::tables() const {
  return {report};
}

std::vector<ResultTable> run_experiment(const ExperimentConfig& c,
                                        int workers) {
  const std::string& e = c.experiment;
  if (e == "memory-effect") return run_memory_effect(c, workers).tables();
  if (e == "circuit-memory") return run_circuit_memory(c, workers).tables();
  if (e == "tmi") return run_tmi(c, workers).tables();
  if (e == "tmi-static") return run_tmi_static(c, workers).tables();
  if (e == "otoc") return run_otoc(c, workers).tables();
  if (e == "sff") return run_sff(c, workers).tables();
  if (e == "wigner-check") return run_wigner_check(c, workers).tables();
  throw std::invalid_argument("unknown experiment: " + e);
}

}  // namespace gsc
