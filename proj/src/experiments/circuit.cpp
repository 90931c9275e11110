#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "common.hpp"
#include "gscramble/dynamics.hpp"
#include "gscramble/entropy.hpp"
#include "gscramble/experiments/parallel.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/series.hpp"
#include "gscramble/states.hpp"

namespace gsc {

namespace {

BsPolicy policy_from(const std::string& name) {
  if (name == "balanced") return BsPolicy::Balanced;
  if (name == "fixed_random") return BsPolicy::FixedRandom;
  if (name == "resampled") return BsPolicy::ResampledEachStep;
  throw std::invalid_argument("circuit-memory: unknown bs_policy " + name);
}

}  // namespace

CircuitMemoryResult run_circuit_memory(const ExperimentConfig& c,
                                       int workers) {
  if (c.model.type != "circuit") {
    throw std::invalid_argument("circuit-memory: model must be circuit");
  }
  const int n = c.model.n;
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("circuit-memory: n must be even and >= 2");
  }
  const int ba = c.partition.block_a;
  const int bb = c.partition.block_b;
  const int gap = c.partition.gap;
  if (ba < 1 || bb < 1 || gap < 1 || ba + gap + bb > n) {
    throw std::invalid_argument("circuit-memory: partition does not fit");
  }
  const int steps = c.grid.steps;
  if (steps < 8) {
    throw std::invalid_argument("circuit-memory: grid.steps must be >= 8");
  }

  const BsPolicy policy = policy_from(c.model.bs_policy);
  const EntropyKind kind = c.entropy_kind();

  Mat sigma0 = squeezed_vacuum(n, c.state.lambda);
  if (c.state.noise > 0.0) sigma0 = add_vacuum_noise(sigma0, c.state.noise);

  std::vector<int> tracked;
  tracked.reserve(ba + bb);
  for (int i = 0; i < ba; ++i) tracked.push_back(i);
  for (int i = 0; i < bb; ++i) tracked.push_back(ba + gap + i);

  const bool random_policy = (policy != BsPolicy::Balanced);
  const int n_samples = random_policy ? c.samples : 1;

  CircuitSpec spec;
  spec.n_modes = n;
  spec.policy = policy;

  auto one_sample = [&](int s) -> Vec {
    Rng rng = Rng::from(c.seed, "circuit", static_cast<std::uint64_t>(s));
    CircuitEvolution circ(spec, rng);
    Mat sigma = sigma0;
    Vec vals(steps + 1);
    vals[0] = block_entropy(sigma, tracked, kind);
    for (int st = 1; st <= steps; ++st) {
      circ.step(sigma, rng);
      vals[st] = block_entropy(sigma, tracked, kind);
    }
    return vals;
  };

  std::vector<Vec> samples = parallel_map(n_samples, workers, one_sample);
  const SeriesStats stats = average_series(samples);

  Vec step_axis(steps + 1);
  for (int i = 0; i <= steps; ++i) step_axis[i] = i;

  // The balanced splitter acts as a discrete-time quantum walk whose
  // dominant group velocity is 1/sqrt(2) sites per layer, i.e. sqrt(2) per
  // two-layer step, so counter-propagating partners separate at 2*sqrt(2)
  // sites per step and realign around the ring after n / (2*sqrt(2)) steps.
  // Secondary dips appear earlier when the pair separation matches the
  // block-to-block offsets. The plateau window is the quiet stretch just
  // before the first full-ring revival; the dip search covers up to three
  // revival periods and ignores everything before the series first reaches
  // the plateau band (see count_revival_dips).
  const double period = n / (2.0 * std::numbers::sqrt2);
  const int nt = steps + 1;
  int plateau_lo = detail::clamp_index(
      static_cast<int>(std::ceil(0.75 * period)), nt);
  int plateau_hi = detail::clamp_index(
      static_cast<int>(std::floor(0.95 * period)) + 1, nt);
  int search_lo = 0;
  int search_hi = detail::clamp_index(
      static_cast<int>(std::floor(3.25 * period)) + 1, nt);
  if (plateau_lo >= plateau_hi || steps < 0.95 * period) {
    throw std::invalid_argument(
        "circuit-memory: grid.steps too small for the revival windows; need "
        "steps past 0.95 * n / (2*sqrt(2))");
  }

  CircuitMemoryResult res;
  res.dip =
      dip_metric(stats.mean, plateau_lo, plateau_hi, search_lo, search_hi);
  res.revivals = count_revival_dips(stats.mean, plateau_lo, plateau_hi,
                                    search_lo, search_hi, 0.9);
  res.revivals_shallow = count_revival_dips(stats.mean, plateau_lo,
                                            plateau_hi, search_lo, search_hi,
                                            0.97);

  res.series = detail::series_table("joint_entropy", "step", step_axis, stats);
  detail::add_run_meta(res.series, c);
  res.series.add_meta("bs_policy", c.model.bs_policy);
  res.series.add_meta("lambda", c.state.lambda);
  res.series.add_meta("noise", c.state.noise);
  res.series.add_meta("block_a", static_cast<double>(ba));
  res.series.add_meta("block_b", static_cast<double>(bb));
  res.series.add_meta("gap", static_cast<double>(gap));
  res.series.add_meta("revival_period_steps", period);
  res.series.add_meta("plateau_window_steps",
                      format_value(plateau_lo) + ".." +
                          format_value(plateau_hi - 1));
  res.series.add_meta("search_window_steps",
                      format_value(search_lo) + ".." +
                          format_value(search_hi - 1));
  detail::add_dip_meta(res.series, "dip", res.dip);
  res.series.add_meta("revival_dips", static_cast<double>(res.revivals.dips));
  res.series.add_meta("revival_threshold", res.revivals.threshold);
  res.series.add_meta("revival_deepest", res.revivals.deepest);
  res.series.add_meta("revival_shallow_dips",
                      static_cast<double>(res.revivals_shallow.dips));
  res.series.add_meta("revival_shallow_threshold",
                      res.revivals_shallow.threshold);
  return res;
}

std::vector<ResultTable> CircuitMemoryResult::tables() const {
  return {series};
}

}  // namespace gsc
