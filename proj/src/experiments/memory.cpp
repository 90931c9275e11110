#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "gscramble/dynamics.hpp"
#include "gscramble/entropy.hpp"
#include "gscramble/experiments/parallel.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/models.hpp"
#include "gscramble/quasiparticle.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/series.hpp"
#include "gscramble/states.hpp"

namespace gsc {

namespace {

struct MemorySample {
  Vec joint;
  Vec mi;
};

// The dip sits where counter-propagating partners bridge the gap: the
// leading edge arrives at t = gap/2 and the overlap is gone again by
// t = gap/2 + max block length (speeds are at most 1 here). The plateau
// window ends safely before the leading edge.
struct DipWindows {
  int plateau_lo, plateau_hi, search_lo, search_hi;
  double plateau_lo_t, plateau_hi_t, search_lo_t, search_hi_t;
};

DipWindows dip_windows(const Vec& times, int block_a, int block_b, int gap) {
  DipWindows w;
  const double half_gap = 0.5 * gap;
  const int longest = std::max(block_a, block_b);
  w.plateau_lo_t = std::max(0.55 * half_gap, 0.5 * longest + 1.0);
  w.plateau_hi_t = 0.95 * half_gap;
  w.search_lo_t = half_gap;
  w.search_hi_t = half_gap + longest + 5.0;
  const int nt = static_cast<int>(times.size());
  w.plateau_lo = detail::clamp_index(
      detail::index_at_or_after(times, w.plateau_lo_t), nt);
  w.plateau_hi =
      detail::clamp_index(detail::index_after(times, w.plateau_hi_t), nt);
  w.search_lo = detail::clamp_index(
      detail::index_at_or_after(times, w.search_lo_t), nt);
  w.search_hi =
      detail::clamp_index(detail::index_after(times, w.search_hi_t), nt);
  if (w.plateau_lo >= w.plateau_hi || w.search_lo >= w.search_hi) {
    throw std::invalid_argument(
        "memory-effect: time grid too short for the dip windows; extend "
        "grid.stop past gap/2 + block length");
  }
  return w;
}

}  // namespace

MemoryEffectResult run_memory_effect(const ExperimentConfig& c, int workers) {
  if (c.model.type != "hl" && c.model.type != "dhl") {
    throw std::invalid_argument("memory-effect: model must be hl or dhl");
  }
  const int n = c.model.n;
  if (n < 2) throw std::invalid_argument("memory-effect: n < 2");
  if (c.model.m_quench < 0.0) {
    throw std::invalid_argument(
        "memory-effect: model.m_quench required (mass quench protocol)");
  }
  const int ba = c.partition.block_a;
  const int bb = c.partition.block_b;
  const int gap = c.partition.gap;
  if (ba < 1 || bb < 1 || gap < 1 || ba + gap + bb > n) {
    throw std::invalid_argument("memory-effect: partition does not fit");
  }

  const Vec times = c.grid.time_grid().times();
  const int nt = static_cast<int>(times.size());
  const EntropyKind kind = c.entropy_kind();

  // Both evolutions start from the clean-chain ground state at mass m; the
  // quench only swaps the evolution Hamiltonian.
  const Mat sigma0 = ground_state(hl_hamiltonian(n, c.model.m).mq);

  std::vector<int> tracked;
  tracked.reserve(ba + bb);
  for (int i = 0; i < ba; ++i) tracked.push_back(i);
  for (int i = 0; i < bb; ++i) tracked.push_back(ba + gap + i);
  const std::vector<int> local_a = contiguous_modes(0, ba);
  const std::vector<int> local_b = contiguous_modes(ba, bb);

  const bool random_model = (c.model.type == "dhl");
  const int n_samples = random_model ? c.samples : 1;

  auto one_sample = [&](int s) -> MemorySample {
    Rng rng = Rng::from(c.seed, "memory", static_cast<std::uint64_t>(s));
    QuadraticHamiltonian h =
        random_model ? dhl_hamiltonian(n, c.model.m_quench, c.model.j_low,
                                       c.model.j_high, rng)
                     : hl_hamiltonian(n, c.model.m_quench);
    EvolutionOperator op(h);
    ReducedEvolution red(op, sigma0, tracked);
    MemorySample out;
    out.joint.resize(nt);
    out.mi.resize(nt);
    for (int it = 0; it < nt; ++it) {
      Mat sr = red.at(times[it]);
      double s_joint = entropy_of(sr, kind);
      double s_a = block_entropy(sr, local_a, kind);
      double s_b = block_entropy(sr, local_b, kind);
      out.joint[it] = s_joint;
      out.mi[it] = s_a + s_b - s_joint;
    }
    return out;
  };

  std::vector<MemorySample> samples =
      parallel_map(n_samples, workers, one_sample);
  std::vector<Vec> joints, mis;
  joints.reserve(samples.size());
  mis.reserve(samples.size());
  for (auto& s : samples) {
    joints.push_back(std::move(s.joint));
    mis.push_back(std::move(s.mi));
  }
  const SeriesStats joint_stats = average_series(joints);
  const SeriesStats mi_stats = average_series(mis);

  const DipWindows w = dip_windows(times, ba, bb, gap);

  MemoryEffectResult res;
  res.joint_dip = dip_metric(joint_stats.mean, w.plateau_lo, w.plateau_hi,
                             w.search_lo, w.search_hi);
  res.joint = detail::series_table("joint_entropy", "t", times, joint_stats);
  res.mutual_info =
      detail::series_table("mutual_information", "t", times, mi_stats);
  for (ResultTable* tab : {&res.joint, &res.mutual_info}) {
    detail::add_run_meta(*tab, c);
    tab->add_meta("m", c.model.m);
    tab->add_meta("m_quench", c.model.m_quench);
    if (random_model) {
      tab->add_meta("j_low", c.model.j_low);
      tab->add_meta("j_high", c.model.j_high);
    }
    tab->add_meta("block_a", static_cast<double>(ba));
    tab->add_meta("block_b", static_cast<double>(bb));
    tab->add_meta("gap", static_cast<double>(gap));
    tab->add_meta("plateau_window_t",
                  format_value(w.plateau_lo_t) + ".." +
                      format_value(w.plateau_hi_t));
    tab->add_meta("search_window_t", format_value(w.search_lo_t) + ".." +
                                         format_value(w.search_hi_t));
  }
  detail::add_dip_meta(res.joint, "dip", res.joint_dip);

  if (c.qp.enabled) {
    const int qp_modes = c.qp.n_modes > 0 ? c.qp.n_modes : n;
    auto one_qp = [&](int q) -> Vec {
      Rng rng = Rng::from(c.seed, "memory-qp", static_cast<std::uint64_t>(q));
      QpModeSet set = sample_qp_modes(qp_modes, c.qp.v, c.qp.s, rng);
      Vec vals(nt);
      for (int it = 0; it < nt; ++it) {
        vals[it] = qp_entropy_disjoint(set, ba, bb, gap, times[it]);
      }
      return vals;
    };
    std::vector<Vec> qp_samples = parallel_map(c.qp.samples, workers, one_qp);
    const SeriesStats qp_stats = average_series(qp_samples);
    DipMetric qp_dip = dip_metric(qp_stats.mean, w.plateau_lo, w.plateau_hi,
                                  w.search_lo, w.search_hi);
    ResultTable tab = detail::series_table("qp_overlay", "t", times, qp_stats);
    detail::add_run_meta(tab, c);
    tab.add_meta("qp_samples", static_cast<double>(c.qp.samples));
    tab.add_meta("qp_modes", static_cast<double>(qp_modes));
    tab.add_meta("qp_s", c.qp.s);
    detail::add_dip_meta(tab, "dip", qp_dip);
    res.qp = std::move(tab);
    res.qp_dip = qp_dip;
  }
  return res;
}

std::vector<ResultTable> MemoryEffectResult::tables() const {
  std::vector<ResultTable> out = {joint, mutual_info};
  if (qp) out.push_back(*qp);
  return out;
}

}  // namespace gsc
