#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "gscramble/experiments/parallel.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/metrics.hpp"
#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/scrambling.hpp"
#include "gscramble/series.hpp"

namespace gsc {

namespace {

Vec mode_frequencies(const QuadraticHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.mq, Eigen::EigenvaluesOnly);
  Vec w = es.eigenvalues();
  for (int i = 0; i < w.size(); ++i) w[i] = std::sqrt(std::max(0.0, w[i]));
  return w;
}

// ln of the sample mean of e^{x_s}, evaluated around the maximum so that
// values like -1300 survive. This is the annealed average ln<g>, as opposed
// to the quenched <ln g>.
Vec log_mean_exp(const std::vector<Vec>& samples) {
  const int ns = static_cast<int>(samples.size());
  const int nt = static_cast<int>(samples[0].size());
  Vec out(nt);
  for (int it = 0; it < nt; ++it) {
    double m = samples[0][it];
    for (int s = 1; s < ns; ++s) m = std::max(m, samples[s][it]);
    double acc = 0.0;
    for (int s = 0; s < ns; ++s) acc += std::exp(samples[s][it] - m);
    out[it] = m + std::log(acc / ns);
  }
  return out;
}

}  // namespace

SffResult run_sff(const ExperimentConfig& c, int workers) {
  const int n = c.model.n;
  if (n < 2) throw std::invalid_argument("sff: need n >= 2");
  if (c.beta <= 0.0) throw std::invalid_argument("sff: need beta > 0");
  const std::string& type = c.model.type;
  if (type != "hl" && type != "dhl" && type != "goe" && type != "gue") {
    throw std::invalid_argument("sff: model must be hl, dhl, goe or gue");
  }

  const Vec times = c.grid.time_grid().times();
  const int nt = static_cast<int>(times.size());
  const int n_samples = (type == "hl") ? 1 : c.samples;
  const bool want_discrete = c.sff.discrete;

  auto one_sample = [&](int s) -> Vec {
    Rng rng = Rng::from(c.seed, "sff", static_cast<std::uint64_t>(s));
    QuadraticHamiltonian h;
    if (type == "hl") {
      h = hl_hamiltonian(n, c.model.m);
    } else if (type == "dhl") {
      h = dhl_hamiltonian(n, c.model.m, c.model.j_low, c.model.j_high, rng);
    } else {
      h = random_mq_hamiltonian(n,
                                type == "goe" ? Ensemble::GOE : Ensemble::GUE,
                                c.model.scale, c.model.shift_margin, rng);
    }
    const Vec w = mode_frequencies(h);
    Vec vals(want_discrete ? 2 * nt : nt);
    for (int it = 0; it < nt; ++it) {
      vals[it] = sff_log_total(w, c.beta, times[it]);
    }
    if (want_discrete) {
      std::vector<double> levels(w.data(), w.data() + w.size());
      for (int it = 0; it < nt; ++it) {
        vals[nt + it] = sff_discrete_spectrum(levels, c.beta, times[it]);
      }
    }
    return vals;
  };

  std::vector<Vec> stacked = parallel_map(n_samples, workers, one_sample);
  std::vector<Vec> logg(stacked.size());
  for (std::size_t s = 0; s < stacked.size(); ++s) {
    logg[s] = stacked[s].head(nt);
  }
  const SeriesStats quenched = average_series(logg);

  SffResult res;
  res.series = detail::series_table("sff", "t", times, quenched);
  res.series.log_x = c.grid.log_spaced;
  detail::add_run_meta(res.series, c);
  res.series.add_meta("beta", c.beta);
  res.series.add_meta("average", "quenched <ln g>");

  res.ramp = detect_ramp(times, quenched.mean, c.smooth_window);
  res.series.add_meta("ramp_window_ok", res.ramp.window_ok ? 1.0 : 0.0);
  res.series.add_meta("ramp_slope", res.ramp.slope);
  res.series.add_meta("ramp_t_stat", res.ramp.t_stat);
  res.series.add_meta("ramp_dip_index",
                      static_cast<double>(res.ramp.dip_index));
  res.series.add_meta("ramp_onset_index",
                      static_cast<double>(res.ramp.onset_index));
  res.series.add_meta("ramp_plateau_level", res.ramp.plateau_level);
  res.series.add_meta("smooth_window", static_cast<double>(c.smooth_window));

  if (c.sff.annealed) {
    ResultTable tab;
    tab.name = "sff_annealed";
    tab.columns = {"t", "value"};
    tab.data = {times, log_mean_exp(logg)};
    tab.log_x = c.grid.log_spaced;
    detail::add_run_meta(tab, c);
    tab.add_meta("beta", c.beta);
    tab.add_meta("average", "annealed ln <g>");
    res.annealed = std::move(tab);
  }
  if (want_discrete) {
    std::vector<Vec> disc(stacked.size());
    for (std::size_t s = 0; s < stacked.size(); ++s) {
      disc[s] = stacked[s].tail(nt);
    }
    const SeriesStats dstats = average_series(disc);
    ResultTable tab = detail::series_table("sff_discrete", "t", times,
                                           dstats);
    tab.log_x = c.grid.log_spaced;
    detail::add_run_meta(tab, c);
    tab.add_meta("beta", c.beta);
    res.discrete = std::move(tab);
  }
  return res;
}

std::vector<ResultTable> SffResult::tables() const {
  std::vector<ResultTable> out = {series};
  if (annealed) out.push_back(*annealed);
  if (discrete) out.push_back(*discrete);
  return out;
}

}  // namespace gsc
