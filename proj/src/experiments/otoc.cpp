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

// Early-time fit window. The canonical choice is t in [1e-3, 1e-2]; when the
// grid does not put enough points there, fall back to the first decade the
// grid actually covers.
std::pair<double, double> fit_window(const Vec& t) {
  double lo = 1e-3, hi = 1e-2;
  int inside = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] >= lo && t[i] <= hi) ++inside;
  }
  if (inside >= 8) return {lo, hi};
  double first = -1.0;
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] > 0.0) {
      first = t[i];
      break;
    }
  }
  if (first <= 0.0) return {lo, hi};
  return {first, first * 10.0};
}

void annotate_fit(ResultTable& tab, const Vec& t, const Vec& mean) {
  auto [lo, hi] = fit_window(t);
  bool positive = true;
  int inside = 0;
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] < lo || t[i] > hi) continue;
    ++inside;
    if (mean[i] <= 0.0) positive = false;
  }
  tab.add_meta("fit_t_lo", lo);
  tab.add_meta("fit_t_hi", hi);
  if (!positive || inside < 3) {
    tab.add_meta("fit_ok", 0.0);
    return;
  }
  LinearFit fit = fit_loglog_slope(t, mean, lo, hi);
  tab.add_meta("fit_ok", 1.0);
  tab.add_meta("fit_slope", fit.slope);
  tab.add_meta("fit_se_slope", fit.se_slope);
  tab.add_meta("fit_points", static_cast<double>(fit.n));
}

}  // namespace

OtocResult run_otoc(const ExperimentConfig& c, int workers) {
  const int n = c.model.n;
  if (n < 2) throw std::invalid_argument("otoc: need n >= 2");
  const int jj = c.otoc.j - 1;
  const int kk = (c.otoc.k == 0 ? n / 2 : c.otoc.k) - 1;
  if (jj < 0 || jj >= n || kk < 0 || kk >= n) {
    throw std::invalid_argument("otoc: mode labels out of range");
  }

  const std::string& type = c.model.type;
  const bool is_passive = (type == "passive_random");
  const bool is_hamiltonian =
      (type == "hl" || type == "dhl" || type == "goe" || type == "gue");
  if (!is_passive && !is_hamiltonian) {
    throw std::invalid_argument(
        "otoc: model must be hl, dhl, goe, gue or passive_random");
  }

  const Vec times = c.grid.time_grid().times();
  const int nt = static_cast<int>(times.size());
  const int n_samples = (type == "hl") ? 1 : c.samples;

  OtocResult res;
  if (is_hamiltonian) {
    // Two series per sample: the commutator square C_jk(t) and the diagonal
    // deficit 1 - sqrt(C_jj(t)), stacked so one parallel_map covers both.
    auto one_sample = [&](int s) -> Vec {
      Rng rng = Rng::from(c.seed, "otoc", static_cast<std::uint64_t>(s));
      QuadraticHamiltonian h;
      if (type == "hl") {
        h = hl_hamiltonian(n, c.model.m);
      } else if (type == "dhl") {
        h = dhl_hamiltonian(n, c.model.m, c.model.j_low, c.model.j_high, rng);
      } else {
        h = random_mq_hamiltonian(
            n, type == "goe" ? Ensemble::GOE : Ensemble::GUE, c.model.scale,
            c.model.shift_margin, rng);
      }
      GroundOtoc otoc(h);
      Vec vals(2 * nt);
      for (int it = 0; it < nt; ++it) {
        vals[it] = otoc.at(jj, kk, times[it]);
        vals[nt + it] = otoc.diagonal_deficit(jj, times[it]);
      }
      return vals;
    };
    std::vector<Vec> stacked = parallel_map(n_samples, workers, one_sample);
    std::vector<Vec> c_series(stacked.size()), d_series(stacked.size());
    for (std::size_t s = 0; s < stacked.size(); ++s) {
      c_series[s] = stacked[s].head(nt);
      d_series[s] = stacked[s].tail(nt);
    }
    const SeriesStats c_stats = average_series(c_series);
    const SeriesStats d_stats = average_series(d_series);

    res.series = detail::series_table("otoc", "t", times, c_stats);
    res.series.log_x = c.grid.log_spaced;
    res.series.log_y = c.grid.log_spaced;
    detail::add_run_meta(res.series, c);
    res.series.add_meta("j", static_cast<double>(jj + 1));
    res.series.add_meta("k", static_cast<double>(kk + 1));
    annotate_fit(res.series, times, c_stats.mean);

    ResultTable deficit = detail::series_table("otoc_deficit", "t", times,
                                               d_stats);
    deficit.log_x = c.grid.log_spaced;
    deficit.log_y = c.grid.log_spaced;
    detail::add_run_meta(deficit, c);
    deficit.add_meta("j", static_cast<double>(jj + 1));
    annotate_fit(deficit, times, d_stats.mean);
    res.deficit = std::move(deficit);
  } else {
    // Displacement-operator OTOC plus its infinite-time reference |V_jk|^2.
    auto one_sample = [&](int s) -> Vec {
      Rng rng = Rng::from(c.seed, "otoc", static_cast<std::uint64_t>(s));
      PassiveRandomModel model = passive_random_model(n, c.model.omega, rng);
      Vec vals(2 * nt);
      for (int it = 0; it < nt; ++it) {
        vals[it] = otoc_displacement(model, c.otoc.mu, c.otoc.nu, jj, kk,
                                     times[it]);
        vals[nt + it] = std::norm(v_matrix_element(model, jj, kk, times[it]));
      }
      return vals;
    };
    std::vector<Vec> stacked = parallel_map(n_samples, workers, one_sample);
    std::vector<Vec> o_series(stacked.size()), v_series(stacked.size());
    for (std::size_t s = 0; s < stacked.size(); ++s) {
      o_series[s] = stacked[s].head(nt);
      v_series[s] = stacked[s].tail(nt);
    }
    const SeriesStats o_stats = average_series(o_series);
    const SeriesStats v_stats = average_series(v_series);

    res.series = detail::series_table("otoc", "t", times, o_stats);
    res.series.log_x = c.grid.log_spaced;
    detail::add_run_meta(res.series, c);
    res.series.add_meta("j", static_cast<double>(jj + 1));
    res.series.add_meta("k", static_cast<double>(kk + 1));
    res.series.add_meta("mu_re", c.otoc.mu.real());
    res.series.add_meta("mu_im", c.otoc.mu.imag());
    res.series.add_meta("nu_re", c.otoc.nu.real());
    res.series.add_meta("nu_im", c.otoc.nu.imag());

    ResultTable sat = detail::series_table("otoc_saturation", "t", times,
                                           v_stats);
    sat.log_x = c.grid.log_spaced;
    detail::add_run_meta(sat, c);
    sat.add_meta("j", static_cast<double>(jj + 1));
    sat.add_meta("k", static_cast<double>(kk + 1));
    res.saturation = std::move(sat);
  }
  return res;
}

std::vector<ResultTable> OtocResult::tables() const {
  std::vector<ResultTable> out = {series};
  if (deficit) out.push_back(*deficit);
  if (saturation) out.push_back(*saturation);
  return out;
}

}  // namespace gsc
