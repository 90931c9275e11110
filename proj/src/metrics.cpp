#include "gscramble/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gscramble/series.hpp"

namespace gsc {

LinearFit linear_fit(const Vec& x, const Vec& y) {
  const int n = static_cast<int>(x.size());
  if (y.size() != n) throw std::invalid_argument("linear_fit: size mismatch");
  LinearFit fit;
  fit.n = n;
  if (n < 2) return fit;
  double xb = x.mean(), yb = y.mean();
  double sxx = (x.array() - xb).square().sum();
  if (sxx <= 0.0) return fit;
  double sxy = ((x.array() - xb) * (y.array() - yb)).sum();
  fit.slope = sxy / sxx;
  fit.intercept = yb - fit.slope * xb;
  if (n > 2) {
    double rss =
        (y.array() - fit.intercept - fit.slope * x.array()).square().sum();
    double s2 = rss / (n - 2);
    fit.se_slope = std::sqrt(s2 / sxx);
    if (fit.se_slope > 0.0) fit.t_stat = fit.slope / fit.se_slope;
  }
  return fit;
}

LinearFit fit_loglog_slope(const Vec& t, const Vec& y, double t_lo,
                           double t_hi) {
  if (t.size() != y.size()) {
    throw std::invalid_argument("fit_loglog_slope: size mismatch");
  }
  std::vector<double> lx, ly;
  for (int i = 0; i < t.size(); ++i) {
    if (t[i] < t_lo || t[i] > t_hi) continue;
    if (y[i] <= 0.0) {
      throw std::invalid_argument("fit_loglog_slope: nonpositive value");
    }
    lx.push_back(std::log(t[i]));
    ly.push_back(std::log(y[i]));
  }
  Vec vx = Eigen::Map<Vec>(lx.data(), static_cast<int>(lx.size()));
  Vec vy = Eigen::Map<Vec>(ly.data(), static_cast<int>(ly.size()));
  return linear_fit(vx, vy);
}

namespace {

void check_window(int lo, int hi, int n, const char* who) {
  if (lo < 0 || hi > n || lo >= hi) {
    throw std::invalid_argument(std::string(who) + ": bad index window");
  }
}

}  // namespace

DipMetric dip_metric(const Vec& values, int plateau_lo, int plateau_hi,
                     int search_lo, int search_hi) {
  const int n = static_cast<int>(values.size());
  check_window(plateau_lo, plateau_hi, n, "dip_metric");
  check_window(search_lo, search_hi, n, "dip_metric");
  DipMetric m;
  const int pn = plateau_hi - plateau_lo;
  m.plateau_mean = values.segment(plateau_lo, pn).mean();
  if (pn > 1) {
    double var =
        (values.segment(plateau_lo, pn).array() - m.plateau_mean).square().sum() /
        (pn - 1);
    m.plateau_sd = std::sqrt(var);
  }
  m.min_index = search_lo;
  m.min_value = values[search_lo];
  for (int i = search_lo; i < search_hi; ++i) {
    if (values[i] < m.min_value) {
      m.min_value = values[i];
      m.min_index = i;
    }
  }
  m.depth = m.plateau_mean - m.min_value;
  return m;
}

RevivalCount count_revival_dips(const Vec& values, int plateau_lo,
                                int plateau_hi, int search_lo, int search_hi,
                                double threshold_fraction) {
  const int n = static_cast<int>(values.size());
  check_window(plateau_lo, plateau_hi, n, "count_revival_dips");
  check_window(search_lo, search_hi, n, "count_revival_dips");
  RevivalCount rc;
  rc.plateau_mean =
      values.segment(plateau_lo, plateau_hi - plateau_lo).mean();
  rc.threshold = threshold_fraction * rc.plateau_mean;
  // A dip is a drop the series makes after having been at the plateau, so
  // counting starts at the first in-window point at or above the threshold.
  // Otherwise the initial growth of a rising curve would register as a dip.
  int i0 = search_lo;
  while (i0 < search_hi && values[i0] < rc.threshold) ++i0;
  bool in_dip = false;
  double global_min = rc.plateau_mean;
  for (int i = i0; i < search_hi; ++i) {
    global_min = std::min(global_min, values[i]);
    bool below = values[i] < rc.threshold;
    if (below && !in_dip) ++rc.dips;
    in_dip = below;
  }
  rc.deepest = rc.plateau_mean - global_min;
  return rc;
}

RampReport detect_ramp(const Vec& t, const Vec& values, int smooth_window) {
  const int n = static_cast<int>(values.size());
  if (t.size() != n) throw std::invalid_argument("detect_ramp: size mismatch");
  if (n < 16) throw std::invalid_argument("detect_ramp: series too short");
  int w = std::min(smooth_window, n % 2 == 0 ? n - 1 : n);
  if (w % 2 == 0) --w;
  Vec sm = moving_median(values, std::max(1, w));

  RampReport rep;
  int dip = 0;
  for (int i = 1; i < n; ++i) {
    if (sm[i] < sm[dip]) dip = i;
  }
  rep.dip_index = dip;

  int tail = std::max(3, n / 10);
  rep.plateau_level = sm.tail(tail).mean();

  int onset = n - 1;
  for (int i = dip + 1; i < n; ++i) {
    if (sm[i] >= rep.plateau_level) {
      onset = i;
      break;
    }
  }
  rep.onset_index = onset;

  int len = onset - dip + 1;
  if (len >= 8) {
    rep.window_ok = true;
    LinearFit fit = linear_fit(t.segment(dip, len), values.segment(dip, len));
    rep.slope = fit.slope;
    rep.t_stat = fit.t_stat;
  }
  return rep;
}

}  // namespace gsc
