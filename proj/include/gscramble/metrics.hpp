#pragma once

#include "gscramble/types.hpp"

namespace gsc {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double se_slope = 0.0;
  double t_stat = 0.0;  // slope / se_slope, 0 when degenerate
  int n = 0;
};

LinearFit linear_fit(const Vec& x, const Vec& y);

// Slope of ln(y) vs ln(t) restricted to t in [t_lo, t_hi]; y must be
// positive there.
LinearFit fit_loglog_slope(const Vec& t, const Vec& y, double t_lo,
                           double t_hi);

// Dip statistics against a reference plateau. Windows are half-open index
// ranges chosen by the caller from the experiment geometry.
struct DipMetric {
  double plateau_mean = 0.0;
  double plateau_sd = 0.0;
  double min_value = 0.0;
  int min_index = 0;
  double depth = 0.0;  // plateau_mean - min_value
};

DipMetric dip_metric(const Vec& values, int plateau_lo, int plateau_hi,
                     int search_lo, int search_hi);

// Counts maximal runs of consecutive points below threshold_fraction times
// the plateau mean, scanning [search_lo, search_hi). The scan begins at the
// first in-window point at or above the threshold, so the initial growth of
// a rising series is not itself counted as a dip.
struct RevivalCount {
  double plateau_mean = 0.0;
  double threshold = 0.0;
  int dips = 0;
  double deepest = 0.0;  // plateau_mean - min after the plateau is reached
};

RevivalCount count_revival_dips(const Vec& values, int plateau_lo,
                                int plateau_hi, int search_lo, int search_hi,
                                double threshold_fraction);

// Slope test on the stretch between the global dip of the smoothed series
// and the point where it first comes back up to the late-time plateau
// level. The fit runs on the raw series; smoothing only places the window.
struct RampReport {
  int dip_index = 0;
  int onset_index = 0;
  double plateau_level = 0.0;
  double slope = 0.0;
  double t_stat = 0.0;
  bool window_ok = false;  // enough points to fit
};

RampReport detect_ramp(const Vec& t, const Vec& values, int smooth_window);

}  // namespace gsc
