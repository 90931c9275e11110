#pragma once

#include <vector>

#include "gscramble/types.hpp"

namespace gsc {

struct TimeGrid {
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  bool log_spaced = false;

  Vec times() const;
};

struct SeriesStats {
  Vec mean;
  Vec std_error;  // standard error of the mean; zero for a single sample
  int n_samples = 0;
};

// Pointwise mean and standard error across samples; all samples must share
// one grid length.
SeriesStats average_series(const std::vector<Vec>& samples);

// Running median with a centered window (shrinks near the edges). Window
// must be odd and >= 1.
Vec moving_median(const Vec& x, int window);

}  // namespace gsc
