#pragma once

#include "gscramble/rng.hpp"
#include "gscramble/types.hpp"

namespace gsc {

// Phase-space samples drawn from the Wigner function of a Gaussian state.
// The Wigner density has covariance sigma / 2 under this normalization
// (exponent -alpha^T sigma^{-1} alpha); the halving here is load-bearing,
// every downstream entropy identity assumes it.
//
// Rows are samples, columns are the 2N quadratures.
Mat sample_wigner(const Mat& sigma, int n, Rng& rng);

struct ShannonEstimate {
  double value = 0.0;      // nats
  double std_error = 0.0;  // delete-one jackknife
};

// Gaussian plug-in differential entropy 1/2 ln((2 pi e)^{2N} det Cov_hat)
// with the determinant accumulated in the log domain. Needs more samples
// than dimensions.
ShannonEstimate plugin_shannon_entropy(const Mat& samples);

struct CorrespondenceReport {
  double estimate = 0.0;
  double std_error = 0.0;
  double predicted = 0.0;  // renyi2(sigma) + N (1 + ln pi)
  double z = 0.0;
};

CorrespondenceReport renyi2_correspondence_check(const Mat& sigma, int n,
                                                 Rng& rng);

}  // namespace gsc
