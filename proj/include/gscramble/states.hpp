#pragma once

#include <vector>

#include "gscramble/types.hpp"

namespace gsc {

// Covariance matrices for standard Gaussian states, quadrature ordering
// (q_1..q_N, p_1..p_N), vacuum = identity, first moments always zero.

Mat vacuum_state(int n_modes);

// Single squeezing parameter r applied to every mode:
// diag(e^{-2r} I, e^{+2r} I).
Mat squeezed_vacuum(int n_modes, double r);

// Per-mode squeezing parameters.
Mat squeezed_vacuum(const std::vector<double>& r);

// Thermal state with mean occupation n_bar per mode: (2 n_bar + 1) I.
Mat thermal_state(int n_modes, double n_bar);

// sigma + units * I; one unit on a squeezed vacuum gives
// diag(e^{-2r}+1, e^{+2r}+1), a classical (coherent-mixture) state.
Mat add_vacuum_noise(const Mat& sigma, double units);

// Reduced covariance matrix on the given modes (0-based, need not be
// contiguous or sorted; order of the result follows `modes`).
Mat reduce(const Mat& sigma, const std::vector<int>& modes);

// Ground state of H = 1/2 (p^T p + q^T Mq q): sigma = diag(Mq^{-1/2},
// Mq^{1/2}). Mq must be symmetric positive definite.
Mat ground_state(const Mat& mq);

}  // namespace gsc
