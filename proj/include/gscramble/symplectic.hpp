#pragma once

#include <vector>

#include "gscramble/types.hpp"

namespace gsc {

// Quadrature ordering throughout is (q_1..q_N, p_1..p_N); the vacuum
// covariance matrix is the identity (hbar = 1).

// The symplectic form J = [[0, I], [-I, 0]].
Mat symplectic_form(int n_modes);

// Applies J to a matrix from the left without materializing J, i.e. returns
// J * m for the block form above; m needs 2N rows, any column count.
Mat apply_form_left(const Mat& m);

struct WilliamsonResult {
  Mat S;                    // symplectic, S * diag(nu, nu) * S^T = sigma
  std::vector<double> nu;   // symplectic eigenvalues, ascending
};

// Symplectic eigenvalues of a symmetric matrix: the moduli of the eigenvalues
// of i*J*sigma, one per +/- pair, ascending. Values within 1e-9 below 1 are
// clamped to 1; larger dips below 1 are reported as-is (callers decide whether
// that is an error). Throws std::invalid_argument if the spectrum cannot be
// grouped into +/- pairs (malformed input) or sigma is not symmetric.
std::vector<double> symplectic_eigenvalues(const Mat& sigma);

// Fast path for symmetric positive definite sigma: eigenvalues of i*J*sigma
// via a Cholesky similarity (L^T J L is antisymmetric with the same
// spectrum). Same clamping policy. Throws on non-positive-definite input.
std::vector<double> symplectic_eigenvalues_pd(const Mat& sigma);

// Williamson decomposition sigma = S diag(nu,nu) S^T with S symplectic.
// sigma must be symmetric positive definite. S is unique only up to
// symplectic-orthogonal freedom in degenerate nu; the contract is
// reconstruction, not a canonical S.
WilliamsonResult williamson(const Mat& sigma);

// True iff sigma is symmetric and its minimum symplectic eigenvalue is
// >= 1 - 1e-9 (the uncertainty relation sigma + iJ >= 0).
bool is_valid_covariance(const Mat& sigma);

// True iff sigma - I >= 0 (within 1e-9), i.e. the state is a statistical
// mixture of coherent states.
bool is_classical(const Mat& sigma);

// ||S J S^T - J||_inf, a cheap symplecticity residual used in checks.
double symplectic_residual(const Mat& S);

}  // namespace gsc
