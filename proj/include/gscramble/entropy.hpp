#pragma once

#include <vector>

#include "gscramble/types.hpp"

namespace gsc {

enum class EntropyKind { VonNeumann, Renyi2 };

// Entropy contribution of one symplectic eigenvalue, in nats:
// (nu+1)/2 ln((nu+1)/2) - (nu-1)/2 ln((nu-1)/2). Returns 0 for
// nu - 1 < 1e-12; throws std::domain_error for nu < 1 - 1e-9.
double symplectic_eigenvalue_entropy(double nu);

// Sum of the above over the symplectic spectrum of sigma.
double von_neumann_entropy(const Mat& sigma);

// 1/2 ln det sigma, accumulated in the log domain so large blocks cannot
// overflow. Throws on non-positive-definite input.
double renyi2_entropy(const Mat& sigma);

double entropy_of(const Mat& sigma, EntropyKind kind);

// Entropy of the state reduced to `modes`.
double block_entropy(const Mat& sigma, const std::vector<int>& modes,
                     EntropyKind kind);

// S(A) + S(B) - S(AB). A and B must be disjoint.
double mutual_information(const Mat& sigma, const std::vector<int>& a,
                          const std::vector<int>& b, EntropyKind kind);

// I3 = I2(A:B) + I2(A:C) - I2(A:BC), expanded into the seven block
// entropies so each reduction is diagonalized once.
double tripartite_mi(const Mat& sigma, const std::vector<int>& a,
                     const std::vector<int>& b, const std::vector<int>& c,
                     EntropyKind kind);

// Mode indices start, start+1, ..., start+count-1.
std::vector<int> contiguous_modes(int start, int count);

struct TriPartition {
  std::vector<int> A, B, C;
};

// Contiguous A, B, C blocks in mode order with configurable gaps:
// A = [start, start+n_a), then gap_ab skipped modes, then B, then gap_bc,
// then C. Everything must fit inside [0, n).
TriPartition tri_partition(int n, int n_a, int n_b, int n_c, int gap_ab,
                           int gap_bc, int start = 0);

}  // namespace gsc
