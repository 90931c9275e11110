#include "gscramble/entropy.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gscramble/states.hpp"
#include "gscramble/symplectic.hpp"

namespace gsc {

double symplectic_eigenvalue_entropy(double nu) {
  if (nu < 1.0 - 1e-9) {
    throw std::domain_error("symplectic_eigenvalue_entropy: nu < 1");
  }
  if (nu - 1.0 < 1e-12) return 0.0;
  double p = 0.5 * (nu + 1.0);
  double m = 0.5 * (nu - 1.0);
  return p * std::log(p) - m * std::log(m);
}

namespace {

std::vector<double> spectrum(const Mat& sigma) {
  // The Cholesky route is both the fast and the numerically gentle path;
  // fall back to the general solver for inputs it rejects.
  try {
    return symplectic_eigenvalues_pd(sigma);
  } catch (const std::invalid_argument&) {
    return symplectic_eigenvalues(sigma);
  }
}

}  // namespace

double von_neumann_entropy(const Mat& sigma) {
  double total = 0.0;
  for (double nu : spectrum(sigma)) total += symplectic_eigenvalue_entropy(nu);
  return total;
}

double renyi2_entropy(const Mat& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0) {
    throw std::invalid_argument("renyi2_entropy: expected a square matrix");
  }
  Eigen::LDLT<Mat> ldlt(sigma);
  if (ldlt.info() != Eigen::Success) {
    throw std::invalid_argument("renyi2_entropy: factorization failed");
  }
  Vec d = ldlt.vectorD();
  double acc = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    if (d[i] <= 0.0) {
      throw std::invalid_argument("renyi2_entropy: sigma not positive definite");
    }
    acc += std::log(d[i]);
  }
  return 0.5 * acc;
}

double entropy_of(const Mat& sigma, EntropyKind kind) {
  return kind == EntropyKind::VonNeumann ? von_neumann_entropy(sigma)
                                         : renyi2_entropy(sigma);
}

double block_entropy(const Mat& sigma, const std::vector<int>& modes,
                     EntropyKind kind) {
  return entropy_of(reduce(sigma, modes), kind);
}

namespace {

void require_disjoint(const std::vector<int>& a, const std::vector<int>& b,
                      const char* who) {
  std::vector<int> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<int> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) {
    throw std::invalid_argument(std::string(who) + ": subsets overlap");
  }
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double mutual_information(const Mat& sigma, const std::vector<int>& a,
                          const std::vector<int>& b, EntropyKind kind) {
  require_disjoint(a, b, "mutual_information");
  return block_entropy(sigma, a, kind) + block_entropy(sigma, b, kind) -
         block_entropy(sigma, concat(a, b), kind);
}

double tripartite_mi(const Mat& sigma, const std::vector<int>& a,
                     const std::vector<int>& b, const std::vector<int>& c,
                     EntropyKind kind) {
  require_disjoint(a, b, "tripartite_mi");
  require_disjoint(a, c, "tripartite_mi");
  require_disjoint(b, c, "tripartite_mi");
  double s_a = block_entropy(sigma, a, kind);
  double s_b = block_entropy(sigma, b, kind);
  double s_c = block_entropy(sigma, c, kind);
  double s_ab = block_entropy(sigma, concat(a, b), kind);
  double s_ac = block_entropy(sigma, concat(a, c), kind);
  double s_bc = block_entropy(sigma, concat(b, c), kind);
  double s_abc = block_entropy(sigma, concat(a, concat(b, c)), kind);
  return s_a + s_b + s_c - s_ab - s_ac - s_bc + s_abc;
}

std::vector<int> contiguous_modes(int start, int count) {
  if (start < 0 || count <= 0) {
    throw std::invalid_argument("contiguous_modes: bad range");
  }
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = start + i;
  return out;
}

TriPartition tri_partition(int n, int n_a, int n_b, int n_c, int gap_ab,
                           int gap_bc, int start) {
  if (gap_ab < 0 || gap_bc < 0) {
    throw std::invalid_argument("tri_partition: negative gap");
  }
  int end = start + n_a + gap_ab + n_b + gap_bc + n_c;
  if (start < 0 || end > n) {
    throw std::invalid_argument("tri_partition: blocks do not fit");
  }
  TriPartition p;
  p.A = contiguous_modes(start, n_a);
  p.B = contiguous_modes(start + n_a + gap_ab, n_b);
  p.C = contiguous_modes(start + n_a + gap_ab + n_b + gap_bc, n_c);
  return p;
}

}  // namespace gsc
