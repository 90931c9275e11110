#include "gscramble/symplectic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsc {

namespace {

void require_even_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw std::invalid_argument(std::string(who) +
                                ": expected a 2N x 2N matrix");
  }
}

void require_symmetric(const Mat& m, const char* who) {
  require_even_square(m, who);
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
  }
}

// Groups the moduli of a spectrum that should consist of +/- pairs (pure
// imaginary for J*sigma). Sorts moduli and pairs adjacent entries.
std::vector<double> pair_up_moduli(const CVec& eigs, double scale) {
  const int dim = static_cast<int>(eigs.size());
  std::vector<double> mods(dim);
  for (int i = 0; i < dim; ++i) mods[i] = std::abs(eigs[i]);
  std::sort(mods.begin(), mods.end());
  std::vector<double> out;
  out.reserve(dim / 2);
  double tol = 1e-8 * std::max(1.0, scale);
  for (int i = 0; i < dim; i += 2) {
    if (std::abs(mods[i] - mods[i + 1]) > tol * std::max(1.0, mods[i])) {
      throw std::invalid_argument(
          "symplectic_eigenvalues: spectrum does not split into +/- pairs");
    }
    out.push_back(0.5 * (mods[i] + mods[i + 1]));
  }
  return out;
}

void clamp_near_one(std::vector<double>& nu) {
  for (double& v : nu) {
    if (v < 1.0 && v > 1.0 - 1e-9) v = 1.0;
  }
}

}  // namespace

Mat symplectic_form(int n_modes) {
  if (n_modes <= 0) throw std::invalid_argument("symplectic_form: n_modes <= 0");
  Mat J = Mat::Zero(2 * n_modes, 2 * n_modes);
  J.topRightCorner(n_modes, n_modes) = Mat::Identity(n_modes, n_modes);
  J.bottomLeftCorner(n_modes, n_modes) = -Mat::Identity(n_modes, n_modes);
  return J;
}

Mat apply_form_left(const Mat& m) {
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument("apply_form_left: expected 2N rows");
  }
  const int n = static_cast<int>(m.rows()) / 2;
  Mat out(m.rows(), m.cols());
  out.topRows(n) = m.bottomRows(n);
  out.bottomRows(n) = -m.topRows(n);
  return out;
}

std::vector<double> symplectic_eigenvalues(const Mat& sigma) {
  require_symmetric(sigma, "symplectic_eigenvalues");
  // J*sigma computed blockwise: rows swap with a sign.
  Mat js = apply_form_left(sigma);
  Eigen::EigenSolver<Mat> solver(js, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symplectic_eigenvalues: eigensolver failed");
  }
  double scale = sigma.cwiseAbs().maxCoeff();
  auto nu = pair_up_moduli(solver.eigenvalues(), scale);
  clamp_near_one(nu);
  return nu;
}

std::vector<double> symplectic_eigenvalues_pd(const Mat& sigma) {
  require_symmetric(sigma, "symplectic_eigenvalues_pd");
  Eigen::LLT<Mat> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(
        "symplectic_eigenvalues_pd: matrix not positive definite");
  }
  Mat L = llt.matrixL();
  // B = L^T J L is antisymmetric and similar to J*sigma (J sigma =
  // L^{-T} (L^T J L) L^T up to transposition of the similarity), so its
  // eigenvalues are +/- i nu. The symmetric product B*B^T = -B^2 has
  // eigenvalues nu^2, each doubled.
  Mat B = L.transpose() * apply_form_left(L);
  Mat BBt = B * B.transpose();
  Eigen::SelfAdjointEigenSolver<Mat> solver(BBt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symplectic_eigenvalues_pd: eigensolver failed");
  }
  const int dim = static_cast<int>(sigma.rows());
  Vec lam = solver.eigenvalues();  // ascending, pairs (nu^2, nu^2)
  std::vector<double> nu;
  nu.reserve(dim / 2);
  for (int i = 0; i < dim; i += 2) {
    double v = 0.5 * (std::sqrt(std::max(0.0, lam[i])) +
                      std::sqrt(std::max(0.0, lam[i + 1])));
    nu.push_back(v);
  }
  clamp_near_one(nu);
  return nu;
}

WilliamsonResult williamson(const Mat& sigma) {
  require_symmetric(sigma, "williamson");
  const int dim = static_cast<int>(sigma.rows());
  const int n = dim / 2;

  Eigen::SelfAdjointEigenSolver<Mat> root_solver(sigma);
  if (root_solver.info() != Eigen::Success) {
    throw std::runtime_error("williamson: eigensolver failed");
  }
  if (root_solver.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("williamson: matrix not positive definite");
  }
  Mat half = root_solver.operatorSqrt();        // sigma^{1/2}
  Mat half_inv = root_solver.operatorInverseSqrt();

  // K = i * sigma^{1/2} J sigma^{1/2} is Hermitian with eigenvalues +/- nu.
  CMat K = Complex(0.0, 1.0) * (half * apply_form_left(half)).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> ksolver(K);
  if (ksolver.info() != Eigen::Success) {
    throw std::runtime_error("williamson: eigensolver failed on i s J s");
  }

  // Keep the positive half of the spectrum. For each eigenvector w = u + i v
  // with K w = nu w, the real pair (sqrt(2) v, sqrt(2) u) is symplectically
  // normalized in the metric defined by sigma^{1/2} J sigma^{1/2}.
  std::vector<int> pos;
  pos.reserve(n);
  for (int i = 0; i < dim; ++i) {
    if (ksolver.eigenvalues()[i] > 0.0) pos.push_back(i);
  }
  if (static_cast<int>(pos.size()) != n) {
    throw std::runtime_error(
        "williamson: spectrum of i s J s not split into +/- halves");
  }
  // Ascending nu ordering.
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    return ksolver.eigenvalues()[a] < ksolver.eigenvalues()[b];
  });

  std::vector<double> nu(n);
  Mat Q(dim, dim);  // columns: qhat_1..qhat_n, phat_1..phat_n
  for (int k = 0; k < n; ++k) {
    nu[k] = ksolver.eigenvalues()[pos[k]];
    CVec w = ksolver.eigenvectors().col(pos[k]);
    Q.col(k) = std::sqrt(2.0) * w.imag();
    Q.col(n + k) = std::sqrt(2.0) * w.real();
  }

  Vec dscale(dim);
  for (int k = 0; k < n; ++k) {
    dscale[k] = 1.0 / std::sqrt(nu[k]);
    dscale[n + k] = dscale[k];
  }
  Mat S = half * (Q * dscale.asDiagonal());
  clamp_near_one(nu);
  return {std::move(S), std::move(nu)};
}

bool is_valid_covariance(const Mat& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0 ||
      sigma.rows() == 0) {
    return false;
  }
  double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(sigma, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() <= 0.0) return false;
  try {
    auto nu = symplectic_eigenvalues_pd(sigma);
    return *std::min_element(nu.begin(), nu.end()) >= 1.0 - 1e-9;
  } catch (const std::exception&) {
    return false;
  }
}

bool is_classical(const Mat& sigma) {
  require_symmetric(sigma, "is_classical");
  Mat shifted = sigma - Mat::Identity(sigma.rows(), sigma.cols());
  Eigen::SelfAdjointEigenSolver<Mat> solver(shifted, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -1e-9;
}

double symplectic_residual(const Mat& S) {
  require_even_square(S, "symplectic_residual");
  Mat J = symplectic_form(static_cast<int>(S.rows()) / 2);
  return (S * J * S.transpose() - J).cwiseAbs().maxCoeff();
}

}  // namespace gsc
