#include "gscramble/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace gsc {

Mat vacuum_state(int n_modes) {
  if (n_modes <= 0) throw std::invalid_argument("vacuum_state: n_modes <= 0");
  return Mat::Identity(2 * n_modes, 2 * n_modes);
}

Mat squeezed_vacuum(int n_modes, double r) {
  return squeezed_vacuum(std::vector<double>(n_modes, r));
}

Mat squeezed_vacuum(const std::vector<double>& r) {
  const int n = static_cast<int>(r.size());
  if (n == 0) throw std::invalid_argument("squeezed_vacuum: no modes");
  Vec d(2 * n);
  for (int i = 0; i < n; ++i) {
    d[i] = std::exp(-2.0 * r[i]);
    d[n + i] = std::exp(2.0 * r[i]);
  }
  return d.asDiagonal();
}

Mat thermal_state(int n_modes, double n_bar) {
  if (n_modes <= 0) throw std::invalid_argument("thermal_state: n_modes <= 0");
  if (n_bar < 0.0) throw std::invalid_argument("thermal_state: n_bar < 0");
  return (2.0 * n_bar + 1.0) * Mat::Identity(2 * n_modes, 2 * n_modes);
}

Mat add_vacuum_noise(const Mat& sigma, double units) {
  if (units < 0.0) {
    throw std::invalid_argument("add_vacuum_noise: negative noise");
  }
  return sigma + units * Mat::Identity(sigma.rows(), sigma.cols());
}

Mat reduce(const Mat& sigma, const std::vector<int>& modes) {
  const int n = static_cast<int>(sigma.rows()) / 2;
  if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0) {
    throw std::invalid_argument("reduce: expected a 2N x 2N matrix");
  }
  const int k = static_cast<int>(modes.size());
  if (k == 0) throw std::invalid_argument("reduce: empty mode list");
  for (int m : modes) {
    if (m < 0 || m >= n) throw std::invalid_argument("reduce: mode out of range");
  }
  Mat out(2 * k, 2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      out(a, b) = sigma(modes[a], modes[b]);
      out(a, k + b) = sigma(modes[a], n + modes[b]);
      out(k + a, b) = sigma(n + modes[a], modes[b]);
      out(k + a, k + b) = sigma(n + modes[a], n + modes[b]);
    }
  }
  return out;
}

Mat ground_state(const Mat& mq) {
  if (mq.rows() != mq.cols() || mq.rows() == 0) {
    throw std::invalid_argument("ground_state: expected a square matrix");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(mq);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("ground_state: eigensolver failed");
  }
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("ground_state: Mq not positive definite");
  }
  const int n = static_cast<int>(mq.rows());
  Vec sq = solver.eigenvalues().cwiseSqrt();
  Mat v = solver.eigenvectors();
  Mat out = Mat::Zero(2 * n, 2 * n);
  out.topLeftCorner(n, n) = v * sq.cwiseInverse().asDiagonal() * v.transpose();
  out.bottomRightCorner(n, n) = v * sq.asDiagonal() * v.transpose();
  return out;
}

}  // namespace gsc
