#include "gscramble/wigner.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "gscramble/entropy.hpp"

namespace gsc {

Mat sample_wigner(const Mat& sigma, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_wigner: n < 1");
  const int dim = static_cast<int>(sigma.rows());
  if (sigma.cols() != dim || dim == 0 || dim % 2 != 0) {
    throw std::invalid_argument("sample_wigner: expected a 2N x 2N matrix");
  }
  Eigen::LLT<Mat> llt(0.5 * sigma);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("sample_wigner: sigma not positive definite");
  }
  Mat l = llt.matrixL();
  Mat samples(n, dim);
  Vec z(dim);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < dim; ++d) z[d] = rng.normal();
    samples.row(i) = (l * z).transpose();
  }
  return samples;
}

ShannonEstimate plugin_shannon_entropy(const Mat& samples) {
  const int n = static_cast<int>(samples.rows());
  const int dim = static_cast<int>(samples.cols());
  if (n < dim + 2) {
    throw std::invalid_argument(
        "plugin_shannon_entropy: need more samples than dimensions");
  }
  Vec mean = samples.colwise().mean();
  Mat centered = samples.rowwise() - mean.transpose();
  Mat a = centered.transpose() * centered;  // scatter matrix

  Eigen::LLT<Mat> llt(a);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(
        "plugin_shannon_entropy: singular sample covariance");
  }
  double logdet_a = 0.0;
  for (int i = 0; i < dim; ++i) logdet_a += 2.0 * std::log(llt.matrixL()(i, i));

  const double two_pi_e = 2.0 * kPi * std::exp(1.0);
  ShannonEstimate est;
  est.value =
      0.5 * (dim * std::log(two_pi_e) + logdet_a - dim * std::log(n - 1.0));

  // Delete-one jackknife. Removing sample i downdates the scatter matrix by
  // rank one, so each leave-one-out log-determinant is a log1p of a
  // quadratic form; only those terms vary across i.
  Mat solved = llt.solve(centered.transpose());  // dim x n
  double c_scale = static_cast<double>(n) / (n - 1.0);
  Vec h(n);
  for (int i = 0; i < n; ++i) {
    double q = centered.row(i).dot(solved.col(i));
    double arg = -c_scale * q;
    if (arg <= -1.0) {
      throw std::runtime_error(
          "plugin_shannon_entropy: leave-one-out covariance singular");
    }
    h[i] = 0.5 * std::log1p(arg);
  }
  double h_bar = h.mean();
  double var = (h.array() - h_bar).square().sum() * (n - 1.0) / n;
  est.std_error = std::sqrt(var);
  return est;
}

CorrespondenceReport renyi2_correspondence_check(const Mat& sigma, int n,
                                                 Rng& rng) {
  Mat samples = sample_wigner(sigma, n, rng);
  ShannonEstimate est = plugin_shannon_entropy(samples);
  const int n_modes = static_cast<int>(sigma.rows()) / 2;
  CorrespondenceReport rep;
  rep.estimate = est.value;
  rep.std_error = est.std_error;
  rep.predicted = renyi2_entropy(sigma) + n_modes * (1.0 + std::log(kPi));
  rep.z = (rep.estimate - rep.predicted) / est.std_error;
  return rep;
}

}  // namespace gsc
