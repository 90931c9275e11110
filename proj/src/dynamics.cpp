#include "gscramble/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gsc {

EvolutionOperator::EvolutionOperator(const QuadraticHamiltonian& h)
    : nm_(normal_modes(h)) {}

EvolutionOperator::EvolutionOperator(NormalModeData nm) : nm_(std::move(nm)) {}

Mat EvolutionOperator::at(double t) const {
  const int n = n_modes();
  Vec c(n), s_over(n), s_times(n);
  for (int k = 0; k < n; ++k) {
    double w = nm_.omegas[k];
    c[k] = std::cos(w * t);
    double s = std::sin(w * t);
    s_over[k] = s / w;
    s_times[k] = s * w;
  }
  const Mat& v = nm_.V;
  Mat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = v * c.asDiagonal() * v.transpose();
  out.bottomRightCorner(n, n) = out.topLeftCorner(n, n);
  out.topRightCorner(n, n) = v * s_over.asDiagonal() * v.transpose();
  out.bottomLeftCorner(n, n) = -(v * s_times.asDiagonal() * v.transpose());
  return out;
}

Mat EvolutionOperator::evolve(const Mat& sigma, double t) const {
  if (sigma.rows() != 2 * n_modes() || sigma.cols() != 2 * n_modes()) {
    throw std::invalid_argument("EvolutionOperator::evolve: size mismatch");
  }
  Mat s = at(t);
  return s * sigma * s.transpose();
}

Mat evolve(const QuadraticHamiltonian& h, const Mat& sigma, double t) {
  return EvolutionOperator(h).evolve(sigma, t);
}

ReducedEvolution::ReducedEvolution(const EvolutionOperator& op,
                                   const Mat& sigma0, std::vector<int> modes)
    : modes_(std::move(modes)), omegas_(op.modes().omegas) {
  const int n = op.n_modes();
  if (sigma0.rows() != 2 * n || sigma0.cols() != 2 * n) {
    throw std::invalid_argument("ReducedEvolution: sigma0 size mismatch");
  }
  if (modes_.empty()) {
    throw std::invalid_argument("ReducedEvolution: no tracked modes");
  }
  for (int m : modes_) {
    if (m < 0 || m >= n) {
      throw std::invalid_argument("ReducedEvolution: mode out of range");
    }
  }
  const Mat& v = op.modes().V;
  rows_q_.resize(static_cast<int>(modes_.size()), n);
  for (int i = 0; i < static_cast<int>(modes_.size()); ++i) {
    rows_q_.row(i) = v.row(modes_[i]);
  }
  // Rotate sigma0 into the frame where each normal mode evolves
  // independently: sigma_tilde = (V+V)^T sigma0 (V+V), blockwise.
  sigma_tilde_.resize(2 * n, 2 * n);
  sigma_tilde_.topLeftCorner(n, n) =
      v.transpose() * sigma0.topLeftCorner(n, n) * v;
  sigma_tilde_.topRightCorner(n, n) =
      v.transpose() * sigma0.topRightCorner(n, n) * v;
  sigma_tilde_.bottomLeftCorner(n, n) =
      sigma_tilde_.topRightCorner(n, n).transpose();
  sigma_tilde_.bottomRightCorner(n, n) =
      v.transpose() * sigma0.bottomRightCorner(n, n) * v;
}

Mat ReducedEvolution::at(double t) const {
  const int n = static_cast<int>(omegas_.size());
  const int m = static_cast<int>(modes_.size());
  // Rows of S(t) restricted to the tracked quadratures, written in the
  // normal-mode frame: A = R_red * C(t) with C(t) the per-mode 2x2 rotation.
  Mat a(2 * m, 2 * n);
  for (int k = 0; k < n; ++k) {
    double w = omegas_[k];
    double c = std::cos(w * t);
    double s = std::sin(w * t);
    for (int i = 0; i < m; ++i) {
      double r = rows_q_(i, k);
      a(i, k) = r * c;          // q-row, q-col
      a(i, n + k) = r * s / w;  // q-row, p-col
      a(m + i, k) = -r * s * w;
      a(m + i, n + k) = r * c;
    }
  }
  Mat b = a * sigma_tilde_;
  return b * a.transpose();
}

TransferMatrixSeries::TransferMatrixSeries(PassiveRandomModel model)
    : model_(std::move(model)) {}

CMat TransferMatrixSeries::at(double t) const {
  const int n = static_cast<int>(model_.omegas.size());
  CVec phases(n);
  for (int k = 0; k < n; ++k) {
    phases[k] = std::exp(Complex(0.0, -model_.omegas[k] * t));
  }
  return model_.U * phases.asDiagonal() * model_.U.adjoint();
}

CMat transfer_matrix(const PassiveRandomModel& model, double t) {
  return TransferMatrixSeries(model).at(t);
}

Mat evolve_passive(const Mat& sigma, const PassiveUnitary& v) {
  Mat o = passive_to_symplectic(v);
  if (o.rows() != sigma.rows()) {
    throw std::invalid_argument("evolve_passive: size mismatch");
  }
  return o * sigma * o.transpose();
}

namespace {

// 4x4 symplectic block of u in the (q_a, q_b, p_a, p_b) ordering.
Eigen::Matrix4d two_mode_block(const CMat& u) {
  Eigen::Matrix4d g;
  g << u(0, 0).real(), u(0, 1).real(), -u(0, 0).imag(), -u(0, 1).imag(),
      u(1, 0).real(), u(1, 1).real(), -u(1, 0).imag(), -u(1, 1).imag(),
      u(0, 0).imag(), u(0, 1).imag(), u(0, 0).real(), u(0, 1).real(),
      u(1, 0).imag(), u(1, 1).imag(), u(1, 0).real(), u(1, 1).real();
  return g;
}

void check_two_mode_args(const Mat& m, const CMat& u, int a, int b,
                         const char* who) {
  const int n = static_cast<int>(m.rows()) / 2;
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument(std::string(who) + ": u must be 2x2");
  }
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
    throw std::invalid_argument(std::string(who) + ": bad mode indices");
  }
}

}  // namespace

void apply_two_mode_rows(Mat& m, const CMat& u, int a, int b) {
  check_two_mode_args(m, u, a, b, "apply_two_mode_rows");
  const int n = static_cast<int>(m.rows()) / 2;
  const Eigen::Matrix4d g = two_mode_block(u);
  const int idx[4] = {a, b, n + a, n + b};
  Eigen::Matrix<double, 4, Eigen::Dynamic> rows(4, m.cols());
  for (int r = 0; r < 4; ++r) rows.row(r) = m.row(idx[r]);
  Eigen::Matrix<double, 4, Eigen::Dynamic> new_rows = g * rows;
  for (int r = 0; r < 4; ++r) m.row(idx[r]) = new_rows.row(r);
}

void apply_two_mode_passive(Mat& sigma, const CMat& u, int a, int b) {
  check_two_mode_args(sigma, u, a, b, "apply_two_mode_passive");
  const int n = static_cast<int>(sigma.rows()) / 2;
  const Eigen::Matrix4d g = two_mode_block(u);
  const int idx[4] = {a, b, n + a, n + b};
  // Row update sigma <- G sigma (only 4 rows change), then the mirrored
  // column update.
  apply_two_mode_rows(sigma, u, a, b);
  Eigen::Matrix<double, Eigen::Dynamic, 4> cols(2 * n, 4);
  for (int c = 0; c < 4; ++c) cols.col(c) = sigma.col(idx[c]);
  Eigen::Matrix<double, Eigen::Dynamic, 4> new_cols = cols * g.transpose();
  for (int c = 0; c < 4; ++c) sigma.col(idx[c]) = new_cols.col(c);
}

CircuitEvolution::CircuitEvolution(CircuitSpec spec, Rng& rng)
    : spec_(spec) {
  if (spec_.n_modes < 2 || spec_.n_modes % 2 != 0) {
    throw std::invalid_argument("CircuitEvolution: N must be even and >= 2");
  }
  if (spec_.policy == BsPolicy::FixedRandom) {
    fixed_units_.reserve(spec_.n_modes);
    for (int i = 0; i < spec_.n_modes; ++i) {
      fixed_units_.push_back(beam_splitter(BsKind::HaarRandom, rng));
    }
  }
}

void CircuitEvolution::apply_layer(Mat& target, int layer, Rng& rng,
                                   bool rows_only) {
  const int n = spec_.n_modes;
  for (int i = 0; i < n / 2; ++i) {
    int a = (layer == 0) ? 2 * i : (2 * i + 1);
    int b = (a + 1) % n;
    CMat u;
    switch (spec_.policy) {
      case BsPolicy::Balanced:
        u = beam_splitter(BsKind::Balanced, rng);
        break;
      case BsPolicy::FixedRandom:
        u = fixed_units_[layer * (n / 2) + i];
        break;
      case BsPolicy::ResampledEachStep:
        u = beam_splitter(BsKind::HaarRandom, rng);
        break;
    }
    if (rows_only) {
      apply_two_mode_rows(target, u, a, b);
    } else {
      apply_two_mode_passive(target, u, a, b);
    }
  }
}

void CircuitEvolution::step(Mat& sigma, Rng& rng) {
  if (sigma.rows() != 2 * spec_.n_modes || sigma.cols() != 2 * spec_.n_modes) {
    throw std::invalid_argument("CircuitEvolution::step: size mismatch");
  }
  apply_layer(sigma, 0, rng, false);
  apply_layer(sigma, 1, rng, false);
}

void CircuitEvolution::step_frame(Mat& frame, Rng& rng) {
  if (frame.rows() != 2 * spec_.n_modes) {
    throw std::invalid_argument("CircuitEvolution::step_frame: size mismatch");
  }
  apply_layer(frame, 0, rng, true);
  apply_layer(frame, 1, rng, true);
}

Mat circuit_step(const Mat& sigma, const CircuitSpec& spec, Rng& rng) {
  if (spec.policy == BsPolicy::FixedRandom) {
    throw std::invalid_argument(
        "circuit_step: FixedRandom needs a CircuitEvolution instance");
  }
  CircuitEvolution circ(spec, rng);
  Mat out = sigma;
  circ.step(out, rng);
  return out;
}

double total_photons(const Mat& sigma) {
  const int dim = static_cast<int>(sigma.rows());
  return (sigma.trace() - dim) / 4.0;
}

}  // namespace gsc
