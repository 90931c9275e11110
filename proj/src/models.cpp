#include "gscramble/models.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

#include "gscramble/symplectic.hpp"

namespace gsc {

bool QuadraticHamiltonian::standard_family() const {
  if (mqp.size() != 0 && mqp.cwiseAbs().maxCoeff() != 0.0) return false;
  if (mp.size() != 0) {
    const int n = n_modes();
    if (mp.rows() != n || mp.cols() != n) return false;
    if ((mp - Mat::Identity(n, n)).cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

Mat QuadraticHamiltonian::assemble() const {
  const int n = n_modes();
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = mq;
  m.bottomRightCorner(n, n) =
      (mp.size() != 0) ? mp : Mat::Identity(n, n);
  if (mqp.size() != 0) {
    m.topRightCorner(n, n) = mqp;
    m.bottomLeftCorner(n, n) = mqp.transpose();
  }
  return m;
}

double DistributionSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Uniform:
      return rng.uniform(a, b);
    case Kind::ExponentialShifted:
      return offset + rng.exponential(rate);
  }
  throw std::logic_error("DistributionSpec: bad kind");
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
  DistributionSpec d;
  d.kind = Kind::Uniform;
  d.a = a;
  d.b = b;
  return d;
}

DistributionSpec DistributionSpec::exponential_shifted(double rate,
                                                       double offset) {
  DistributionSpec d;
  d.kind = Kind::ExponentialShifted;
  d.rate = rate;
  d.offset = offset;
  return d;
}

QuadraticHamiltonian hl_hamiltonian(int n, double m) {
  if (n < 2) throw std::invalid_argument("hl_hamiltonian: N < 2");
  if (m <= 0.0) throw std::invalid_argument("hl_hamiltonian: m <= 0");
  QuadraticHamiltonian h;
  h.mq = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h.mq(i, i) += m * m + 2.0;
    h.mq(i, (i + 1) % n) -= 1.0;
    h.mq((i + 1) % n, i) -= 1.0;
  }
  return h;
}

QuadraticHamiltonian dhl_hamiltonian(int n, double m, double j_low,
                                     double j_high, Rng& rng) {
  if (j_low < 0.0 || j_low > j_high) {
    throw std::invalid_argument("dhl_hamiltonian: need 0 <= j_low <= j_high");
  }
  std::vector<double> j(std::max(n, 0));
  for (auto& v : j) v = rng.uniform(j_low, j_high);
  return dhl_hamiltonian(n, m, j);
}

QuadraticHamiltonian dhl_hamiltonian(int n, double m,
                                     const std::vector<double>& couplings) {
  if (n < 2) throw std::invalid_argument("dhl_hamiltonian: N < 2");
  if (static_cast<int>(couplings.size()) != n) {
    throw std::invalid_argument("dhl_hamiltonian: need N couplings");
  }
  QuadraticHamiltonian h;
  h.mq = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (couplings[i] < 0.0) {
      throw std::invalid_argument("dhl_hamiltonian: negative coupling");
    }
    int next = (i + 1) % n;
    h.mq(i, i) += m * m + couplings[i];
    h.mq(next, next) += couplings[i];
    h.mq(i, next) -= couplings[i];
    h.mq(next, i) -= couplings[i];
  }
  return h;
}

Mat goe_sample(int n, double scale, Rng& rng) {
  if (n < 1) throw std::invalid_argument("goe_sample: N < 1");
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = scale * rng.normal();
  return 0.5 * (g + g.transpose());
}

CMat gue_sample(int n, double scale, Rng& rng) {
  if (n < 1) throw std::invalid_argument("gue_sample: N < 1");
  CMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = scale * rng.normal_complex();
  return 0.5 * (g + g.adjoint());
}

QuadraticHamiltonian random_mq_hamiltonian(int n, Ensemble ensemble,
                                           double scale, double shift_margin,
                                           Rng& rng) {
  if (n < 2) throw std::invalid_argument("random_mq_hamiltonian: N < 2");
  if (shift_margin <= 0.0) {
    throw std::invalid_argument("random_mq_hamiltonian: shift_margin <= 0");
  }
  Mat sym;
  if (ensemble == Ensemble::GOE) {
    sym = goe_sample(n, scale, rng);
  } else {
    // H = 1/2 q^T Mq q with commuting q's never sees the antisymmetric
    // imaginary part of a Hermitian sample, so the real part carries the
    // whole quadratic form.
    sym = gue_sample(n, scale, rng).real();
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  double shift = std::abs(solver.eigenvalues().minCoeff()) + shift_margin;
  QuadraticHamiltonian h;
  h.mq = sym + shift * Mat::Identity(n, n);
  h.spectral_shift = shift;
  return h;
}

PassiveUnitary haar_unitary(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_unitary: N < 1");
  CMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal_complex();
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases of R so the distribution is exactly Haar.
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    Complex phase = (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

PassiveRandomModel passive_random_model(int n,
                                        const DistributionSpec& omega_dist,
                                        Rng& rng) {
  PassiveRandomModel model;
  model.U = haar_unitary(n, rng);
  model.omegas.resize(n);
  for (int i = 0; i < n; ++i) {
    double w = omega_dist.sample(rng);
    if (w <= 0.0) {
      throw std::invalid_argument(
          "passive_random_model: frequency distribution produced w <= 0");
    }
    model.omegas[i] = w;
  }
  return model;
}

PassiveUnitary beam_splitter(BsKind kind, Rng& rng) {
  if (kind == BsKind::Balanced) {
    CMat u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u << Complex(s, 0), Complex(0, s), Complex(0, s), Complex(s, 0);
    return u;
  }
  return haar_unitary(2, rng);
}

NormalModeData normal_modes(const QuadraticHamiltonian& h) {
  if (!h.standard_family()) {
    throw std::invalid_argument(
        "normal_modes: only Mqp = 0, Mp = I Hamiltonians are supported");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(h.mq);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("normal_modes: eigensolver failed");
  }
  if (solver.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("normal_modes: Mq not positive definite");
  }
  const int n = h.n_modes();
  NormalModeData nm;
  nm.omegas = solver.eigenvalues().cwiseSqrt();
  nm.V = solver.eigenvectors();
  nm.S = Mat::Zero(2 * n, 2 * n);
  Vec root = nm.omegas.cwiseSqrt();
  nm.S.topLeftCorner(n, n) = nm.V * root.cwiseInverse().asDiagonal();
  nm.S.bottomRightCorner(n, n) = nm.V * root.asDiagonal();
  return nm;
}

Mat passive_to_symplectic(const PassiveUnitary& u) {
  const int n = static_cast<int>(u.rows());
  if (u.cols() != n || n == 0) {
    throw std::invalid_argument("passive_to_symplectic: not square");
  }
  if ((u * u.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("passive_to_symplectic: input not unitary");
  }
  Mat o(2 * n, 2 * n);
  o.topLeftCorner(n, n) = u.real();
  o.topRightCorner(n, n) = -u.imag();
  o.bottomLeftCorner(n, n) = u.imag();
  o.bottomRightCorner(n, n) = u.real();
  return o;
}

}  // namespace gsc
