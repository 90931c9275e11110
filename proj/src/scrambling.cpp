#include "gscramble/scrambling.hpp"

#include <cmath>
#include <stdexcept>

namespace gsc {

GroundOtoc::GroundOtoc(const QuadraticHamiltonian& h) {
  auto nm = normal_modes(h);
  omegas_ = std::move(nm.omegas);
  v_ = std::move(nm.V);
}

double GroundOtoc::cos_element(int j, int k, double t) const {
  const int n = static_cast<int>(omegas_.size());
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw std::invalid_argument("GroundOtoc: mode index out of range");
  }
  // (V diag(cos w t) V^T)_jk = delta_jk - 2 sum_n V_jn sin^2(w_n t/2) V_kn.
  double acc = 0.0;
  for (int m = 0; m < n; ++m) {
    double s = std::sin(0.5 * omegas_[m] * t);
    acc += v_(j, m) * s * s * v_(k, m);
  }
  return (j == k ? 1.0 : 0.0) - 2.0 * acc;
}

double GroundOtoc::at(int j, int k, double t) const {
  double c = cos_element(j, k, t);
  return c * c;
}

double GroundOtoc::diagonal_deficit(int j, double t) const {
  return 1.0 - std::abs(cos_element(j, j, t));
}

double otoc_quadrature_ground(const QuadraticHamiltonian& h, int j, int k,
                              double t) {
  return GroundOtoc(h).at(j, k, t);
}

CMat v_matrix(const PassiveRandomModel& model, double t) {
  const int n = static_cast<int>(model.omegas.size());
  CVec phases(n);
  for (int m = 0; m < n; ++m) {
    phases[m] = std::exp(Complex(0.0, model.omegas[m] * t));
  }
  return model.U * phases.asDiagonal() * model.U.adjoint();
}

Complex v_matrix_element(const PassiveRandomModel& model, int j, int k,
                         double t) {
  const int n = static_cast<int>(model.omegas.size());
  if (j < 0 || k < 0 || j >= n || k >= n) {
    throw std::invalid_argument("v_matrix_element: index out of range");
  }
  Complex acc(0.0, 0.0);
  for (int m = 0; m < n; ++m) {
    acc += model.U(j, m) * std::exp(Complex(0.0, model.omegas[m] * t)) *
           std::conj(model.U(k, m));
  }
  return acc;
}

double otoc_displacement(const PassiveRandomModel& model, Complex mu,
                         Complex nu, int j, int k, double t) {
  double arg = std::imag(mu * std::conj(nu) * v_matrix_element(model, j, k, t));
  double s = std::sin(arg);
  return 4.0 * s * s;
}

double otoc_quadrature_passive(const PassiveRandomModel& model, int j, int k,
                               double t) {
  double re = std::real(v_matrix_element(model, j, k, t));
  return re * re;
}

Complex f_otoc_quadrature(const PassiveRandomModel& model, int j, int k,
                          double t) {
  Complex v = v_matrix_element(model, j, k, t);
  Complex vc = std::conj(v);
  return 0.25 * (1.0 + std::norm(v) - vc * vc);
}

double sff_log_single_mode(double omega, double beta, double t) {
  if (omega <= 0.0 || beta <= 0.0) {
    throw std::invalid_argument("sff_log_single_mode: need omega, beta > 0");
  }
  // g = (cosh(bw) - 1)/(cosh(bw) - cos(wt))
  //   = sinh^2(bw/2) / (sinh^2(bw/2) + sin^2(wt/2)),
  // so ln g = -log1p(sin^2 / sinh^2): exactly 0 at t = 0 and never positive.
  double s = std::sin(0.5 * omega * t);
  double s2 = s * s;
  if (s2 == 0.0) return 0.0;
  double x = 0.5 * beta * omega;
  // ln sinh(x) without overflow for large x.
  double log_sinh = x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
  double log_ratio = std::log(s2) - 2.0 * log_sinh;
  if (log_ratio > 700.0) {
    // log1p(e^y) -> y for huge y.
    return -log_ratio;
  }
  return -std::log1p(std::exp(log_ratio));
}

double sff_single_mode(double omega, double beta, double t) {
  return std::exp(sff_log_single_mode(omega, beta, t));
}

double sff_log_total(const Vec& omegas, double beta, double t) {
  double acc = 0.0;
  for (int k = 0; k < omegas.size(); ++k) {
    acc += sff_log_single_mode(omegas[k], beta, t);
  }
  return acc;
}

double sff_discrete_spectrum(const std::vector<double>& levels, double beta,
                             double t) {
  if (levels.empty()) {
    throw std::invalid_argument("sff_discrete_spectrum: empty level list");
  }
  if (beta <= 0.0) {
    throw std::invalid_argument("sff_discrete_spectrum: need beta > 0");
  }
  if (t == 0.0) return 0.0;
  double e_min = levels[0];
  for (double e : levels) e_min = std::min(e_min, e);
  double z_re = 0.0, z_im = 0.0, z_beta = 0.0;
  for (double e : levels) {
    double w = std::exp(-beta * (e - e_min));
    z_beta += w;
    z_re += w * std::cos(e * t);
    z_im -= w * std::sin(e * t);
  }
  double num = z_re * z_re + z_im * z_im;
  return std::log(num) - 2.0 * std::log(z_beta);
}

}  // namespace gsc
