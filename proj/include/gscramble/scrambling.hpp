#pragma once

#include <vector>

#include "gscramble/models.hpp"
#include "gscramble/types.hpp"

namespace gsc {

// Ground-state quadrature OTOC of a quadratic Hamiltonian. The commutator
// [q_j(t), p_k] is a c-number, so the result carries no temperature
// dependence and no beta parameter appears here.
//
// C_jk(t) = ((V diag(cos omega_n t) V^T)_jk)^2, evaluated through
// delta_jk - 2 V diag(sin^2(omega t / 2)) V^T so small-t off-diagonal values
// are free of cancellation (they reach ~t^4 scales).
class GroundOtoc {
 public:
  explicit GroundOtoc(const QuadraticHamiltonian& h);

  double at(int j, int k, double t) const;

  // 1 - sqrt(C_jj(t)), growing as t^2 at small t.
  double diagonal_deficit(int j, double t) const;

 private:
  Vec omegas_;
  Mat v_;
  double cos_element(int j, int k, double t) const;
};

double otoc_quadrature_ground(const QuadraticHamiltonian& h, int j, int k,
                              double t);

// V_jk(t) = sum_n U_jn e^{+i omega_n t} U*_kn. Note the sign: this is the
// conjugate of the evolution transfer matrix and is the object entering the
// displacement and quadrature OTOCs below.
CMat v_matrix(const PassiveRandomModel& model, double t);
Complex v_matrix_element(const PassiveRandomModel& model, int j, int k,
                         double t);

// 4 sin^2(Im[mu nu* V_jk(t)]); bounded in [0, 4].
double otoc_displacement(const PassiveRandomModel& model, Complex mu,
                         Complex nu, int j, int k, double t);

// [Re V_jk(t)]^2.
double otoc_quadrature_passive(const PassiveRandomModel& model, int j, int k,
                               double t);

// 1/4 (1 + |V_jk|^2 - (V*_jk)^2).
Complex f_otoc_quadrature(const PassiveRandomModel& model, int j, int k,
                          double t);

// Single-mode form factor (cosh(beta w) - 1)/(cosh(beta w) - cos(w t)),
// in (0, 1], exactly 1 at t = 0.
double sff_single_mode(double omega, double beta, double t);
double sff_log_single_mode(double omega, double beta, double t);

// sum_k ln g_k(beta, t). Entirely in the log domain; products of the g_k
// underflow doubles by thousands of decades at the sizes used here.
double sff_log_total(const Vec& omegas, double beta, double t);

// ln( |sum_n e^{-(beta+it)E_n}|^2 / (sum_n e^{-beta E_n})^2 ) for a discrete
// level list.
double sff_discrete_spectrum(const std::vector<double>& levels, double beta,
                             double t);

}  // namespace gsc
