#pragma once

#include <vector>

#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"

namespace gsc {

// Heuristic pair picture of entanglement growth: each mode label carries a
// speed v and an entropy density s; correlated pairs emitted everywhere at
// t = 0 separate at relative speed 2v.
struct QpMode {
  double v = 0.0;
  double s = 0.0;
};

using QpModeSet = std::vector<QpMode>;

QpModeSet sample_qp_modes(int n_modes, const DistributionSpec& v_dist,
                          const DistributionSpec& s_dist, Rng& rng);
QpModeSet sample_qp_modes(int n_modes, const DistributionSpec& v_dist,
                          double s_value, Rng& rng);

// Single interval of length ell: per mode 2 t v s while 2 t v < ell, then
// ell s saturated.
double qp_entropy_single(const QpModeSet& modes, double ell, double t);

// Two intervals of lengths ell1, ell2 separated by gap d on the line. A mode
// contributes s times the measure of emission points whose pair has exactly
// one member inside the union, halved so a single interval reproduces the
// formula above; equivalently s (|A| - |A cap (A + 2vt)|).
double qp_entropy_disjoint(const QpModeSet& modes, double ell1, double ell2,
                           double d, double t);

}  // namespace gsc
