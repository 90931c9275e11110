#include "gscramble/quasiparticle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsc {

QpModeSet sample_qp_modes(int n_modes, const DistributionSpec& v_dist,
                          const DistributionSpec& s_dist, Rng& rng) {
  if (n_modes <= 0) throw std::invalid_argument("sample_qp_modes: n <= 0");
  QpModeSet modes(n_modes);
  for (auto& m : modes) {
    m.v = v_dist.sample(rng);
    m.s = s_dist.sample(rng);
    if (m.v < 0.0 || m.s < 0.0) {
      throw std::invalid_argument("sample_qp_modes: negative draw");
    }
  }
  return modes;
}

QpModeSet sample_qp_modes(int n_modes, const DistributionSpec& v_dist,
                          double s_value, Rng& rng) {
  return sample_qp_modes(n_modes, v_dist,
                         DistributionSpec::uniform(s_value, s_value), rng);
}

double qp_entropy_single(const QpModeSet& modes, double ell, double t) {
  if (ell <= 0.0) throw std::invalid_argument("qp_entropy_single: ell <= 0");
  if (t < 0.0) throw std::invalid_argument("qp_entropy_single: t < 0");
  double total = 0.0;
  for (const auto& m : modes) {
    double u = 2.0 * t * m.v;
    total += m.s * std::min(u, ell);
  }
  return total;
}

namespace {

double interval_overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

}  // namespace

double qp_entropy_disjoint(const QpModeSet& modes, double ell1, double ell2,
                           double d, double t) {
  if (ell1 <= 0.0 || ell2 <= 0.0 || d < 0.0) {
    throw std::invalid_argument("qp_entropy_disjoint: nonpositive geometry");
  }
  if (t < 0.0) throw std::invalid_argument("qp_entropy_disjoint: t < 0");
  // A1 = [0, ell1], A2 = [ell1 + d, ell1 + d + ell2].
  const double a[2][2] = {{0.0, ell1}, {ell1 + d, ell1 + d + ell2}};
  const double total = ell1 + ell2;
  double out = 0.0;
  for (const auto& m : modes) {
    double u = 2.0 * t * m.v;
    double self = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        self += interval_overlap(a[i][0], a[i][1], a[j][0] + u, a[j][1] + u);
      }
    }
    out += m.s * (total - self);
  }
  return out;
}

}  // namespace gsc
