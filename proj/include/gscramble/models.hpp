#pragma once

#include <vector>

#include "gscramble/rng.hpp"
#include "gscramble/types.hpp"

namespace gsc {

// N-mode transfer matrix acting on creation operators.
using PassiveUnitary = CMat;

struct QuadraticHamiltonian {
  // H = 1/2 (q p) M (q p)^T with M = [[Mq, Mqp],[Mqp^T, Mp]].
  // All model families used here have Mqp = 0 and Mp = I.
  Mat mq;
  Mat mqp;  // empty means zero
  Mat mp;   // empty means identity
  double spectral_shift = 0.0;  // shift applied to enforce positivity, if any

  int n_modes() const { return static_cast<int>(mq.rows()); }
  bool standard_family() const;  // Mqp = 0 and Mp = I
  Mat assemble() const;          // the full 2N x 2N matrix M
};

struct NormalModeData {
  Vec omegas;  // ascending, positive
  Mat V;       // orthogonal, V^T Mq V = diag(omega^2)
  Mat S;       // symplectic, S^T M S = diag(omega, omega)
};

struct PassiveRandomModel {
  PassiveUnitary U;
  Vec omegas;
};

enum class BsPolicy { Balanced, FixedRandom, ResampledEachStep };

struct CircuitSpec {
  int n_modes = 0;  // even; periodic boundary
  BsPolicy policy = BsPolicy::Balanced;
};

// Frequency / velocity distribution used in configs: uniform(a, b) or
// exponential(rate) + offset.
struct DistributionSpec {
  enum class Kind { Uniform, ExponentialShifted };
  Kind kind = Kind::Uniform;
  double a = 0.5;       // uniform lower bound
  double b = 1.5;       // uniform upper bound
  double rate = 1.0;    // exponential rate
  double offset = 0.0;  // additive offset for the exponential

  double sample(Rng& rng) const;
  static DistributionSpec uniform(double a, double b);
  static DistributionSpec exponential_shifted(double rate, double offset);
};

// Periodic chain of coupled oscillators, Mq = circ(m^2+2, -1, 0, ..., 0, -1).
// For N = 2 neighbor and corner coincide, giving -2 off-diagonal.
QuadraticHamiltonian hl_hamiltonian(int n, double m);

// Disordered chain: diagonal m^2 + J_n + J_{n-1}, off-diagonal -J_n between
// sites n and n+1 (periodic). Couplings drawn Uniform(j_low, j_high) once.
QuadraticHamiltonian dhl_hamiltonian(int n, double m, double j_low,
                                     double j_high, Rng& rng);

// Same chain with the couplings given explicitly; mass quenches reuse one
// draw at two masses.
QuadraticHamiltonian dhl_hamiltonian(int n, double m,
                                     const std::vector<double>& couplings);

enum class Ensemble { GOE, GUE };

// Dense random Mq: ensemble sample (real symmetric part for GUE), shifted by
// |lambda_min| + shift_margin so Mq is positive definite. The applied shift
// is recorded on the instance.
QuadraticHamiltonian random_mq_hamiltonian(int n, Ensemble ensemble,
                                           double scale, double shift_margin,
                                           Rng& rng);

// (G + G^T)/2 with G i.i.d. N(0, scale^2): diagonal variance scale^2,
// off-diagonal variance scale^2/2.
Mat goe_sample(int n, double scale, Rng& rng);

// (G + G^dag)/2 with complex entries of unit total variance times scale.
CMat gue_sample(int n, double scale, Rng& rng);

// Haar-distributed N x N unitary (QR of a complex Gaussian with the R
// diagonal phases divided out).
PassiveUnitary haar_unitary(int n, Rng& rng);

// Haar transfer matrix plus i.i.d. frequencies from omega_dist.
PassiveRandomModel passive_random_model(int n, const DistributionSpec& omega_dist,
                                        Rng& rng);

enum class BsKind { Balanced, HaarRandom };

// 2x2 transfer matrix: balanced = (I + iX)/sqrt(2), or Haar on U(2).
PassiveUnitary beam_splitter(BsKind kind, Rng& rng);

// Eigen-decomposition of Mq for the Mqp = 0, Mp = I family; S is the
// symplectic that takes H to uncoupled oscillators.
NormalModeData normal_modes(const QuadraticHamiltonian& h);

// O = [[Re U, -Im U],[Im U, Re U]], orthogonal and symplectic; conjugating a
// covariance matrix by O implements the passive unitary with transfer
// matrix U (convention a = (q + ip)/sqrt(2)).
Mat passive_to_symplectic(const PassiveUnitary& u);

}  // namespace gsc
