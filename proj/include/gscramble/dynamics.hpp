#pragma once

#include <vector>

#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/types.hpp"

namespace gsc {

// Evolution under a time-independent H of the Mq/Mp = I family. One O(N^3)
// eigendecomposition at construction; each S(t) evaluation costs two N x N
// products per block.
class EvolutionOperator {
 public:
  explicit EvolutionOperator(const QuadraticHamiltonian& h);
  explicit EvolutionOperator(NormalModeData nm);

  const NormalModeData& modes() const { return nm_; }
  int n_modes() const { return static_cast<int>(nm_.omegas.size()); }

  // S(t) = [[cos(Om t), Om^{-1} sin(Om t)], [-Om sin(Om t), cos(Om t)]]
  // with Om = V diag(omega) V^T.
  Mat at(double t) const;

  // S(t) sigma S(t)^T.
  Mat evolve(const Mat& sigma, double t) const;

 private:
  NormalModeData nm_;
};

Mat evolve(const QuadraticHamiltonian& h, const Mat& sigma, double t);

// Tracks only the covariance slice on a fixed mode subset while the full
// state evolves. Rotating sigma0 into the normal-mode basis once turns each
// time sample into an O(M N^2) product instead of O(N^3), which is what makes
// dense time grids over many disorder samples affordable.
class ReducedEvolution {
 public:
  ReducedEvolution(const EvolutionOperator& op, const Mat& sigma0,
                   std::vector<int> modes);

  // Covariance of the tracked modes at time t, ordering as passed in.
  Mat at(double t) const;

  int n_tracked() const { return static_cast<int>(modes_.size()); }

 private:
  std::vector<int> modes_;
  Vec omegas_;
  Mat rows_q_;        // V rows for tracked modes
  Mat sigma_tilde_;   // (V+V)^T sigma0 (V+V), normal-mode frame
};

// V(t) = U diag(e^{-i omega_k t}) U^dag.
class TransferMatrixSeries {
 public:
  explicit TransferMatrixSeries(PassiveRandomModel model);
  CMat at(double t) const;
  const PassiveRandomModel& model() const { return model_; }

 private:
  PassiveRandomModel model_;
};

CMat transfer_matrix(const PassiveRandomModel& model, double t);

// sigma -> O sigma O^T with O = passive_to_symplectic(v).
Mat evolve_passive(const Mat& sigma, const PassiveUnitary& v);

// Conjugates sigma in place by the two-mode passive transform u acting on
// modes a and b. O(N) per call.
void apply_two_mode_passive(Mat& sigma, const CMat& u, int a, int b);

// Left-multiplies m in place by the symplectic embedding of u on modes a, b
// (rows only; apply_two_mode_passive is this plus the mirrored column
// update). Lets callers track the accumulated circuit frame O with
// sigma(t) = O sigma0 O^T instead of conjugating sigma directly, which is
// what keeps strongly squeezed inputs numerically representable.
void apply_two_mode_rows(Mat& m, const CMat& u, int a, int b);

// Brick-wall beam-splitter circuit, periodic boundary. Layer 1 couples
// (0,1),(2,3),...; layer 2 couples (1,2),...,(N-1,0). One step applies both
// layers. FixedRandom draws one U(2) per position at construction and reuses
// it every step; ResampledEachStep draws fresh ones per step.
class CircuitEvolution {
 public:
  CircuitEvolution(CircuitSpec spec, Rng& rng);

  void step(Mat& sigma, Rng& rng);
  // Accumulates one step into an orthogonal frame (rows-only updates):
  // frame <- O_step * frame. Draws the same unitaries as step().
  void step_frame(Mat& frame, Rng& rng);
  const CircuitSpec& spec() const { return spec_; }

 private:
  CircuitSpec spec_;
  std::vector<CMat> fixed_units_;  // per position, FixedRandom only
  void apply_layer(Mat& target, int layer, Rng& rng, bool rows_only);
};

// One step for the stateless policies (Balanced, ResampledEachStep).
Mat circuit_step(const Mat& sigma, const CircuitSpec& spec, Rng& rng);

// (tr sigma - 2N)/4, the total photon number; invariant under passive
// transforms.
double total_photons(const Mat& sigma);

}  // namespace gsc
