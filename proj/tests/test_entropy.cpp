#include <doctest.h>

#include <cmath>
#include <vector>

#include "gscramble/entropy.hpp"
#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/states.hpp"
#include "gscramble/types.hpp"

namespace {

using gsc::Mat;
using gsc::Rng;

// Thermal entropy straight from the Fock distribution p_n = nbar^n /
// (nbar+1)^{n+1}, summed until the tail is negligible. Independent of any
// covariance-matrix identity.
double fock_thermal_entropy(double nbar) {
  if (nbar <= 0.0) return 0.0;
  double s = 0.0;
  double p = 1.0 / (nbar + 1.0);
  double ratio = nbar / (nbar + 1.0);
  for (int n = 0; n < 10000 && p > 1e-18; ++n) {
    s -= p * std::log(p);
    p *= ratio;
  }
  return s;
}

// Two-mode squeezed vacuum covariance, (q1, q2, p1, p2) ordering.
Mat two_mode_squeezed(double r) {
  double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
  Mat sigma = Mat::Zero(4, 4);
  sigma(0, 0) = sigma(1, 1) = sigma(2, 2) = sigma(3, 3) = c;
  sigma(0, 1) = sigma(1, 0) = s;
  sigma(2, 3) = sigma(3, 2) = -s;
  return sigma;
}

TEST_CASE("per_eigenvalue_entropy_edge_cases") {
  CHECK(gsc::symplectic_eigenvalue_entropy(1.0) == 0.0);
  CHECK(gsc::symplectic_eigenvalue_entropy(1.0 + 1e-13) == 0.0);
  CHECK_THROWS(gsc::symplectic_eigenvalue_entropy(0.5));
  // Monotone in nu.
  CHECK(gsc::symplectic_eigenvalue_entropy(3.0) <
        gsc::symplectic_eigenvalue_entropy(4.0));
}

TEST_CASE("thermal_entropy_matches_fock_sum") {
  // nu = 2 nbar + 1; the covariance formula must agree with the direct
  // occupation-number sum.
  for (double nbar : {0.3, 1.0, 4.2}) {
    double via_nu = gsc::symplectic_eigenvalue_entropy(2.0 * nbar + 1.0);
    CHECK(via_nu == doctest::Approx(fock_thermal_entropy(nbar)).epsilon(1e-10));
  }
  // Frozen value: nbar = 1 (nu = 3) gives exactly 2 ln 2.
  CHECK(gsc::symplectic_eigenvalue_entropy(3.0) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-14));
}

TEST_CASE("pure_states_have_zero_entropy") {
  CHECK(gsc::von_neumann_entropy(gsc::vacuum_state(3)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gsc::von_neumann_entropy(gsc::squeezed_vacuum(2, 1.5)) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(gsc::renyi2_entropy(gsc::squeezed_vacuum(2, 1.5)) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("renyi2_is_half_log_det") {
  Mat sigma = gsc::thermal_state(2, 0.8);  // det = 2.6^4
  CHECK(gsc::renyi2_entropy(sigma) ==
        doctest::Approx(2.0 * std::log(2.6)).epsilon(1e-12));
  CHECK_THROWS(gsc::renyi2_entropy(Mat(-Mat::Identity(2, 2))));
}

TEST_CASE("two_mode_squeezed_reduction_is_thermal") {
  double r = 0.6;
  Mat sigma = two_mode_squeezed(r);
  // Global state is pure.
  CHECK(gsc::von_neumann_entropy(sigma) == doctest::Approx(0.0).epsilon(1e-10));
  // Each half is thermal with nbar = sinh^2 r.
  double nbar = std::sinh(r) * std::sinh(r);
  double expect = fock_thermal_entropy(nbar);
  CHECK(gsc::block_entropy(sigma, {0}, gsc::EntropyKind::VonNeumann) ==
        doctest::Approx(expect).epsilon(1e-10));
  CHECK(gsc::block_entropy(sigma, {1}, gsc::EntropyKind::VonNeumann) ==
        doctest::Approx(expect).epsilon(1e-10));
  // Renyi-2 of the half: ln cosh 2r.
  CHECK(gsc::block_entropy(sigma, {0}, gsc::EntropyKind::Renyi2) ==
        doctest::Approx(std::log(std::cosh(2.0 * r))).epsilon(1e-10));
  // Renyi-2 never exceeds von Neumann.
  CHECK(gsc::block_entropy(sigma, {0}, gsc::EntropyKind::Renyi2) <=
        gsc::block_entropy(sigma, {0}, gsc::EntropyKind::VonNeumann));
}

TEST_CASE("mutual_information_of_pure_bipartition_doubles_block_entropy") {
  double r = 0.9;
  Mat sigma = two_mode_squeezed(r);
  double s_half = gsc::block_entropy(sigma, {0}, gsc::EntropyKind::VonNeumann);
  double mi = gsc::mutual_information(sigma, {0}, {1},
                                      gsc::EntropyKind::VonNeumann);
  CHECK(mi == doctest::Approx(2.0 * s_half).epsilon(1e-9));
}

TEST_CASE("mutual_information_vanishes_on_products") {
  Mat sigma = gsc::thermal_state(4, 0.5);
  double mi = gsc::mutual_information(sigma, {0, 1}, {2, 3},
                                      gsc::EntropyKind::VonNeumann);
  CHECK(mi == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("tripartite_mi_vanishes_on_products") {
  Mat sigma = gsc::thermal_state(6, 0.9);
  double i3 = gsc::tripartite_mi(sigma, {0, 1}, {2, 3}, {4, 5},
                                 gsc::EntropyKind::VonNeumann);
  CHECK(i3 == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("block_entropy_is_order_invariant") {
  // Entropy of a subset cannot depend on how the modes are listed.
  Rng rng(313);
  gsc::QuadraticHamiltonian h = gsc::dhl_hamiltonian(6, 1.0, 0.5, 1.5, rng);
  Mat sigma = gsc::ground_state(h.mq);
  double a = gsc::block_entropy(sigma, {0, 2, 5}, gsc::EntropyKind::VonNeumann);
  double b = gsc::block_entropy(sigma, {5, 0, 2}, gsc::EntropyKind::VonNeumann);
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK(a > 1e-4);  // coupled ground state: the block is actually mixed
}

TEST_CASE("ground_state_mutual_information_is_nonnegative_and_subadditive") {
  gsc::QuadraticHamiltonian h = gsc::hl_hamiltonian(10, 0.5);
  Mat sigma = gsc::ground_state(h.mq);
  double mi = gsc::mutual_information(sigma, {0, 1}, {5, 6},
                                      gsc::EntropyKind::VonNeumann);
  CHECK(mi >= -1e-10);
  // Pure global state: S_AB = S_complement.
  double s_ab = gsc::block_entropy(sigma, {0, 1, 5, 6},
                                   gsc::EntropyKind::VonNeumann);
  double s_rest = gsc::block_entropy(sigma, {2, 3, 4, 7, 8, 9},
                                     gsc::EntropyKind::VonNeumann);
  CHECK(s_ab == doctest::Approx(s_rest).epsilon(1e-8));
}

TEST_CASE("contiguous_modes_enumeration") {
  std::vector<int> m = gsc::contiguous_modes(3, 4);
  REQUIRE(m.size() == 4u);
  CHECK(m.front() == 3);
  CHECK(m.back() == 6);
}

TEST_CASE("tri_partition_layout_and_bounds") {
  gsc::TriPartition p = gsc::tri_partition(20, 3, 4, 5, 1, 2);
  REQUIRE(p.A.size() == 3u);
  REQUIRE(p.B.size() == 4u);
  REQUIRE(p.C.size() == 5u);
  CHECK(p.A.front() == 0);
  CHECK(p.B.front() == 4);   // 3 + gap 1
  CHECK(p.C.front() == 10);  // 8 + gap 2
  CHECK(p.C.back() == 14);
  CHECK_THROWS(gsc::tri_partition(10, 4, 4, 4, 0, 0));
}

}  // namespace
