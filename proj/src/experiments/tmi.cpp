#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "gscramble/dynamics.hpp"
#include "gscramble/entropy.hpp"
#include "gscramble/experiments/parallel.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/series.hpp"
#include "gscramble/states.hpp"

namespace gsc {

namespace {

// The TMI runs use squeezing up to lambda = 10, which puts the covariance
// condition number near e^40: forming sigma(t) and factorizing it directly
// loses the small symplectic eigenvalues to roundoff. Everything here
// therefore works with a row factor G (rows of the evolution symplectic,
// columns scaled by the exact square root of the diagonal initial
// covariance), so that sigma_red = G G^T is never formed:
//   - QR of G^T gives sigma_red = R^T R with R computed stably;
//   - R J R^T is antisymmetric, and its singular values (each symplectic
//     eigenvalue appears twice) carry only one power of the dynamic range;
//   - Renyi-2 is 1/2 ln det sigma_red = sum ln |R_ii| straight off the QR.

double entropy_from_rows(const Mat& rows, EntropyKind kind) {
  const int d = static_cast<int>(rows.rows());
  const int k = d / 2;
  Eigen::HouseholderQR<Mat> qr(rows.transpose());
  Mat r = Mat(qr.matrixQR()
                  .topLeftCorner(d, d)
                  .triangularView<Eigen::Upper>());
  if (kind == EntropyKind::Renyi2) {
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
      double a = std::abs(r(i, i));
      if (a <= 0.0) {
        throw std::runtime_error("tmi: singular reduced covariance");
      }
      acc += std::log(a);
    }
    return acc;
  }
  Mat jrt(d, d);  // J * R^T
  jrt.topRows(k) = r.transpose().bottomRows(k);
  jrt.bottomRows(k) = -r.transpose().topRows(k);
  Mat b = r * jrt;
  // The singular values of the antisymmetric B each appear twice and equal
  // the symplectic eigenvalues. Going through the SVD keeps their absolute
  // error at eps * nu_max; an eigendecomposition of B B^T would square the
  // dynamic range and lose the nu ~ 1 modes entirely at large squeezing.
  Eigen::BDCSVD<Mat> svd(b);
  const Vec& sv = svd.singularValues();  // descending
  double acc = 0.0;
  for (int i = 0; i < k; ++i) {
    double nu = 0.5 * (sv[2 * i] + sv[2 * i + 1]);
    if (nu < 0.9) {
      throw std::runtime_error("tmi: symplectic eigenvalue far below 1");
    }
    acc += symplectic_eigenvalue_entropy(std::max(nu, 1.0));
  }
  return acc;
}

// Rows (q then p) of the factor restricted to a local mode subset.
Mat select_rows(const Mat& g, const std::vector<int>& modes, int m_total) {
  const int m = static_cast<int>(modes.size());
  Mat out(2 * m, g.cols());
  for (int i = 0; i < m; ++i) {
    out.row(i) = g.row(modes[i]);
    out.row(m + i) = g.row(m_total + modes[i]);
  }
  return out;
}

struct TriValues {
  double i3 = 0.0;
  double i2_a_bc = 0.0;
};

// g holds the factor rows for the tracked modes ordered A | B | C.
TriValues tri_from_rows(const Mat& g, int na, int nb, int nc,
                        EntropyKind kind) {
  const int m = na + nb + nc;
  auto ent = [&](const std::vector<int>& modes) {
    return entropy_from_rows(select_rows(g, modes, m), kind);
  };
  std::vector<int> ac = contiguous_modes(0, na);
  const std::vector<int> c_only = contiguous_modes(na + nb, nc);
  ac.insert(ac.end(), c_only.begin(), c_only.end());
  const double s_a = ent(contiguous_modes(0, na));
  const double s_b = ent(contiguous_modes(na, nb));
  const double s_c = ent(c_only);
  const double s_ab = ent(contiguous_modes(0, na + nb));
  const double s_ac = ent(ac);
  const double s_bc = ent(contiguous_modes(na, nb + nc));
  const double s_abc = entropy_from_rows(g, kind);
  TriValues out;
  out.i3 = s_a + s_b + s_c - s_ab - s_ac - s_bc + s_abc;
  out.i2_a_bc = s_a + s_bc - s_abc;
  return out;
}

// Square root of the diagonal initial covariance diag(e^{-2l}+u, e^{2l}+u).
Vec input_sqrt(int n, double lambda, double noise) {
  Vec d(2 * n);
  const double q = std::sqrt(std::exp(-2.0 * lambda) + noise);
  const double p = std::sqrt(std::exp(2.0 * lambda) + noise);
  for (int i = 0; i < n; ++i) {
    d[i] = q;
    d[n + i] = p;
  }
  return d;
}

// Tracked rows of a full 2n x 2n symplectic, columns scaled by dsqrt.
Mat rows_scaled(const Mat& o, const std::vector<int>& tracked,
                const Vec& dsqrt) {
  const int n = static_cast<int>(o.rows()) / 2;
  const int m = static_cast<int>(tracked.size());
  Mat g(2 * m, 2 * n);
  for (int i = 0; i < m; ++i) {
    g.row(i) = o.row(tracked[i]);
    g.row(m + i) = o.row(n + tracked[i]);
  }
  return g * dsqrt.asDiagonal();
}

// Tracked rows of passive_to_symplectic(U e^{-i w t} U^dag) times dsqrt.
// The inner product O_U O_E(t) is assembled columnwise (column j is a
// rotation mix of columns j and n+j of O_U); only the closing O_U^T costs a
// matrix product, and only over the tracked rows.
Mat passive_rows_scaled(const Mat& o_u, const Vec& omegas,
                        const std::vector<int>& tracked, double t,
                        const Vec& dsqrt) {
  const int n = static_cast<int>(omegas.size());
  const int m = static_cast<int>(tracked.size());
  Mat mix(2 * m, 2 * n);
  for (int j = 0; j < n; ++j) {
    const double c = std::cos(omegas[j] * t);
    const double s = std::sin(omegas[j] * t);
    for (int i = 0; i < m; ++i) {
      const double oq_q = o_u(tracked[i], j);
      const double oq_p = o_u(tracked[i], n + j);
      const double op_q = o_u(n + tracked[i], j);
      const double op_p = o_u(n + tracked[i], n + j);
      mix(i, j) = oq_q * c - oq_p * s;
      mix(i, n + j) = oq_q * s + oq_p * c;
      mix(m + i, j) = op_q * c - op_p * s;
      mix(m + i, n + j) = op_q * s + op_p * c;
    }
  }
  return (mix * o_u.transpose()) * dsqrt.asDiagonal();
}

// Tracked rows of e^{J M t} for the diag(Mq, I) family, times dsqrt.
Mat active_rows_scaled(const NormalModeData& nm,
                       const std::vector<int>& tracked, double t,
                       const Vec& dsqrt) {
  const int n = static_cast<int>(nm.omegas.size());
  const int m = static_cast<int>(tracked.size());
  Vec c(n), s_over(n), s_times(n);
  for (int k = 0; k < n; ++k) {
    const double w = nm.omegas[k];
    c[k] = std::cos(w * t);
    const double s = std::sin(w * t);
    s_over[k] = s / w;
    s_times[k] = s * w;
  }
  Mat vq(m, n);
  for (int i = 0; i < m; ++i) vq.row(i) = nm.V.row(tracked[i]);
  Mat g(2 * m, 2 * n);
  g.topLeftCorner(m, n) = (vq * c.asDiagonal()) * nm.V.transpose();
  g.topRightCorner(m, n) = (vq * s_over.asDiagonal()) * nm.V.transpose();
  g.bottomLeftCorner(m, n) = -(vq * s_times.asDiagonal()) * nm.V.transpose();
  g.bottomRightCorner(m, n) = g.topLeftCorner(m, n);
  return g * dsqrt.asDiagonal();
}

BsPolicy tmi_policy(const std::string& name) {
  if (name == "balanced") return BsPolicy::Balanced;
  if (name == "fixed_random") return BsPolicy::FixedRandom;
  if (name == "resampled") return BsPolicy::ResampledEachStep;
  throw std::invalid_argument("tmi: unknown bs_policy " + name);
}

}  // namespace

TmiResult run_tmi(const ExperimentConfig& c, int workers) {
  const int n = c.model.n;
  const int na = c.partition.n_a;
  const int nb = c.partition.n_b;
  const int nc = c.partition.n_c;
  if (na < 1 || nb < 1 || nc < 1) {
    throw std::invalid_argument("tmi: partition blocks must be >= 1");
  }
  const TriPartition part = tri_partition(n, na, nb, nc, c.partition.gap_ab,
                                          c.partition.gap_bc);
  if (na + nb + nc + c.partition.gap_ab + c.partition.gap_bc >= n) {
    throw std::invalid_argument(
        "tmi: the complement D must be nonempty, otherwise I3 is "
        "identically zero for pure states");
  }
  std::vector<int> tracked = part.A;
  tracked.insert(tracked.end(), part.B.begin(), part.B.end());
  tracked.insert(tracked.end(), part.C.begin(), part.C.end());

  const EntropyKind kind = c.entropy_kind();
  const Vec dsqrt = input_sqrt(n, c.state.lambda, c.state.noise);

  const std::string& type = c.model.type;
  const bool is_passive = (type == "passive_random");
  const bool is_circuit = (type == "circuit");
  const bool is_active = (type == "dhl" || type == "goe" || type == "gue");
  if (!is_passive && !is_circuit && !is_active) {
    throw std::invalid_argument(
        "tmi: model must be passive_random, circuit, dhl, goe or gue");
  }

  // Time axis: continuous models use the time grid, the circuit counts
  // steps (including step 0).
  Vec axis;
  if (is_circuit) {
    if (c.grid.steps < 1) {
      throw std::invalid_argument("tmi: circuit model needs grid.steps >= 1");
    }
    axis.resize(c.grid.steps + 1);
    for (int i = 0; i <= c.grid.steps; ++i) axis[i] = i;
  } else {
    axis = c.grid.time_grid().times();
  }
  const int nt = static_cast<int>(axis.size());

  const bool deterministic = is_circuit && tmi_policy(c.model.bs_policy) ==
                                               BsPolicy::Balanced;
  const int n_samples = deterministic ? 1 : c.samples;

  auto one_sample = [&](int s) -> Vec {
    Rng rng = Rng::from(c.seed, "tmi-model", static_cast<std::uint64_t>(s));
    Vec vals(nt);
    if (is_passive) {
      PassiveRandomModel model = passive_random_model(n, c.model.omega, rng);
      const Mat o_u = passive_to_symplectic(model.U);
      for (int it = 0; it < nt; ++it) {
        Mat g = passive_rows_scaled(o_u, model.omegas, tracked, axis[it],
                                    dsqrt);
        vals[it] = tri_from_rows(g, na, nb, nc, kind).i3;
      }
    } else if (is_circuit) {
      CircuitSpec spec;
      spec.n_modes = n;
      spec.policy = tmi_policy(c.model.bs_policy);
      CircuitEvolution circ(spec, rng);
      Mat frame = Mat::Identity(2 * n, 2 * n);
      vals[0] = tri_from_rows(rows_scaled(frame, tracked, dsqrt), na, nb, nc,
                              kind).i3;
      for (int st = 1; st < nt; ++st) {
        circ.step_frame(frame, rng);
        vals[st] = tri_from_rows(rows_scaled(frame, tracked, dsqrt), na, nb,
                                 nc, kind).i3;
      }
    } else {
      QuadraticHamiltonian h;
      if (type == "dhl") {
        h = dhl_hamiltonian(n, c.model.m, c.model.j_low, c.model.j_high, rng);
      } else {
        h = random_mq_hamiltonian(
            n, type == "goe" ? Ensemble::GOE : Ensemble::GUE, c.model.scale,
            c.model.shift_margin, rng);
      }
      NormalModeData nm = normal_modes(h);
      for (int it = 0; it < nt; ++it) {
        Mat g = active_rows_scaled(nm, tracked, axis[it], dsqrt);
        vals[it] = tri_from_rows(g, na, nb, nc, kind).i3;
      }
    }
    return vals;
  };

  std::vector<Vec> samples = parallel_map(n_samples, workers, one_sample);
  const SeriesStats stats = average_series(samples);

  TmiResult res;
  res.series = detail::series_table("tmi", is_circuit ? "step" : "t", axis,
                                    stats);
  detail::add_run_meta(res.series, c);
  res.series.add_meta("lambda", c.state.lambda);
  res.series.add_meta("noise", c.state.noise);
  res.series.add_meta("n_a", static_cast<double>(na));
  res.series.add_meta("n_b", static_cast<double>(nb));
  res.series.add_meta("n_c", static_cast<double>(nc));

  // One-shot Haar reference: the same initial state pushed through a single
  // Haar-random passive network. Passive dynamics saturate to it.
  const bool want_oracle = is_passive || is_circuit;
  Mat o_haar;
  if (want_oracle || !c.sweep.lambdas.empty()) {
    Rng oracle_rng = Rng::from(c.seed, "tmi-oracle", 0);
    o_haar = passive_to_symplectic(haar_unitary(n, oracle_rng));
  }
  if (want_oracle) {
    TriValues tilde =
        tri_from_rows(rows_scaled(o_haar, tracked, dsqrt), na, nb, nc, kind);
    res.has_oracle = true;
    res.i3_tilde = tilde.i3;
    res.i2_tilde = tilde.i2_a_bc;
    res.series.add_meta("i3_tilde", res.i3_tilde);
    res.series.add_meta("i2_tilde", res.i2_tilde);
  }

  if (is_passive && res.has_oracle && res.i3_tilde != 0.0) {
    const int skip = static_cast<int>(std::floor(0.05 * (nt - 1))) + 1;
    double worst = 0.0;
    for (int it = skip; it < nt; ++it) {
      worst = std::max(worst, std::abs(stats.mean[it] - res.i3_tilde) /
                                  std::abs(res.i3_tilde));
    }
    res.max_rel_dev = worst;
    res.series.add_meta("saturation_skip_index", static_cast<double>(skip));
    res.series.add_meta("max_rel_dev", res.max_rel_dev);
  }

  // Minimum and the climb after it, as a fraction of |min|: nonrandom
  // circuits turn back up (revivals), scrambling dynamics stay put.
  int min_idx = 0;
  for (int it = 1; it < nt; ++it) {
    if (stats.mean[it] < stats.mean[min_idx]) min_idx = it;
  }
  res.min_value = stats.mean[min_idx];
  double rebound = 0.0;
  for (int it = min_idx + 1; it < nt; ++it) {
    rebound = std::max(rebound, stats.mean[it] - res.min_value);
  }
  res.rebound_fraction =
      res.min_value != 0.0 ? rebound / std::abs(res.min_value) : 0.0;
  res.series.add_meta("min_value", res.min_value);
  res.series.add_meta("rebound_fraction", res.rebound_fraction);

  if (!c.sweep.lambdas.empty()) {
    const int nl = static_cast<int>(c.sweep.lambdas.size());
    Vec lam(nl), i3s(nl), i2s(nl), ratio(nl);
    for (int i = 0; i < nl; ++i) {
      const double l = c.sweep.lambdas[i];
      const Vec d_l = input_sqrt(n, l, c.state.noise);
      TriValues tilde =
          tri_from_rows(rows_scaled(o_haar, tracked, d_l), na, nb, nc, kind);
      lam[i] = l;
      i3s[i] = tilde.i3;
      i2s[i] = tilde.i2_a_bc;
      ratio[i] = tilde.i2_a_bc != 0.0 ? tilde.i3 / (-tilde.i2_a_bc) : 0.0;
    }
    ResultTable sweep;
    sweep.name = "tmi_lambda_sweep";
    sweep.columns = {"lambda", "i3_tilde", "i2_tilde", "ratio"};
    sweep.data = {lam, i3s, i2s, ratio};
    detail::add_run_meta(sweep, c);
    sweep.add_meta("note",
                   "single Haar draw shared across lambda values");
    res.sweep = std::move(sweep);
  }
  return res;
}

TmiStaticResult run_tmi_static(const ExperimentConfig& c, int workers) {
  (void)workers;  // one Haar evolution; nothing to farm out
  const int n = c.model.n;
  const int na = c.partition.n_a;
  const int nc = c.partition.n_c;
  if (na < 1 || nc < 1) {
    throw std::invalid_argument("tmi-static: n_a and n_c must be >= 1");
  }
  if (c.sweep.blocks_b.empty()) {
    throw std::invalid_argument("tmi-static: sweep.blocks_b is empty");
  }
  const double noise_units = c.state.noise > 0.0 ? c.state.noise : 1.0;

  Rng rng = Rng::from(c.seed, "tmi-static", 0);
  const Mat o_haar = passive_to_symplectic(haar_unitary(n, rng));
  const Vec d_pure = input_sqrt(n, c.state.lambda, 0.0);
  const Vec d_noisy = input_sqrt(n, c.state.lambda, noise_units);

  const int nr = static_cast<int>(c.sweep.blocks_b.size());
  Vec ratio(nr), bcol(nr);
  Vec i3_vn(nr), i3_r2(nr), i3_vn_noisy(nr), i3_r2_noisy(nr);
  for (int i = 0; i < nr; ++i) {
    const int nb = c.sweep.blocks_b[i];
    if (nb < 1) throw std::invalid_argument("tmi-static: block_b < 1");
    const TriPartition part = tri_partition(n, na, nb, nc, c.partition.gap_ab,
                                            c.partition.gap_bc);
    if (na + nb + nc + c.partition.gap_ab + c.partition.gap_bc >= n) {
      throw std::invalid_argument("tmi-static: complement D must be nonempty");
    }
    std::vector<int> tracked = part.A;
    tracked.insert(tracked.end(), part.B.begin(), part.B.end());
    tracked.insert(tracked.end(), part.C.begin(), part.C.end());
    bcol[i] = nb;
    ratio[i] = static_cast<double>(nb) / na;
    const Mat g_pure = rows_scaled(o_haar, tracked, d_pure);
    const Mat g_noisy = rows_scaled(o_haar, tracked, d_noisy);
    i3_vn[i] = tri_from_rows(g_pure, na, nb, nc, EntropyKind::VonNeumann).i3;
    i3_r2[i] = tri_from_rows(g_pure, na, nb, nc, EntropyKind::Renyi2).i3;
    i3_vn_noisy[i] =
        tri_from_rows(g_noisy, na, nb, nc, EntropyKind::VonNeumann).i3;
    i3_r2_noisy[i] =
        tri_from_rows(g_noisy, na, nb, nc, EntropyKind::Renyi2).i3;
  }

  TmiStaticResult res;
  res.table.name = "tmi_static";
  res.table.columns = {"ratio",    "block_b",       "i3_vn",
                       "i3_renyi2", "i3_vn_noisy",  "i3_renyi2_noisy"};
  res.table.data = {ratio, bcol, i3_vn, i3_r2, i3_vn_noisy, i3_r2_noisy};
  detail::add_run_meta(res.table, c);
  res.table.add_meta("lambda", c.state.lambda);
  res.table.add_meta("noise_units", noise_units);
  res.table.add_meta("n_a", static_cast<double>(na));
  res.table.add_meta("n_c", static_cast<double>(nc));
  return res;
}

std::vector<ResultTable> TmiResult::tables() const {
  std::vector<ResultTable> out = {series};
  if (sweep) out.push_back(*sweep);
  return out;
}

std::vector<ResultTable> TmiStaticResult::tables() const { return {table}; }

}  // namespace gsc
