// Acceptance gate for the simulation library. Each numbered criterion is a
// standalone end-to-end check with a wall-clock budget; the binary prints one
// [PASS]/[FAIL] line per criterion and exits with the number of failures.
// Run with no arguments for the full gate, or with a criterion number to run
// a single one.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "gscramble/dynamics.hpp"
#include "gscramble/entropy.hpp"
#include "gscramble/experiments/config.hpp"
#include "gscramble/experiments/emit.hpp"
#include "gscramble/experiments/runners.hpp"
#include "gscramble/metrics.hpp"
#include "gscramble/models.hpp"
#include "gscramble/rng.hpp"
#include "gscramble/scrambling.hpp"
#include "gscramble/states.hpp"
#include "gscramble/symplectic.hpp"

namespace {

using gsc::Mat;
using gsc::Rng;
using gsc::Vec;

struct Outcome {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: Williamson decomposition on random states.

Mat random_symplectic(int n, Rng& rng) {
  Mat o1 = gsc::passive_to_symplectic(gsc::haar_unitary(n, rng));
  Mat o2 = gsc::passive_to_symplectic(gsc::haar_unitary(n, rng));
  Mat sq = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double r = rng.uniform(-1.2, 1.2);
    sq(i, i) = std::exp(r);
    sq(n + i, n + i) = std::exp(-r);
  }
  return o1 * sq * o2;
}

void criterion_1(Outcome& out) {
  Rng rng = Rng::from(1, "acceptance-williamson", 0);
  double worst_recon = 0.0;
  double worst_sjst = 0.0;
  double worst_inv = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + (i % 8);
    Mat d = Mat::Identity(2 * n, 2 * n);
    if (i % 3 != 0) {
      for (int m = 0; m < n; ++m) {
        const double nu = rng.uniform(1.0, 6.0);
        d(m, m) = nu;
        d(n + m, n + m) = nu;
      }
    }
    Mat sigma = d;
    if (i % 3 != 2) {
      Mat s = random_symplectic(n, rng);
      sigma = s * d * s.transpose();
      sigma = ((sigma + sigma.transpose()) / 2.0).eval();
    }

    gsc::WilliamsonResult w = gsc::williamson(sigma);
    Mat dw = Mat::Zero(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
      dw(m, m) = w.nu[m];
      dw(n + m, n + m) = w.nu[m];
    }
    const double recon =
        (w.S * dw * w.S.transpose() - sigma).norm() / sigma.norm();
    const double sjst = gsc::symplectic_residual(w.S);

    Mat conj = random_symplectic(n, rng);
    Mat moved = conj * sigma * conj.transpose();
    std::vector<double> nu2 =
        gsc::symplectic_eigenvalues(((moved + moved.transpose()) / 2.0).eval());
    double inv = 0.0;
    for (int m = 0; m < n; ++m) inv = std::max(inv, std::abs(nu2[m] - w.nu[m]));

    worst_recon = std::max(worst_recon, recon);
    worst_sjst = std::max(worst_sjst, sjst);
    worst_inv = std::max(worst_inv, inv);
  }
  out.expect(worst_recon < 1e-8,
             "worst reconstruction error " + num(worst_recon) + " >= 1e-8");
  out.expect(worst_sjst < 1e-10,
             "worst symplectic residual " + num(worst_sjst) + " >= 1e-10");
  out.expect(worst_inv < 1e-8,
             "worst eigenvalue drift under conjugation " + num(worst_inv) +
                 " >= 1e-8");
}

// ---------------------------------------------------------------------------
// Criterion 2: the closed-form ground-state OTOC against the full propagator.

void criterion_2(Outcome& out) {
  Rng rng = Rng::from(2, "acceptance-otoc-oracle", 0);
  double worst = 0.0;
  for (int n : {4, 8, 16}) {
    std::vector<gsc::QuadraticHamiltonian> models;
    models.push_back(gsc::hl_hamiltonian(n, 1.0));
    models.push_back(gsc::dhl_hamiltonian(n, 1.0, 0.5, 1.5, rng));
    models.push_back(
        gsc::random_mq_hamiltonian(n, gsc::Ensemble::GOE, 1.0, 0.1, rng));
    for (const auto& h : models) {
      gsc::GroundOtoc g(h);
      const Mat gen = gsc::apply_form_left(h.assemble());
      for (int it = 0; it < 50; ++it) {
        const double t = 0.05 + it * (12.0 - 0.05) / 49.0;
        const Mat prop = (gen * t).exp();
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            const double oracle = prop(j, k) * prop(j, k);
            worst = std::max(worst, std::abs(g.at(j, k, t) - oracle));
          }
        }
      }
    }
  }
  out.expect(worst < 1e-8,
             "worst deviation from the propagator block " + num(worst) +
                 " >= 1e-8");
}

// ---------------------------------------------------------------------------
// Criterion 3: early-time growth exponents of the quadrature OTOC.

struct OtocCurves {
  Vec t;
  Vec coupled;    // element between directly coupled modes
  Vec separated;  // element between well separated modes
  Vec deficit;    // departure of the diagonal element from 1
};

OtocCurves otoc_curves(const gsc::QuadraticHamiltonian& h, int far_k) {
  const int points = 48;
  OtocCurves c;
  c.t.resize(points);
  c.coupled.resize(points);
  c.separated.resize(points);
  c.deficit.resize(points);
  gsc::GroundOtoc g(h);
  const double lo = std::log(5e-4);
  const double hi = std::log(2e-2);
  for (int i = 0; i < points; ++i) {
    const double t = std::exp(lo + i * (hi - lo) / (points - 1));
    c.t[i] = t;
    c.coupled[i] = g.at(0, 1, t);
    c.separated[i] = g.at(0, far_k, t);
    c.deficit[i] = g.diagonal_deficit(0, t);
  }
  return c;
}

void criterion_3(Outcome& out) {
  const double t_lo = 1e-3;
  const double t_hi = 1e-2;

  // Clean chain: quartic growth between coupled modes, quadratic diagonal
  // deficit. Between modes 1 and 50 every coupling power below 49 vanishes,
  // so in double precision that element sits at the rounding floor across
  // this window; we pin that fact instead of fitting noise.
  OtocCurves hl = otoc_curves(gsc::hl_hamiltonian(100, 1.0), 49);
  const double hl_slope =
      gsc::fit_loglog_slope(hl.t, hl.coupled, t_lo, t_hi).slope;
  const double hl_deficit =
      gsc::fit_loglog_slope(hl.t, hl.deficit, t_lo, t_hi).slope;
  out.expect(std::abs(hl_slope - 4.0) < 0.2,
             "clean chain coupled-pair slope " + num(hl_slope) +
                 " outside 4.0 +- 0.2");
  out.expect(std::abs(hl_deficit - 2.0) < 0.2,
             "clean chain deficit slope " + num(hl_deficit) +
                 " outside 2.0 +- 0.2");
  out.expect(hl.separated.maxCoeff() < 1e-24,
             "clean chain mode-1/mode-50 element " +
                 num(hl.separated.maxCoeff()) +
                 " above the rounding floor 1e-24");

  // Disordered chain and the dense random model, 20 samples each. The dense
  // model couples every pair, so the distant element shows the same quartic
  // law; the disordered chain stays banded and is checked at a coupled pair.
  Rng rng = Rng::from(3, "acceptance-otoc-exponents", 0);
  double dhl_slope = 0.0, dhl_deficit = 0.0, dhl_far = 0.0;
  double goe_slope = 0.0, goe_deficit = 0.0;
  const int samples = 20;
  for (int s = 0; s < samples; ++s) {
    OtocCurves d = otoc_curves(gsc::dhl_hamiltonian(100, 1.0, 0.5, 1.5, rng), 49);
    dhl_slope += gsc::fit_loglog_slope(d.t, d.coupled, t_lo, t_hi).slope;
    dhl_deficit += gsc::fit_loglog_slope(d.t, d.deficit, t_lo, t_hi).slope;
    dhl_far = std::max(dhl_far, d.separated.maxCoeff());

    OtocCurves g = otoc_curves(
        gsc::random_mq_hamiltonian(100, gsc::Ensemble::GOE, 1.0, 0.1, rng), 49);
    goe_slope += gsc::fit_loglog_slope(g.t, g.separated, t_lo, t_hi).slope;
    goe_deficit += gsc::fit_loglog_slope(g.t, g.deficit, t_lo, t_hi).slope;
  }
  dhl_slope /= samples;
  dhl_deficit /= samples;
  goe_slope /= samples;
  goe_deficit /= samples;
  out.expect(std::abs(dhl_slope - 4.0) < 0.3,
             "disordered chain coupled-pair slope " + num(dhl_slope) +
                 " outside 4.0 +- 0.3");
  out.expect(std::abs(dhl_deficit - 2.0) < 0.3,
             "disordered chain deficit slope " + num(dhl_deficit) +
                 " outside 2.0 +- 0.3");
  out.expect(dhl_far < 1e-24, "disordered chain mode-1/mode-50 element " +
                                  num(dhl_far) +
                                  " above the rounding floor 1e-24");
  out.expect(std::abs(goe_slope - 4.0) < 0.3,
             "dense model mode-1/mode-50 slope " + num(goe_slope) +
                 " outside 4.0 +- 0.3");
  out.expect(std::abs(goe_deficit - 2.0) < 0.3,
             "dense model deficit slope " + num(goe_deficit) +
                 " outside 2.0 +- 0.3");
}

// ---------------------------------------------------------------------------
// Criterion 4 (and the Renyi-2 rerun): the mass-quench memory effect.

gsc::ExperimentConfig memory_config(const std::string& model,
                                    const std::string& entropy) {
  gsc::ExperimentConfig c;
  c.experiment = "memory-effect";
  c.model.type = model;
  c.model.n = 200;
  c.model.m = 2.0;
  c.model.m_quench = 1e-7;
  c.partition.block_a = 20;
  c.partition.block_b = 20;
  c.partition.gap = 60;
  c.grid.start = 0.0;
  c.grid.stop = 60.0;
  c.grid.points = 241;
  c.entropy = entropy;
  c.seed = 101;
  if (model == "dhl") {
    c.model.j_low = 0.0;
    c.model.j_high = 2.0;
    c.samples = 20;
    c.qp.enabled = true;
    c.qp.samples = 50;
  }
  return c;
}

void check_memory(Outcome& out, const std::string& entropy,
                  const std::string& tag) {
  gsc::MemoryEffectResult hl =
      gsc::run_memory_effect(memory_config("hl", entropy));
  out.expect(hl.joint_dip.depth > 5.0 * hl.joint_dip.plateau_sd,
             tag + "clean-chain dip depth " + num(hl.joint_dip.depth) +
                 " not above 5 x plateau sd " + num(hl.joint_dip.plateau_sd));

  gsc::MemoryEffectResult dhl =
      gsc::run_memory_effect(memory_config("dhl", entropy));
  out.expect(dhl.joint_dip.depth < 1.0 * dhl.joint_dip.plateau_sd,
             tag + "disordered-chain dip depth " + num(dhl.joint_dip.depth) +
                 " not below 1 x plateau sd " + num(dhl.joint_dip.plateau_sd));
  if (!dhl.qp_dip.has_value()) {
    out.expect(false, tag + "pair-picture overlay missing");
  } else {
    out.expect(dhl.qp_dip->depth < 1.0 * dhl.qp_dip->plateau_sd,
               tag + "pair-picture dip depth " + num(dhl.qp_dip->depth) +
                   " not below 1 x plateau sd " +
                   num(dhl.qp_dip->plateau_sd));
  }
}

void criterion_4(Outcome& out) { check_memory(out, "von_neumann", ""); }

// ---------------------------------------------------------------------------
// Criterion 5 (and the Renyi-2 rerun): brick-wall circuit revivals.

gsc::ExperimentConfig circuit_config(const std::string& policy, int samples,
                                     double noise, const std::string& entropy) {
  gsc::ExperimentConfig c;
  c.experiment = "circuit-memory";
  c.model.type = "circuit";
  c.model.n = 240;
  c.model.bs_policy = policy;
  c.state.lambda = 2.0;
  c.state.noise = noise;
  c.partition.block_a = 40;
  c.partition.block_b = 40;
  c.partition.gap = 100;
  c.grid.steps = 200;
  c.samples = samples;
  c.entropy = entropy;
  c.seed = 103;
  return c;
}

void check_circuit(Outcome& out, const std::string& entropy,
                   const std::string& tag) {
  gsc::CircuitMemoryResult bal =
      gsc::run_circuit_memory(circuit_config("balanced", 1, 0.0, entropy));
  out.expect(bal.revivals.dips >= 2,
             tag + "balanced circuit shows " + num(bal.revivals.dips) +
                 " revival dips, need >= 2");

  gsc::CircuitMemoryResult rnd =
      gsc::run_circuit_memory(circuit_config("resampled", 50, 0.0, entropy));
  out.expect(rnd.revivals.dips == 0,
             tag + "resampled circuit shows " + num(rnd.revivals.dips) +
                 " revival dips, need 0");

  // Classical noise keeps the revival structure at reduced amplitude, so
  // the noisy pair is judged with the shallow (97%) counter; the resampled
  // average must stay flat even at that finer threshold.
  gsc::CircuitMemoryResult bal_noisy =
      gsc::run_circuit_memory(circuit_config("balanced", 1, 1.0, entropy));
  gsc::CircuitMemoryResult rnd_noisy =
      gsc::run_circuit_memory(circuit_config("resampled", 50, 1.0, entropy));
  out.expect(bal_noisy.revivals_shallow.dips >= 2,
             tag + "noise-added balanced circuit shows " +
                 num(bal_noisy.revivals_shallow.dips) +
                 " shallow revival dips, need >= 2");
  out.expect(rnd_noisy.revivals_shallow.dips == 0,
             tag + "noise-added resampled circuit shows " +
                 num(rnd_noisy.revivals_shallow.dips) +
                 " shallow revival dips, need 0");
  out.expect(bal_noisy.revivals.deepest < bal.revivals.deepest,
             tag + "noise-added revival amplitude " +
                 num(bal_noisy.revivals.deepest) + " not below the clean one " +
                 num(bal.revivals.deepest));
}

void criterion_5(Outcome& out) { check_circuit(out, "von_neumann", ""); }

// ---------------------------------------------------------------------------
// Criterion 6 (and the Renyi-2 rerun): tripartite mutual information.

gsc::ExperimentConfig tmi_config(const std::string& entropy) {
  gsc::ExperimentConfig c;
  c.experiment = "tmi";
  c.model.type = "passive_random";
  c.model.n = 200;
  c.state.lambda = 10.0;
  c.partition.n_a = 20;
  c.partition.n_b = 80;
  c.partition.n_c = 30;
  c.partition.gap_ab = 0;
  c.partition.gap_bc = 0;
  c.grid.start = 0.0;
  c.grid.stop = 500.0;
  c.grid.points = 81;
  c.samples = 1;
  c.entropy = entropy;
  c.seed = 107;
  return c;
}

void check_tmi(Outcome& out, const std::string& entropy,
               const std::string& tag) {
  gsc::ExperimentConfig c = tmi_config(entropy);
  c.sweep.lambdas = {1.0, 2.0, 5.0, 10.0};
  gsc::TmiResult res = gsc::run_tmi(c);

  out.expect(res.has_oracle, tag + "haar reference missing");
  out.expect(res.i3_tilde < 0.0,
             tag + "haar reference I3 " + num(res.i3_tilde) + " not negative");
  out.expect(res.max_rel_dev < 0.05,
             tag + "saturation deviation " + num(res.max_rel_dev) +
                 " not below 0.05");

  if (!res.sweep.has_value()) {
    out.expect(false, tag + "squeezing sweep table missing");
  } else {
    const Vec& ratio = res.sweep->data[3];
    bool increasing = true;
    for (int i = 1; i < ratio.size(); ++i) {
      if (ratio[i] <= ratio[i - 1]) increasing = false;
    }
    out.expect(increasing, tag + "sweep ratio not strictly increasing");
    out.expect(ratio[ratio.size() - 1] > 0.9,
               tag + "sweep ratio at the largest squeezing " +
                   num(ratio[ratio.size() - 1]) + " not above 0.9");
  }

  gsc::ExperimentConfig cc = tmi_config(entropy);
  cc.model.type = "circuit";
  cc.model.bs_policy = "balanced";
  cc.grid.steps = 60;
  cc.seed = 109;
  gsc::TmiResult circ = gsc::run_tmi(cc);
  out.expect(circ.min_value < 0.0,
             tag + "circuit I3 minimum " + num(circ.min_value) +
                 " not negative");
  out.expect(circ.rebound_fraction >= 0.10,
             tag + "circuit I3 rebound " + num(circ.rebound_fraction) +
                 " not at least 10% of |min|");
}

void criterion_6(Outcome& out) { check_tmi(out, "von_neumann", ""); }

// ---------------------------------------------------------------------------
// Criterion 7: spectral form factor ramp detection and log-domain sanity.

gsc::ExperimentConfig sff_config(const std::string& model, int samples) {
  gsc::ExperimentConfig c;
  c.experiment = "sff";
  c.model.type = model;
  c.model.n = 100;
  c.model.m = 1.0;
  c.model.scale = 1.0;
  c.samples = samples;
  c.beta = 0.01;
  c.grid.start = 0.1;
  c.grid.stop = 4000.0;
  c.grid.points = 500;
  c.grid.log_spaced = true;
  c.smooth_window = 101;
  c.seed = 113;
  return c;
}

void criterion_7(Outcome& out) {
  gsc::SffResult goe = gsc::run_sff(sff_config("goe", 100));
  out.expect(goe.ramp.window_ok, "dense model ramp window not found");
  out.expect(goe.ramp.slope > 0.0,
             "dense model ramp slope " + num(goe.ramp.slope) + " not positive");
  out.expect(goe.ramp.t_stat > 5.0,
             "dense model ramp t-stat " + num(goe.ramp.t_stat) +
                 " not above 5");
  for (int i = 0; i < goe.series.data[1].size(); ++i) {
    if (goe.series.data[1][i] > 0.0) {
      out.expect(false, "dense model ln g positive at index " + num(i));
      break;
    }
  }

  gsc::SffResult hl = gsc::run_sff(sff_config("hl", 1));
  out.expect(std::abs(hl.ramp.t_stat) < 2.0,
             "clean chain ramp t-stat " + num(hl.ramp.t_stat) +
                 " not inside (-2, 2)");

  gsc::NormalModeData modes = gsc::normal_modes(gsc::hl_hamiltonian(100, 1.0));
  out.expect(gsc::sff_log_total(modes.omegas, 0.01, 0.0) == 0.0,
             "ln g at t = 0 is not exactly zero");

  // The large-system preset must carry the documented full-size overrides.
  std::string preset;
  for (const char* p : {"configs/fig5_goe.json", "../configs/fig5_goe.json",
                        "../../configs/fig5_goe.json"}) {
    if (std::filesystem::exists(p)) {
      preset = p;
      break;
    }
  }
  if (preset.empty()) {
    out.expect(false, "large-scale preset configs/fig5_goe.json not found");
  } else {
    gsc::ExperimentConfig full = gsc::load_config(preset, true);
    out.expect(full.model.n == 500, "large-scale preset does not set n = 500");
    out.expect(full.samples == 300,
               "large-scale preset does not set samples = 300");
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: the quadratic (Renyi-2) entropy reproduces the verdicts.

void criterion_8(Outcome& out) {
  check_memory(out, "renyi2", "renyi2: ");
  check_circuit(out, "renyi2", "renyi2: ");
  check_tmi(out, "renyi2", "renyi2: ");
}

// ---------------------------------------------------------------------------
// Criterion 9: sampled Wigner entropy against the closed form.

void criterion_9(Outcome& out) {
  gsc::ExperimentConfig c;
  c.experiment = "wigner-check";
  c.samples = 100000;
  c.seed = 1;
  gsc::WignerCheckResult res = gsc::run_wigner_check(c);
  for (int i = 0; i < res.report.data[0].size(); ++i) {
    const double z = res.report.data[4][i];
    out.expect(std::abs(z) < 3.0, "state " + res.state_names[i] + " has |z| = " +
                                      num(std::abs(z)) + ", need < 3");
  }
}

// ---------------------------------------------------------------------------
// Criterion 10: byte-identical output across reruns and worker counts.

std::map<std::string, std::string> emit_to_dir(const gsc::ExperimentConfig& c,
                                               int workers,
                                               const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::map<std::string, std::string> bytes;
  for (const auto& table : gsc::run_experiment(c, workers)) {
    const std::string name = gsc::emit_csv(table, dir);
    std::ifstream in(dir + "/" + name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    bytes[name] = buf.str();
  }
  return bytes;
}

void check_deterministic(Outcome& out, const gsc::ExperimentConfig& c,
                         const std::string& root, const std::string& tag) {
  auto a = emit_to_dir(c, 1, root + "/a");
  auto b = emit_to_dir(c, 1, root + "/b");
  auto w = emit_to_dir(c, 4, root + "/w");
  out.expect(a == b, tag + ": repeat run is not byte-identical");
  out.expect(a == w, tag + ": 4-worker run is not byte-identical");
  out.expect(!a.empty(), tag + ": no files produced");
}

void criterion_10(Outcome& out) {
  const std::string root = "acceptance_determinism_tmp";
  std::filesystem::remove_all(root);

  gsc::ExperimentConfig tmi;
  tmi.experiment = "tmi";
  tmi.model.type = "passive_random";
  tmi.model.n = 16;
  tmi.state.lambda = 1.5;
  tmi.partition.n_a = 2;
  tmi.partition.n_b = 3;
  tmi.partition.n_c = 2;
  tmi.partition.gap_ab = 1;
  tmi.partition.gap_bc = 1;
  tmi.grid.stop = 3.0;
  tmi.grid.points = 7;
  tmi.samples = 4;
  tmi.seed = 5;
  check_deterministic(out, tmi, root + "/tmi", "tmi");

  gsc::ExperimentConfig mem;
  mem.experiment = "memory-effect";
  mem.model.type = "dhl";
  mem.model.n = 40;
  mem.model.m = 2.0;
  mem.model.m_quench = 1.0;
  mem.model.j_low = 0.5;
  mem.model.j_high = 1.5;
  mem.partition.block_a = 4;
  mem.partition.block_b = 4;
  mem.partition.gap = 8;
  mem.grid.stop = 14.0;
  mem.grid.points = 71;
  mem.samples = 3;
  mem.qp.enabled = true;
  mem.qp.samples = 5;
  mem.seed = 7;
  check_deterministic(out, mem, root + "/memory", "memory-effect");

  gsc::ExperimentConfig sff;
  sff.experiment = "sff";
  sff.model.type = "goe";
  sff.model.n = 12;
  sff.samples = 3;
  sff.beta = 0.01;
  sff.grid.start = 0.01;
  sff.grid.stop = 100.0;
  sff.grid.points = 40;
  sff.grid.log_spaced = true;
  sff.smooth_window = 5;
  sff.sff.annealed = true;
  sff.sff.discrete = true;
  sff.seed = 9;
  check_deterministic(out, sff, root + "/sff", "sff");

  std::filesystem::remove_all(root);
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  const char* label;
  std::function<void(Outcome&)> run;
  double budget_s;
};

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> list = {
      {1, "williamson reconstruction, symplectic residual, invariant spectra",
       criterion_1, 10.0},
      {2, "ground-state otoc equals the squared propagator block", criterion_2,
       30.0},
      {3, "early-time otoc exponents (quartic coupled, quadratic deficit)",
       criterion_3, 60.0},
      {4, "mass-quench memory: clean chain dips, disorder and pair picture do "
          "not",
       criterion_4, 300.0},
      {5, "circuit revivals: deterministic yes, resampled no, noisy contrast "
          "kept",
       criterion_5, 300.0},
      {6, "tmi: haar-level saturation, sweep ratio rises past 0.9, circuit "
          "rebound",
       criterion_6, 300.0},
      {7, "sff: dense-model ramp, clean chain flat, exact log-domain anchors",
       criterion_7, 600.0},
      {8, "renyi-2 parity: criteria 4-6 verdicts reproduce", criterion_8,
       900.0},
      {9, "wigner sampling |z| < 3 at 1e5 samples for four reference states",
       criterion_9, 30.0},
      {10, "byte-identical output across reruns and worker counts",
       criterion_10, 120.0},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 10) {
      std::cerr << "usage: " << argv[0] << " [criterion 1..10]\n";
      return 2;
    }
  }

  int failures = 0;
  int ran = 0;
  for (const auto& c : all_criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_s) {
      out.failures.push_back("over the " + num(c.budget_s) +
                             " s budget (took " + num(elapsed) + " s)");
    }
    const bool ok = out.failures.empty();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.label << " (" << num(elapsed) << " s)\n";
    for (const auto& f : out.failures) std::cout << "       - " << f << "\n";
    if (!ok) ++failures;
  }
  if (only == 0) {
    std::cout << (ran - failures) << " of " << ran << " criteria passed\n";
  }
  return failures;
}
