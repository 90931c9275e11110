#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gscramble/experiments/config.hpp"
#include "gscramble/experiments/emit.hpp"
#include "gscramble/metrics.hpp"

namespace gsc {

// Every runner is a pure function of (config, workers): ensemble members get
// per-index derived rng streams and are reduced in index order, so the
// worker count never changes the output bytes.

struct MemoryEffectResult {
  ResultTable joint;        // t, value, std_error, sample_count
  ResultTable mutual_info;  // I2 between the two blocks
  std::optional<ResultTable> qp;  // pair-picture overlay
  DipMetric joint_dip;
  std::optional<DipMetric> qp_dip;
  std::vector<ResultTable> tables() const;
};
MemoryEffectResult run_memory_effect(const ExperimentConfig& c,
                                     int workers = 1);

struct CircuitMemoryResult {
  ResultTable series;  // step, value, std_error, sample_count
  RevivalCount revivals;  // dips below 90% of the plateau
  // Same windows at a 97% threshold. Classical noise on the inputs keeps
  // the revival structure but compresses its amplitude to a few percent of
  // the plateau, which the headline counter would miss.
  RevivalCount revivals_shallow;
  DipMetric dip;
  std::vector<ResultTable> tables() const;
};
CircuitMemoryResult run_circuit_memory(const ExperimentConfig& c,
                                       int workers = 1);

struct TmiResult {
  ResultTable series;  // t (or step), value, std_error, sample_count
  std::optional<ResultTable> sweep;  // lambda, i3_tilde, i2_tilde, ratio
  // One-shot Haar references (passive runs only).
  double i3_tilde = 0.0;
  double i2_tilde = 0.0;
  bool has_oracle = false;
  // Saturation quality: max |I3 - i3_tilde| / |i3_tilde| past the first 5%
  // of the grid (passive runs only).
  double max_rel_dev = 0.0;
  // Circuit runs: minimum and how far the curve climbs back afterwards,
  // as a fraction of |min|.
  double min_value = 0.0;
  double rebound_fraction = 0.0;
  std::vector<ResultTable> tables() const;
};
TmiResult run_tmi(const ExperimentConfig& c, int workers = 1);

struct TmiStaticResult {
  // ratio, then one column per input/entropy variant.
  ResultTable table;
  std::vector<ResultTable> tables() const;
};
TmiStaticResult run_tmi_static(const ExperimentConfig& c, int workers = 1);

struct OtocResult {
  ResultTable series;                    // t, value, std_error, sample_count
  std::optional<ResultTable> deficit;    // diagonal 1 - sqrt(C_jj)
  std::optional<ResultTable> saturation; // |V_jk|^2 (passive models)
  std::vector<ResultTable> tables() const;
};
OtocResult run_otoc(const ExperimentConfig& c, int workers = 1);

struct SffResult {
  ResultTable series;  // t, value (<ln g>), std_error, sample_count
  std::optional<ResultTable> annealed;  // ln <g>
  std::optional<ResultTable> discrete;  // discrete-level form factor
  RampReport ramp;
  std::vector<ResultTable> tables() const;
};
SffResult run_sff(const ExperimentConfig& c, int workers = 1);

struct WignerCheckResult {
  ResultTable report;  // state_index, estimate, std_error, predicted, z
  std::vector<std::string> state_names;
  std::vector<ResultTable> tables() const;
};
WignerCheckResult run_wigner_check(const ExperimentConfig& c, int workers = 1);

// Dispatch on config.experiment; returns the tables of the matching runner.
std::vector<ResultTable> run_experiment(const ExperimentConfig& c,
                                        int workers = 1);

}  // namespace gsc
