#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gscramble/entropy.hpp"
#include "gscramble/models.hpp"
#include "gscramble/series.hpp"

namespace gsc {

// JSON experiment configuration. Parsing is strict: unknown keys anywhere in
// the document are rejected so a typo cannot silently fall back to a default.
// A config may carry a "paper_scale" object holding overrides (same schema,
// any subset of keys); load_config(path, true) merges it over the base
// before parsing.

struct ModelConfig {
  std::string type = "hl";  // hl | dhl | goe | gue | passive_random | circuit
  int n = 0;
  double m = 1.0;
  double m_quench = -1.0;  // < 0: no quench
  double j_low = 1.0;
  double j_high = 1.0;
  double scale = 1.0;
  double shift_margin = 0.1;
  DistributionSpec omega = DistributionSpec::uniform(0.5, 1.5);
  std::string bs_policy = "balanced";  // balanced | fixed_random | resampled
};

struct StateConfig {
  double lambda = 0.0;  // per-mode squeezing of the input product state
  double noise = 0.0;   // classical noise quanta added on top
};

struct PartitionConfig {
  // Two-block experiments.
  int block_a = 0;
  int block_b = 0;
  int gap = 0;
  // Tri-partition experiments.
  int n_a = 0;
  int n_b = 0;
  int n_c = 0;
  int gap_ab = 0;
  int gap_bc = 0;
};

struct GridConfig {
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  bool log_spaced = false;
  int steps = -1;  // circuit experiments use integer steps instead

  TimeGrid time_grid() const;
};

struct OtocConfig {
  int j = 1;  // 1-based mode labels, matching the usual figure conventions
  int k = 0;  // 0: defaults to N/2
  Complex mu{1.0, 0.0};
  Complex nu{0.0, 1.0};
};

struct QpConfig {
  bool enabled = false;
  int samples = 50;
  int n_modes = 0;  // 0: number of lattice modes
  double s = 0.32;
  DistributionSpec v = DistributionSpec::exponential_shifted(1.5, 0.15);
};

struct SweepConfig {
  std::vector<double> lambdas;  // tmi lambda sweep
  std::vector<int> blocks_b;    // tmi-static N_B sweep
};

struct SffConfig {
  bool annealed = false;  // also emit ln<g> next to <ln g>
  bool discrete = false;  // also emit the discrete-level form factor
};

struct ExperimentConfig {
  int schema_version = 1;
  std::string experiment;
  ModelConfig model;
  StateConfig state;
  PartitionConfig partition;
  GridConfig grid;
  int samples = 1;
  std::uint64_t seed = 1;
  std::string entropy = "von_neumann";  // von_neumann | renyi2
  double beta = 0.01;
  OtocConfig otoc;
  QpConfig qp;
  SweepConfig sweep;
  SffConfig sff;
  int smooth_window = 51;
  // Worker count is a runtime knob (CLI flag), deliberately not part of the
  // config: output bytes must not depend on it.
  nlohmann::json paper_scale;  // raw override block, applied on request

  EntropyKind entropy_kind() const;
  bool operator==(const ExperimentConfig& other) const;
};

ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json serialize_config(const ExperimentConfig& config);

// Reads a config file; with apply_paper_scale the "paper_scale" block is
// recursively merged over the base document first.
ExperimentConfig load_config(const std::string& path, bool apply_paper_scale);

// FNV-1a over the canonical serialization; stamped into output metadata.
std::string config_hash(const ExperimentConfig& config);

}  // namespace gsc
