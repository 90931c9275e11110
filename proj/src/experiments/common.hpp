#pragma once

// Helpers shared by the experiment runners (not installed; runner-local).

#include <algorithm>
#include <string>

#include "gscramble/experiments/config.hpp"
#include "gscramble/experiments/emit.hpp"
#include "gscramble/metrics.hpp"
#include "gscramble/series.hpp"
#include "gscramble/types.hpp"

namespace gsc {
namespace detail {

// First index with t[i] >= bound (== t.size() when past the end).
inline int index_at_or_after(const Vec& t, double bound) {
  int i = 0;
  while (i < t.size() && t[i] < bound) ++i;
  return i;
}

// One past the last index with t[i] <= bound.
inline int index_after(const Vec& t, double bound) {
  int i = 0;
  while (i < t.size() && t[i] <= bound) ++i;
  return i;
}

inline int clamp_index(int i, int n) { return std::max(0, std::min(i, n)); }

inline ResultTable series_table(std::string name, const std::string& x_name,
                                const Vec& x, const SeriesStats& stats) {
  ResultTable tab;
  tab.name = std::move(name);
  tab.columns = {x_name, "value", "std_error", "sample_count"};
  tab.data = {x, stats.mean, stats.std_error,
              Vec::Constant(x.size(), static_cast<double>(stats.n_samples))};
  return tab;
}

inline void add_run_meta(ResultTable& tab, const ExperimentConfig& c) {
  tab.add_meta("experiment", c.experiment);
  tab.add_meta("model", c.model.type);
  tab.add_meta("n_modes", static_cast<double>(c.model.n));
  tab.add_meta("entropy", c.entropy);
  tab.add_meta("samples", static_cast<double>(c.samples));
  tab.add_meta("seed", std::to_string(c.seed));
  tab.add_meta("config_hash", config_hash(c));
}

inline void add_dip_meta(ResultTable& tab, const std::string& prefix,
                         const DipMetric& dip) {
  tab.add_meta(prefix + "_plateau_mean", dip.plateau_mean);
  tab.add_meta(prefix + "_plateau_sd", dip.plateau_sd);
  tab.add_meta(prefix + "_min_value", dip.min_value);
  tab.add_meta(prefix + "_min_index", static_cast<double>(dip.min_index));
  tab.add_meta(prefix + "_depth", dip.depth);
}

}  // namespace detail
}  // namespace gsc
