#include "gscramble/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsc {

Vec TimeGrid::times() const {
  if (points < 1) throw std::invalid_argument("TimeGrid: points < 1");
  if (points == 1) {
    Vec t(1);
    t[0] = start;
    return t;
  }
  Vec t(points);
  if (log_spaced) {
    if (start <= 0.0 || stop <= 0.0) {
      throw std::invalid_argument("TimeGrid: log spacing needs positive ends");
    }
    double la = std::log(start), lb = std::log(stop);
    for (int i = 0; i < points; ++i) {
      t[i] = std::exp(la + (lb - la) * i / (points - 1.0));
    }
  } else {
    for (int i = 0; i < points; ++i) {
      t[i] = start + (stop - start) * i / (points - 1.0);
    }
  }
  return t;
}

SeriesStats average_series(const std::vector<Vec>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("average_series: no samples");
  }
  const int len = static_cast<int>(samples[0].size());
  for (const auto& s : samples) {
    if (s.size() != len) {
      throw std::invalid_argument("average_series: grid length mismatch");
    }
  }
  const int n = static_cast<int>(samples.size());
  SeriesStats stats;
  stats.n_samples = n;
  stats.mean = Vec::Zero(len);
  for (const auto& s : samples) stats.mean += s;
  stats.mean /= n;
  stats.std_error = Vec::Zero(len);
  if (n > 1) {
    for (const auto& s : samples) {
      stats.std_error.array() += (s - stats.mean).array().square();
    }
    stats.std_error =
        (stats.std_error / (n * (n - 1.0))).array().sqrt().matrix();
  }
  return stats;
}

Vec moving_median(const Vec& x, int window) {
  if (window < 1 || window % 2 == 0) {
    throw std::invalid_argument("moving_median: window must be odd and >= 1");
  }
  const int n = static_cast<int>(x.size());
  const int h = window / 2;
  Vec out(n);
  std::vector<double> buf;
  for (int i = 0; i < n; ++i) {
    int lo = std::max(0, i - h);
    int hi = std::min(n - 1, i + h);
    buf.assign(x.data() + lo, x.data() + hi + 1);
    auto mid = buf.begin() + (buf.size() / 2);
    std::nth_element(buf.begin(), mid, buf.end());
    if (buf.size() % 2 == 1) {
      out[i] = *mid;
    } else {
      double above = *mid;
      double below = *std::max_element(buf.begin(), mid);
      out[i] = 0.5 * (above + below);
    }
  }
  return out;
}

}  // namespace gsc
