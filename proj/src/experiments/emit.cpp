#include "gscramble/experiments/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef GSCRAMBLE_VERSION
#define GSCRAMBLE_VERSION "unknown"
#endif

namespace gsc {

int ResultTable::rows() const {
  return data.empty() ? 0 : static_cast<int>(data[0].size());
}

void ResultTable::add_meta(const std::string& key, const std::string& value) {
  meta.emplace_back(key, value);
}

void ResultTable::add_meta(const std::string& key, double value) {
  meta.emplace_back(key, format_value(value));
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void validate(const ResultTable& t) {
  if (t.name.empty()) throw std::invalid_argument("emit: unnamed table");
  if (t.columns.empty() || t.columns.size() != t.data.size()) {
    throw std::invalid_argument("emit: column/data mismatch in " + t.name);
  }
  int n = static_cast<int>(t.data[0].size());
  if (n == 0) throw std::invalid_argument("emit: empty series in " + t.name);
  for (const auto& col : t.data) {
    if (col.size() != n) {
      throw std::invalid_argument("emit: ragged columns in " + t.name);
    }
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // no platform newline mangling
  if (!out) throw std::runtime_error("emit: cannot write " + path);
  return out;
}

}  // namespace

std::string emit_csv(const ResultTable& table, const std::string& dir) {
  validate(table);
  std::string file = table.name + ".csv";
  auto out = open_out(dir + "/" + file);
  for (const auto& [k, v] : table.meta) {
    out << "# " << k << ": " << v << "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  }
  const int n = table.rows();
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < table.data.size(); ++c) {
      out << format_value(table.data[c][i])
          << (c + 1 < table.data.size() ? "," : "\n");
    }
  }
  return file;
}

namespace {

struct AxisMap {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double pix_lo = 0.0, pix_hi = 1.0;

  double operator()(double v) const {
    double a = log ? std::log10(v) : v;
    double l = log ? std::log10(lo) : lo;
    double h = log ? std::log10(hi) : hi;
    if (h == l) h = l + 1.0;
    return pix_lo + (a - l) / (h - l) * (pix_hi - pix_lo);
  }
};

bool plotted_column(const std::string& name) {
  return name != "std_error" && name != "sample_count";
}

}  // namespace

std::string emit_svg(const ResultTable& table, const std::string& dir) {
  validate(table);
  std::string file = table.name + ".svg";
  auto out = open_out(dir + "/" + file);

  const int w = 820, h = 520, ml = 70, mr = 20, mt = 30, mb = 50;
  const Vec& x = table.data[0];
  const int n = table.rows();

  double xlo = x.minCoeff(), xhi = x.maxCoeff();
  double ylo = 0.0, yhi = 1.0;
  bool first = true;
  for (std::size_t c = 1; c < table.data.size(); ++c) {
    if (!plotted_column(table.columns[c])) continue;
    for (int i = 0; i < n; ++i) {
      double v = table.data[c][i];
      if (table.log_y && v <= 0.0) continue;
      if (first) {
        ylo = yhi = v;
        first = false;
      } else {
        ylo = std::min(ylo, v);
        yhi = std::max(yhi, v);
      }
    }
  }
  if (first) throw std::invalid_argument("emit_svg: nothing to plot");
  if (ylo == yhi) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  if (table.log_x && xlo <= 0.0) {
    throw std::invalid_argument("emit_svg: log x with nonpositive values");
  }

  AxisMap xmap{xlo, xhi, table.log_x, double(ml), double(w - mr)};
  AxisMap ymap{ylo, yhi, table.log_y, double(h - mb), double(mt)};

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n"
      << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";

  // Frame and ticks.
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
      << (w - ml - mr) << "\" height=\"" << (h - mt - mb)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  const int nticks = 5;
  for (int i = 0; i <= nticks; ++i) {
    double fx = xlo + (xhi - xlo) * i / nticks;
    if (table.log_x) {
      fx = std::pow(10.0, std::log10(xlo) +
                              (std::log10(xhi) - std::log10(xlo)) * i / nticks);
    }
    double px = xmap(fx);
    out << "<line x1=\"" << px << "\" y1=\"" << (h - mb) << "\" x2=\"" << px
        << "\" y2=\"" << (h - mb + 5) << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << (h - mb + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", fx);
    out << buf << "</text>\n";
    double fy = ylo + (yhi - ylo) * i / nticks;
    if (table.log_y) {
      fy = std::pow(10.0, std::log10(ylo) +
                              (std::log10(yhi) - std::log10(ylo)) * i / nticks);
    }
    double py = ymap(fy);
    out << "<line x1=\"" << (ml - 5) << "\" y1=\"" << py << "\" x2=\"" << ml
        << "\" y2=\"" << py << "\" stroke=\"#444\"/>\n"
        << "<text x=\"" << (ml - 8) << "\" y=\"" << (py + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">";
    std::snprintf(buf, sizeof(buf), "%.4g", fy);
    out << buf << "</text>\n";
  }
  out << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 12)
      << "\" font-size=\"13\" text-anchor=\"middle\">" << table.columns[0]
      << "</text>\n";
  out << "<text x=\"" << (w / 2) << "\" y=\"18\" font-size=\"13\" "
         "text-anchor=\"middle\">"
      << table.name << "</text>\n";

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#17becf"};
  int color = 0;
  for (std::size_t c = 1; c < table.data.size(); ++c) {
    if (!plotted_column(table.columns[c])) continue;
    out << "<polyline fill=\"none\" stroke=\"" << kColors[color % 6]
        << "\" stroke-width=\"1.5\" points=\"";
    bool open = false;
    for (int i = 0; i < n; ++i) {
      double v = table.data[c][i];
      if ((table.log_y && v <= 0.0) || (table.log_x && x[i] <= 0.0)) continue;
      out << (open ? " " : "") << xmap(x[i]) << "," << ymap(v);
      open = true;
    }
    out << "\"/>\n";
    // Legend entry.
    out << "<text x=\"" << (w - mr - 8) << "\" y=\"" << (mt + 16 + 14 * color)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\""
        << kColors[color % 6] << "\">" << table.columns[c] << "</text>\n";
    ++color;
  }
  out << "</svg>\n";
  return file;
}

void write_manifest(const std::string& dir, const std::string& experiment,
                    const std::string& config_hash,
                    const std::vector<std::string>& files) {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["config_hash"] = config_hash;
  j["version"] = GSCRAMBLE_VERSION;
  j["files"] = files;
  auto out = open_out(dir + "/manifest.json");
  out << j.dump(2) << "\n";
}

}  // namespace gsc
