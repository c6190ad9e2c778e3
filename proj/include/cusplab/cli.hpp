#pragma once

// The `cusplab` command line: argument parsing, point and generator specs,
// CSV tables with provenance headers, and SVG plots.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cusplab/continued_fraction.hpp"
#include "cusplab/frostman.hpp"
#include "cusplab/growth.hpp"

namespace cusplab::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInsufficient = 3, kNumeric = 4 };

/// Runs one command; args exclude the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Point specs:
///   "p/q"                   rational
///   "sqrt:D", "sqrt:D-r/s"  (√D ± r)/s
///   "1,1,100,(1)" or "(2)"  digits, the parenthesized block repeating
///   "0.3"                   decimal, with its reliable digits only
/// Throws DomainError when malformed.
cf::ContinuedFraction parse_point(const std::string& spec, std::size_t float_depth = 64);

/// Generator specs: "loggeom:α[,b]", "geom:c", "poly:c,p", "spiked:ω[,period]",
/// "explicit:s1,s2,...".
growth::GrowthSequence parse_generator(const std::string& spec);

/// Weight specs: "good:τ,κ", "harmonic:L,U", "uniform:L,U", "weights:L:w1,w2,...".
frostman::CylinderMeasure parse_weights(const std::string& spec);

/// "key = value" lines; blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> parse_config(const std::string& text);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& data);

/// %.17g, with "nan" and "inf"/"-inf" spelled out.
std::string format_double(double v);

/// Comma-separated table with "#" provenance lines before the header.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells);
  void add_note(std::string line) { notes_.push_back(std::move(line)); }
  std::size_t rows() const noexcept { return rows_.size(); }

  /// Provenance lines, header, rows, then trailing notes (each "# ...").
  std::string render(const std::vector<std::string>& provenance) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> notes_;
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<double> x_ticks;
  std::vector<double> y_ticks;
  std::vector<double> horizontal_lines;  // drawn dotted across the plot
};

/// Standalone SVG document with an 800×600 viewBox.
std::string render_svg(const Plot& plot);

}  // namespace cusplab::cli
