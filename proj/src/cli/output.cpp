#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cusplab/cli.hpp"
#include "cusplab/errors.hpp"

namespace cusplab::cli {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("table row width does not match its schema");
  rows_.push_back(std::move(cells));
}

std::string Table::render(const std::vector<std::string>& provenance) const {
  std::ostringstream os;
  for (const auto& p : provenance) os << "# " << p << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  line(columns_);
  for (const auto& r : rows_) line(r);
  for (const auto& n : notes_) os << "# " << n << "\n";
  return os.str();
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Plot& plot) {
  constexpr double W = 800, H = 600, left = 80, right = 30, top = 50, bottom = 70;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : plot.series) {
    for (auto [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  for (double y : plot.horizontal_lines) {
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (!(x1 >= x0) || !(y1 >= y0)) throw DomainError("plot has no finite points");
  if (x1 == x0) x1 = x0 + 1.0;
  if (y1 == y0) y1 = y0 + 1.0;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (W - left - right); };
  auto py = [&](double y) { return H - bottom - (y - y0) / (y1 - y0) * (H - top - bottom); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">" << escape(plot.title) << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
     << "\" stroke=\"black\"/>\n";
  for (double t : plot.x_ticks) {
    os << "<line x1=\"" << num(px(t)) << "\" y1=\"" << H - bottom << "\" x2=\"" << num(px(t)) << "\" y2=\""
       << H - bottom + 6 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(px(t)) << "\" y=\"" << H - bottom + 22 << "\" text-anchor=\"middle\" font-size=\"12\">"
       << tick_label(t) << "</text>\n";
  }
  for (double t : plot.y_ticks) {
    os << "<line x1=\"" << left - 6 << "\" y1=\"" << num(py(t)) << "\" x2=\"" << left << "\" y2=\"" << num(py(t))
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 10 << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\" font-size=\"12\">"
       << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"400\" y=\"" << H - 20 << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(plot.x_label)
     << "</text>\n";
  os << "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 300)\">"
     << escape(plot.y_label) << "</text>\n";
  for (double y : plot.horizontal_lines) {
    os << "<line x1=\"" << left << "\" y1=\"" << num(py(y)) << "\" x2=\"" << W - right << "\" y2=\"" << num(py(y))
       << "\" stroke=\"gray\" stroke-dasharray=\"2,4\"/>\n";
  }
  for (const auto& s : plot.series) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\"";
    if (s.dashed) os << " stroke-dasharray=\"8,6\"";
    os << " points=\"";
    bool first = true;
    for (auto [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      os << (first ? "" : " ") << num(px(x)) << "," << num(py(y));
      first = false;
    }
    os << "\"><title>" << escape(s.name) << "</title></polyline>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cusplab::cli
