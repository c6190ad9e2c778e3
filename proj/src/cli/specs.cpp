#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <cmath>
#include <regex>
#include <sstream>

#include "cusplab/cli.hpp"
#include "cusplab/errors.hpp"

namespace cusplab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed number '" + s + "' in " + what);
  }
  if (used != s.size() || !std::isfinite(v)) throw DomainError("malformed number '" + s + "' in " + what);
  return v;
}

cf::Digit to_digit(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("malformed digit '" + s + "' in " + what);
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw DomainError("digit '" + s + "' out of range in " + what);
  }
}

std::vector<double> numbers_after(const std::string& spec, const std::string& tag, std::size_t lo, std::size_t hi) {
  const auto parts = split(spec.substr(tag.size()), ',');
  if (parts.size() < lo || parts.size() > hi) throw DomainError("spec '" + spec + "' has the wrong number of fields");
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(to_double(p, spec));
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

cf::ContinuedFraction parse_point(const std::string& raw, std::size_t float_depth) {
  const std::string spec = trim(raw);
  if (spec.empty()) throw DomainError("empty point spec");
  static const std::regex quad(R"(sqrt:(\d+)(?:([+-])(\d+))?(?:/(\d+))?)");
  static const std::regex rational(R"((-?\d+)/(-?\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, quad)) {
    const cf::BigInt D(m[1].str());
    cf::BigInt r = m[3].matched ? cf::BigInt(m[3].str()) : cf::BigInt(0);
    if (m[2].matched && m[2].str() == "-") r = -r;
    const cf::BigInt s = m[4].matched ? cf::BigInt(m[4].str()) : cf::BigInt(1);
    return cf::cf_quadratic(D, r, s);
  }
  if (std::regex_match(spec, m, rational)) {
    cf::BigInt p(m[1].str());
    cf::BigInt q(m[2].str());
    if (q == 0) throw DomainError("rational '" + spec + "' has zero denominator");
    if (q < 0) {
      p = -p;
      q = -q;
    }
    cf::BigInt whole = p / q;
    if (p % q != 0 && p < 0) --whole;
    const cf::BigInt rest = p - whole * q;
    if (rest == 0) return cf::ContinuedFraction({}, {}, whole);
    return cf::ContinuedFraction(cf::cf_expand(rest, q).prefix(), {}, whole);
  }
  if (spec.find_first_of(".eE") != std::string::npos) {
    const double x = to_double(spec, "point spec");
    if (!(x > 0.0 && x < 1.0)) throw DomainError("decimal point spec must lie in (0, 1)");
    return cf::cf_expand(x, float_depth);
  }

  // Digit list with at most one trailing parenthesized period.
  std::vector<cf::Digit> prefix;
  std::vector<cf::Digit> period;
  const auto open = spec.find('(');
  std::string head = spec;
  if (open != std::string::npos) {
    const auto close = spec.find(')', open);
    if (close == std::string::npos || close + 1 != spec.size()) {
      throw DomainError("period in '" + spec + "' must be a final (...) block");
    }
    head = trim(spec.substr(0, open));
    if (!head.empty()) {
      if (head.back() != ',') throw DomainError("missing comma before period in '" + spec + "'");
      head.pop_back();
    }
    for (const auto& d : split(spec.substr(open + 1, close - open - 1), ',')) period.push_back(to_digit(d, spec));
    if (period.empty()) throw DomainError("empty period in '" + spec + "'");
  }
  if (!trim(head).empty()) {
    for (const auto& d : split(head, ',')) prefix.push_back(to_digit(d, spec));
  }
  for (auto d : prefix) {
    if (d == 0) throw DomainError("digits must be >= 1 in '" + spec + "'");
  }
  for (auto d : period) {
    if (d == 0) throw DomainError("digits must be >= 1 in '" + spec + "'");
  }
  return cf::ContinuedFraction(std::move(prefix), std::move(period));
}

growth::GrowthSequence parse_generator(const std::string& raw) {
  const std::string spec = trim(raw);
  if (starts_with(spec, "loggeom:")) {
    const auto v = numbers_after(spec, "loggeom:", 1, 2);
    return growth::GrowthSequence::log_geometric(v[0], v.size() > 1 ? v[1] : 2.0);
  }
  if (starts_with(spec, "geom:")) return growth::GrowthSequence::geometric(numbers_after(spec, "geom:", 1, 1)[0]);
  if (starts_with(spec, "poly:")) {
    const auto v = numbers_after(spec, "poly:", 2, 2);
    return growth::GrowthSequence::polynomial(v[0], v[1]);
  }
  if (starts_with(spec, "spiked:")) {
    const auto v = numbers_after(spec, "spiked:", 1, 2);
    if (v.size() > 1 && (v[1] < 2 || v[1] != std::floor(v[1]))) throw DomainError("spike period must be an integer >= 2");
    return growth::GrowthSequence::spiked(v[0], v.size() > 1 ? static_cast<std::size_t>(v[1]) : 100);
  }
  if (starts_with(spec, "explicit:")) {
    return growth::GrowthSequence::explicit_values(numbers_after(spec, "explicit:", 1, 1'000'000));
  }
  throw DomainError("unknown generator '" + spec + "' (loggeom, geom, poly, spiked, explicit)");
}

frostman::CylinderMeasure parse_weights(const std::string& raw) {
  const std::string spec = trim(raw);
  auto range = [&](const std::string& tag) {
    const auto v = numbers_after(spec, tag, 2, 2);
    if (v[0] < 1 || v[1] < v[0] || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
      throw DomainError("digit range in '" + spec + "' must be integers 1 <= L <= U");
    }
    return std::pair{static_cast<frostman::Digit>(v[0]), static_cast<frostman::Digit>(v[1])};
  };
  if (starts_with(spec, "good:")) {
    const auto v = numbers_after(spec, "good:", 2, 2);
    return frostman::CylinderMeasure::good_set(v[0], v[1]);
  }
  if (starts_with(spec, "harmonic:")) {
    const auto [l, u] = range("harmonic:");
    return frostman::CylinderMeasure::harmonic(l, u);
  }
  if (starts_with(spec, "uniform:")) {
    const auto [l, u] = range("uniform:");
    return frostman::CylinderMeasure::uniform(l, u);
  }
  if (starts_with(spec, "weights:")) {
    const auto rest = spec.substr(8);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw DomainError("weights spec needs 'weights:L:w1,w2,...'");
    const auto lower = to_digit(trim(rest.substr(0, colon)), spec);
    std::vector<double> w;
    for (const auto& p : split(rest.substr(colon + 1), ',')) w.push_back(to_double(p, spec));
    return frostman::CylinderMeasure::from_weights(lower, std::move(w));
  }
  throw DomainError("unknown weight rule '" + spec + "' (good, harmonic, uniform, weights)");
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(t.substr(0, eq));
    if (key.empty()) throw DomainError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(t.substr(eq + 1));
  }
  return out;
}

}  // namespace cusplab::cli
