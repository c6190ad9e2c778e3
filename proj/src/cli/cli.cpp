#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cusplab/cli.hpp"
#include "cusplab/errors.hpp"
#include "cusplab/excursions.hpp"
#include "cusplab/spectra.hpp"
#include "cusplab/transfer.hpp"

namespace cusplab::cli {

namespace {

// Effective settings: defaults, then the config file, then flags.
class Settings {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string str(const std::string& key, const std::string& fallback = "") const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double real(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    const auto& s = values_.at(key);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw DomainError(key + ": malformed number '" + s + "'");
    return v;
  }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const auto& s = values_.at(key);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw DomainError(key + ": expected a nonnegative integer, got '" + s + "'");
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw DomainError(key + ": '" + s + "' out of range");
    }
  }

  bool flag(const std::string& key) const {
    const auto v = str(key, "false");
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw DomainError(key + ": expected a boolean, got '" + v + "'");
  }

  // Canonical "key=value" lines over everything that can change the table.
  std::string canonical(const std::string& command) const {
    std::string out = "command=" + command + "\n";
    for (const auto& [k, v] : values_) {
      if (k == "out" || k == "svg" || k == "config") continue;
      out += k + "=" + v + "\n";
    }
    return out;
  }

  std::string summary() const {
    std::string out;
    for (const auto& [k, v] : values_) {
      if (k == "out" || k == "svg" || k == "config") continue;
      out += (out.empty() ? "" : " ") + k + "=" + v;
    }
    return out;
  }

 private:
  std::map<std::string, std::string> values_;
};

const std::set<std::string> kKnownKeys = {
    "seed",  "horizon", "tol", "nodes",   "truncation_extra", "truncation_scale", "svg",    "out",
    "kappa", "tau",     "K",   "grid",    "samples", "depth",            "point",            "ns",     "generator",
    "delta", "weights"};

struct Output {
  std::string csv;
  std::optional<Plot> plot;
};

transfer::OperatorOptions operator_options(const Settings& s) {
  transfer::OperatorOptions o;
  o.tol = s.real("tol", o.tol);
  o.nodes = s.count("nodes", o.nodes);
  o.truncation_extra = s.count("truncation_extra", o.truncation_extra);
  o.truncation_scale = s.count("truncation_scale", o.truncation_scale);
  if (!(o.tol > 0.0)) throw DomainError("tol must be > 0");
  if (o.nodes < 8) throw DomainError("nodes must be >= 8");
  return o;
}

std::vector<std::string> provenance(const std::string& command, const Settings& s) {
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a(s.canonical(command));
  return {"cusplab " + command, "config_hash=" + hash.str(), "seed=" + std::to_string(s.count("seed", 1)),
          "config: " + s.summary()};
}

std::string require(const Settings& s, const std::string& key, const std::string& what) {
  if (!s.has(key) || s.str(key).empty()) throw DomainError("missing " + what);
  return s.str(key);
}

Output cmd_cf(const Settings& s) {
  const auto n = s.count("horizon", 10);
  const auto x = parse_point(require(s, "point", "point spec"), n + 64);
  const std::size_t rows = std::min<std::size_t>(n, std::min(x.size(), x.reliable_digits()));
  const auto conv = cf::convergents(x, rows);
  Table t({"n", "a_n", "p_n", "q_n"});
  for (std::size_t k = 0; k < rows; ++k) {
    t.add_row({std::to_string(k + 1), std::to_string(x.digit(k + 1)), conv[k].p.str(), conv[k].q.str()});
  }
  t.add_note("integer_part=" + x.integer_part().str());
  t.add_note(std::string("periodic=") + (x.is_periodic() ? "true" : "false"));
  return {t.render(provenance("cf", s)), std::nullopt};
}

Output cmd_excursions(const Settings& s) {
  const auto horizon = s.count("horizon", 20);
  if (horizon == 0) throw DomainError("horizon must be >= 1");
  const double kappa = s.real("kappa", 1.0);
  const double tau = s.real("tau", 1.0);
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (!(tau >= 1.0)) throw DomainError("tau must be >= 1");
  const auto x = parse_point(require(s, "point", "point spec"), horizon + 64);
  const auto trace = excursions::excursion_trace(x, horizon);
  const auto member = excursions::good_membership(trace, tau, kappa);

  Table t({"n", "a_next", "d_n", "t_n", "gap_n", "d_over_t", "good_flag"});
  Plot plot{"Excursion depths", "t_n", "d_n", {}, {}, {}, {}};
  Series depth{"d_n", {}, false};
  for (std::size_t i = 0; i < trace.entered.size(); ++i) {
    const auto& e = trace.entered[i];
    const bool good = member.depth_ok[i] && member.gap_ok[i];
    t.add_row({std::to_string(e.index), std::to_string(*e.digit), format_double(e.depth), format_double(e.time),
               format_double(e.gap), format_double(e.depth / e.time), good ? "1" : "0"});
    depth.points.emplace_back(e.time, e.depth);
  }
  plot.series.push_back(std::move(depth));
  if (trace.entered.size() >= 2) {
    const auto r = excursions::jarnik_ratios(trace);
    t.add_note("summary time_ratio_estimate=" + format_double(r.time_ratio_estimate) +
               " past_ratio_estimate=" + format_double(r.past_ratio_estimate));
  }
  const double gap = excursions::gap_bound_estimate(std::span(&trace, 1));
  t.add_note("summary entered=" + std::to_string(trace.entered.size()) + " skipped=" +
             std::to_string(trace.skipped.size()) + " max_gap=" + format_double(gap) +
             " good=" + (member.verdict ? "1" : "0"));
  return {t.render(provenance("excursions", s)), plot};
}

std::vector<transfer::Digit> parse_ns(const std::string& spec) {
  std::vector<transfer::Digit> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw DomainError("N list: malformed entry '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw DomainError("N list is empty");
  return out;
}

Output cmd_dim_fn(const Settings& s) {
  const auto ns = parse_ns(require(s, "ns", "N list"));
  for (auto N : ns) {
    if (N < 2) throw DomainError("N = " + std::to_string(N) + ": the crude bracket needs N >= 2");
  }
  const auto rows = transfer::good_dimension_sweep(ns, operator_options(s));
  Table t({"N", "bracket_lo", "bracket_hi", "dim_estimate", "residual"});
  Plot plot{"Dimension of F_N", "log N", "dimension", {}, {}, {0.5, 0.75, 1.0}, {0.5}};
  Series est{"estimate", {}, false}, lo{"bracket_lo", {}, true}, hi{"bracket_hi", {}, true};
  for (const auto& r : rows) {
    t.add_row({std::to_string(r.N), format_double(r.bracket_lo), format_double(r.bracket_hi),
               format_double(r.estimate), format_double(r.residual)});
    const double x = std::log(static_cast<double>(r.N));
    est.points.emplace_back(x, r.estimate);
    lo.points.emplace_back(x, r.bracket_lo);
    hi.points.emplace_back(x, r.bracket_hi);
    plot.x_ticks.push_back(x);
  }
  plot.series = {est, lo, hi};
  return {t.render(provenance("dim-fn", s)), plot};
}

Output cmd_dim_seq(const Settings& s) {
  const auto seq = parse_generator(require(s, "generator", "generator spec"));
  std::size_t n_max = 30;
  if (auto len = seq.length()) n_max = *len > 1 ? *len - 1 : 1;
  n_max = s.count("horizon", n_max);
  const auto r = growth::seq_omega_rho(seq, n_max, s.real("K", 100.0));
  Table t({"n", "omega_hat", "rho_hat", "rho_closed"});
  const double closed = r.rho_closed ? *r.rho_closed : std::nan("");
  Plot plot{"Critical exponent estimates", "n", "rho_hat", {}, {}, {}, {}};
  Series rho{"rho_hat", {}, false};
  for (std::size_t n = 1; n <= n_max; ++n) {
    t.add_row({std::to_string(n), format_double(r.omega_hat[n - 1]), format_double(r.rho_hat[n - 1]),
               format_double(closed)});
    rho.points.emplace_back(static_cast<double>(n), r.rho_hat[n - 1]);
  }
  plot.series.push_back(std::move(rho));
  if (r.rho_closed) plot.horizontal_lines.push_back(closed);
  t.add_note("summary omega_estimate=" + format_double(r.omega_estimate) + " rho_estimate=" +
             format_double(r.rho_estimate) + " rho_inflated_estimate=" + format_double(r.rho_inflated_estimate) +
             " omega_closed=" + format_double(r.omega_closed ? *r.omega_closed : std::nan("")));
  return {t.render(provenance("dim-seq", s)), plot};
}

Output cmd_spectrum(const Settings& s) {
  const double delta = s.real("delta", std::nan(""));
  if (std::isnan(delta)) throw DomainError("missing δ");
  const auto rows = spectra::spectrum_table(delta, s.count("grid", 101));
  Table t({"beta", "strict", "stratmann"});
  Plot plot{"Multifractal spectra", "beta", "dimension", {}, {2 * delta - 1, delta}, {0.0, 0.5, delta}, {}};
  Series strict{"strict", {}, false}, strat{"stratmann", {}, true};
  for (const auto& r : rows) {
    t.add_row({format_double(r.beta), format_double(r.strict), format_double(r.stratmann)});
    strict.points.emplace_back(r.beta, r.strict);
    strat.points.emplace_back(r.beta, r.stratmann);
  }
  plot.series = {strat, strict};
  return {t.render(provenance("spectrum", s)), plot};
}

Output cmd_frostman(const Settings& s) {
  const auto measure = parse_weights(s.str("weights", "good:10,1"));
  frostman::FrostmanOptions opt;
  opt.samples = s.count("samples", opt.samples);
  opt.depth = s.count("depth", opt.depth);
  opt.seed = s.count("seed", 1);
  const auto rep = frostman::frostman_sampler(measure, opt);
  Table t({"xi_id", "xi", "r", "mass", "log_ratio"});
  Plot plot{"Ball masses", "log r", "mean log mass", {}, {}, {}, {}};
  Series mean{"mean log mass", {}, false};
  std::vector<double> sum(opt.radii.size(), 0.0);
  for (std::size_t i = 0; i < rep.probes.size(); ++i) {
    const auto& p = rep.probes[i];
    t.add_row({std::to_string(p.sample), format_double(p.xi), format_double(p.r), format_double(p.mass),
               format_double(p.log_ratio)});
    sum[i % opt.radii.size()] += std::log(p.mass);
  }
  for (std::size_t j = 0; j < opt.radii.size(); ++j) {
    mean.points.emplace_back(std::log(opt.radii[j]), sum[j] / static_cast<double>(opt.samples));
  }
  plot.series.push_back(std::move(mean));
  t.add_note("summary fitted_exponent=" + format_double(rep.fitted_exponent) +
             " min_ratio=" + format_double(rep.min_ratio) + " digits=" + std::to_string(measure.lower()) + ".." +
             std::to_string(measure.upper()));
  return {t.render(provenance("frostman", s)), plot};
}

void emit(const std::string& command, const Output& o, const Settings& s, std::ostream& out) {
  const bool svg = s.flag("svg");
  if (!s.has("out")) {
    if (svg) throw DomainError("--svg needs --out DIR");
    out << o.csv;
    return;
  }
  const std::filesystem::path dir(s.str("out"));
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DomainError("cannot create output directory " + dir.string() + ": " + ec.message());
  auto write = [&](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
    if (!f) throw DomainError("cannot write " + p.string());
  };
  write(dir / (command + ".csv"), o.csv);
  if (svg && o.plot) write(dir / (command + ".svg"), render_svg(*o.plot));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cusp excursions, continued-fraction dimensions and multifractal spectra", "cusplab"};
  app.fallthrough();
  app.require_subcommand(1);
  std::map<std::string, std::string> flags;
  auto opt = [&](CLI::App* a, const std::string& name, const std::string& key, const std::string& help) {
    a->add_option(name, flags[key], help);
  };
  opt(&app, "--config", "config", "flat key = value file; flags override it");
  opt(&app, "--out", "out", "write <command>.csv (and .svg) into this directory");
  opt(&app, "--seed", "seed", "64-bit seed");
  opt(&app, "--horizon", "horizon", "number of digits, excursions or sequence terms");
  opt(&app, "--tol", "tol", "bisection tolerance on s");
  opt(&app, "--nodes", "nodes", "collocation nodes");
  bool svg = false;
  app.add_flag("--svg", svg, "also write an SVG plot");

  auto* cf = app.add_subcommand("cf", "continued fraction digits and convergents");
  opt(cf, "point", "point", "p/q, sqrt:D[±r][/s], digit list like 1,1,(2), or a decimal");
  auto* exc = app.add_subcommand("excursions", "cusp excursion trace");
  opt(exc, "point", "point", "point spec, as for cf");
  opt(exc, "--kappa", "kappa", "gap bound κ");
  opt(exc, "--tau", "tau", "depth threshold τ");
  auto* dfn = app.add_subcommand("dim-fn", "dimension of digit sets {N, N+1, ...}");
  opt(dfn, "ns", "ns", "comma-separated N values, each >= 2");
  auto* dseq = app.add_subcommand("dim-seq", "growth and critical exponents of a sequence");
  opt(dseq, "generator", "generator", "loggeom:α[,b] | geom:c | poly:c,p | spiked:ω[,P] | explicit:s1,...");
  opt(dseq, "--K", "K", "inflation constant");
  auto* spec = app.add_subcommand("spectrum", "strict and comparison spectra");
  opt(spec, "delta", "delta", "exponent δ in (1/2, 1)");
  opt(spec, "--grid", "grid", "number of β levels");
  auto* fro = app.add_subcommand("frostman", "ball masses of a cylinder measure");
  opt(fro, "weights", "weights", "good:τ,κ | harmonic:L,U | uniform:L,U | weights:L:w1,...");
  opt(fro, "--samples", "samples", "sampled points");
  opt(fro, "--depth", "depth", "digits per sampled point");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cusplab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    Settings s;
    if (auto* o = app.get_option("--config"); o->count() > 0) {
      std::ifstream f(flags["config"]);
      if (!f) throw DomainError("cannot read config file " + flags["config"]);
      std::stringstream text;
      text << f.rdbuf();
      for (const auto& [k, v] : parse_config(text.str())) {
        if (!kKnownKeys.count(k)) throw DomainError("unknown config key '" + k + "'");
        s.set(k, v);
      }
    }
    auto given = [&](const CLI::App* a, const std::string& name) {
      try {
        return a->get_option(name)->count() > 0;
      } catch (const CLI::OptionNotFound&) {
        return false;
      }
    };
    for (const auto& [key, value] : flags) {
      if (key == "config") continue;
      const std::string name = (key == "point" || key == "ns" || key == "generator" || key == "delta" ||
                                key == "weights")
                                   ? key
                                   : "--" + key;
      if (given(&app, name) || given(sub, name)) s.set(key, value);
    }
    if (svg) s.set("svg", "true");

    Output o;
    if (command == "cf") o = cmd_cf(s);
    else if (command == "excursions") o = cmd_excursions(s);
    else if (command == "dim-fn") o = cmd_dim_fn(s);
    else if (command == "dim-seq") o = cmd_dim_seq(s);
    else if (command == "spectrum") o = cmd_spectrum(s);
    else o = cmd_frostman(s);
    emit(command, o, s, out);
    return kOk;
  } catch (const InsufficientData& e) {
    err << "cusplab: insufficient data: " << e.what() << "\n";
    return kInsufficient;
  } catch (const DomainError& e) {
    err << "cusplab: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericError& e) {
    err << "cusplab: numeric failure: " << e.what() << "\n" << "diagnostics: " << e.diagnostics() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    err << "cusplab: numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
}

}  // namespace cusplab::cli
