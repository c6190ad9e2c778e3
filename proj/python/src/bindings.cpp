#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "cusplab/cli.hpp"
#include "cusplab/errors.hpp"
#include "cusplab/excursions.hpp"
#include "cusplab/frostman.hpp"
#include "cusplab/growth.hpp"
#include "cusplab/hyperbolic.hpp"
#include "cusplab/spectra.hpp"
#include "cusplab/transfer.hpp"

namespace py = pybind11;
using namespace cusplab;

namespace {

// Boundary points cross as floats, with ±inf for ∞.
hyperbolic::BoundaryPoint boundary(double x) {
  return std::isinf(x) ? hyperbolic::BoundaryPoint::infinity() : hyperbolic::BoundaryPoint(x);
}

double boundary_out(const hyperbolic::BoundaryPoint& b) { return b.is_infinite() ? INFINITY : b.value(); }

hyperbolic::HPoint interior(std::complex<double> z) { return hyperbolic::HPoint(z.real(), z.imag()); }

py::int_ big(const cf::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

cf::BigInt from_py(const py::int_& v) { return cf::BigInt(py::str(v).cast<std::string>()); }

py::dict cf_dict(const cf::ContinuedFraction& x) {
  py::dict d;
  d["integer_part"] = big(x.integer_part());
  d["prefix"] = x.prefix();
  d["period"] = x.period();
  d["reliable_digits"] = x.reliable_digits() == cf::ContinuedFraction::kUnlimited
                             ? py::object(py::none())
                             : py::object(py::int_(x.reliable_digits()));
  return d;
}

py::list trace_rows(const excursions::ExcursionTrace& t) {
  py::list rows;
  for (const auto& e : t.entered) {
    py::dict d;
    d["index"] = e.index;
    d["log_digit"] = e.log_digit;
    d["depth"] = e.depth;
    d["entry"] = e.entry;
    d["exit"] = e.exit;
    d["time"] = e.time;
    d["gap"] = e.gap;
    if (e.digit) d["digit"] = *e.digit;
    rows.append(d);
  }
  return rows;
}

transfer::DigitAlphabet alphabet(const py::object& digits, std::optional<transfer::Digit> at_least) {
  if (at_least) {
    if (!digits.is_none()) throw DomainError("give either digits or at_least");
    return transfer::DigitAlphabet::at_least(*at_least);
  }
  if (digits.is_none()) throw DomainError("an alphabet needs digits or at_least");
  return transfer::DigitAlphabet::from_digits(digits.cast<std::vector<transfer::Digit>>());
}

py::dict estimate_dict(const transfer::DimensionEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["lo"] = e.lo;
  d["hi"] = e.hi;
  d["residual"] = e.residual;
  d["iterations"] = e.iterations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cusp excursions, continued-fraction dimensions and multifractal spectra";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<InsufficientData> insufficient(m, "InsufficientData", domain_error.ptr());
  static py::exception<NumericError> numeric_error(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InsufficientData& e) {
      py::set_error(insufficient, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const NumericError& e) {
      py::set_error(numeric_error, (std::string(e.what()) + " [" + e.diagnostics() + "]").c_str());
    }
  });

  // Geometry
  m.def("hyp_distance", [](std::complex<double> z, std::complex<double> w) {
    return hyperbolic::hyp_distance(interior(z), interior(w));
  });
  m.def("distance_via_crossratio", [](std::complex<double> z, std::complex<double> w) {
    return hyperbolic::distance_via_crossratio(interior(z), interior(w));
  });
  m.def(
      "moebius_apply",
      [](double a, double b, double c, double d, std::complex<double> z) {
        return hyperbolic::MoebiusMap(a, b, c, d)(interior(z)).as_complex();
      },
      "Image of an interior point under z ↦ (az + b)/(cz + d).");
  m.def("geodesic_through", [](std::complex<double> z, std::complex<double> w) {
    const auto g = hyperbolic::geodesic_through(interior(z), interior(w));
    return py::make_tuple(boundary_out(g.start()), boundary_out(g.end()));
  });
  m.def("penetration_depth", [](double base, double size, double start, double end) {
    return hyperbolic::penetration_depth(hyperbolic::Horoball(boundary(base), size),
                                         hyperbolic::Geodesic(boundary(start), boundary(end)))
        .formal_depth;
  });
  m.def("chord_length", &hyperbolic::chord_length);
  m.def("shadow", [](double base, double size, std::complex<double> viewpoint) {
    const auto s = hyperbolic::shadow(hyperbolic::Horoball(boundary(base), size), interior(viewpoint));
    py::dict d;
    d["from"] = boundary_out(s.from);
    d["to"] = boundary_out(s.to);
    d["length"] = s.length();
    d["distance"] = s.distance;
    return d;
  });
  m.def("lemma_geodesic_constants", [](long n) {
    const auto c = hyperbolic::lemma_geodesic_constants(n);
    return py::make_tuple(c.center, c.distance);
  });

  // Continued fractions and excursions
  m.def("parse_point", [](const std::string& spec) { return cf_dict(cli::parse_point(spec)); });
  m.def("cf_rational", [](const py::int_& p, const py::int_& q) {
    return cf::cf_expand(from_py(p), from_py(q)).prefix();
  });
  m.def("cf_float", [](double x, std::size_t n) { return cf_dict(cf::cf_expand(x, n)); }, py::arg("x"),
        py::arg("n") = 64);
  m.def(
      "cf_quadratic",
      [](const py::int_& D, const py::int_& r, const py::int_& s) {
        return cf_dict(cf::cf_quadratic(from_py(D), from_py(r), from_py(s)));
      },
      "Expansion of (√D + r)/s.");
  m.def("convergents", [](std::vector<cf::Digit> digits) {
    py::list out;
    const std::size_t n = digits.size();
    for (const auto& c : cf::convergents(cf::ContinuedFraction(std::move(digits)), n)) {
      out.append(py::make_tuple(big(c.p), big(c.q)));
    }
    return out;
  });
  m.def(
      "excursion_trace",
      [](const std::string& spec, std::size_t horizon) {
        return trace_rows(excursions::excursion_trace(cli::parse_point(spec, horizon + 64), horizon));
      },
      py::arg("point"), py::arg("horizon"));
  m.def("excursion_trace_log", [](std::vector<double> log_digits, std::size_t horizon) {
    return trace_rows(excursions::excursion_trace_log(log_digits, horizon));
  });
  m.def("jarnik_ratios", [](const std::string& generator, std::size_t horizon) {
    const auto r = excursions::jarnik_ratios(growth::synthesize_trace(cli::parse_generator(generator), horizon));
    return py::make_tuple(r.time_ratio_estimate, r.past_ratio_estimate);
  });

  // Dimensions
  m.def(
      "transfer_dimension",
      [](py::object digits, std::optional<transfer::Digit> at_least, std::size_t nodes, double tol) {
        transfer::OperatorOptions o;
        o.nodes = nodes;
        o.tol = tol;
        return estimate_dict(transfer::transfer_dimension(alphabet(digits, at_least), o));
      },
      py::arg("digits") = py::none(), py::arg("at_least") = py::none(), py::arg("nodes") = 32,
      py::arg("tol") = 1e-10);
  m.def(
      "ulam_dimension",
      [](std::vector<transfer::Digit> digits, std::size_t bins) {
        return estimate_dict(transfer::ulam_dimension(transfer::DigitAlphabet::from_digits(digits), bins));
      },
      py::arg("digits"), py::arg("bins") = 4096);
  m.def("crude_critical_exponent", [](transfer::Digit N, int shift) {
    return transfer::crude_critical_exponent(N, shift);
  });
  m.def("good_dimension_sweep", [](std::vector<transfer::Digit> Ns) {
    py::list out;
    for (const auto& r : transfer::good_dimension_sweep(Ns)) {
      py::dict d;
      d["N"] = r.N;
      d["bracket_lo"] = r.bracket_lo;
      d["bracket_hi"] = r.bracket_hi;
      d["estimate"] = r.estimate;
      d["residual"] = r.residual;
      out.append(d);
    }
    return out;
  });
  m.def(
      "seq_omega_rho",
      [](const std::string& generator, std::size_t n_max, double K) {
        const auto r = growth::seq_omega_rho(cli::parse_generator(generator), n_max, K);
        py::dict d;
        d["omega_hat"] = r.omega_hat;
        d["rho_hat"] = r.rho_hat;
        d["rho_hat_inflated"] = r.rho_hat_inflated;
        d["omega_estimate"] = r.omega_estimate;
        d["rho_estimate"] = r.rho_estimate;
        d["rho_closed"] = r.rho_closed;
        d["omega_closed"] = r.omega_closed;
        return d;
      },
      py::arg("generator"), py::arg("n_max"), py::arg("K") = 100.0);
  m.def("jarnik_dimension", &growth::jarnik_dimension);
  m.def(
      "frostman",
      [](const std::string& weights, std::size_t samples, std::uint64_t seed) {
        frostman::FrostmanOptions o;
        o.samples = samples;
        o.seed = seed;
        const auto r = frostman::frostman_sampler(cli::parse_weights(weights), o);
        py::dict d;
        d["fitted_exponent"] = r.fitted_exponent;
        d["min_ratio"] = r.min_ratio;
        d["probes"] = r.probes.size();
        return d;
      },
      py::arg("weights") = "good:10,1", py::arg("samples") = 200, py::arg("seed") = 1);

  // Spectra
  m.def("global_measure_log", [](double t, double penetration, double k, double delta) {
    return spectra::global_measure_log({t, penetration, k}, delta);
  });
  m.def("theta_to_beta", &spectra::theta_to_beta);
  m.def("beta_to_theta", &spectra::beta_to_theta);
  m.def("fp", &spectra::fp);
  m.def("strict_spectrum", &spectra::strict_spectrum);
  m.def("stratmann_spectrum", &spectra::stratmann_spectrum);
  m.def("spectrum_table", [](double delta, std::size_t points) {
    py::list out;
    for (const auto& r : spectra::spectrum_table(delta, points)) out.append(py::make_tuple(r.beta, r.strict, r.stratmann));
    return out;
  });

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
