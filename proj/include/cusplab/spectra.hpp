#pragma once

// Closed-form multifractal spectra of a δ-conformal measure in terms of the
// local-dimension level β, and the log-measure of shadows along a ray.

#include <cstddef>
#include <vector>

#include "cusplab/excursions.hpp"

namespace cusplab::spectra {

/// A point ξ_t on the ray: time t, penetration Δ into the standard horoball
/// containing it (0 outside), and k = 1 inside a horoball, k = δ outside.
struct MeasureProbe {
  double t;
  double penetration;
  double k;
};

/// log μ(b(ξ_t)) up to an additive constant: −tδ − (δ − k)Δ. Accepts δ in
/// (1/2, 1].
double global_measure_log(const MeasureProbe& probe, double delta);

struct LocalDimension {
  std::vector<double> beta;  // δ − (1 − δ) d_n/t_n per entered excursion
  double tail_sup;
  double tail_inf;  // the lim inf of β matches the lim sup of d_n/t_n
};

/// Throws DegenerateCase for δ = 1 and DomainError for δ outside (1/2, 1)
/// or fewer than 2 excursions.
LocalDimension local_dim_sequence(const excursions::ExcursionTrace& trace, double delta,
                                  double tail_fraction = 0.5);

double theta_to_beta(double theta, double delta);
double beta_to_theta(double beta, double delta);

/// (β − (2δ − 1))/(1 − δ): 0 at β = 2δ − 1 and 1 at β = δ.
double fp(double beta, double delta);

/// fp/2, the dimension of the strict level set.
double strict_spectrum(double beta, double delta);

/// Comparison curve: 0 up to 2δ − 1, δ·fp on (2δ − 1, δ], δ beyond.
double stratmann_spectrum(double beta, double delta);

struct SpectrumRow {
  double beta;
  double strict;
  double stratmann;
};

/// `points` >= 2 evenly spaced levels from 2δ − 1 to δ inclusive.
std::vector<SpectrumRow> spectrum_table(double delta, std::size_t points);

}  // namespace cusplab::spectra
