#pragma once

#include <complex>
#include <vector>

#include "gauge.hpp"
#include "models.hpp"

// Probability density, probability current, differential cross section and
// the cross-section factor Sigma, including (alpha, beta)-plane sweeps.

namespace nabscat::observables {

using Complex = std::complex<double>;

double probability_density(const std::vector<Complex>& state);

struct Current {
  double jx = 0.0;
  double jy = 0.0;
};

// Probability current at a point. Schroedinger-type models use analytic
// series derivatives plus the gauge term; the Dirac-type U(2) model uses the
// algebraic bilinear form (no derivatives).
Current current_density(const models::StateEvaluator& state, double r, double phi);

// State vector, density and current at one point, with a single series
// evaluation.
struct PointSample {
  std::vector<Complex> psi;
  double rho = 0.0;
  Current j;
  bool truncation_warning = false;
};
PointSample sample_fields(const models::StateEvaluator& state, double r, double phi);

// Sigma = sum_n |c_n|^2 sin^2(alpha_n pi). Coefficients must be normalized.
double sigma_factor(const gauge::FluxSpec& flux, const std::vector<Complex>& coeffs);

// sigma(phi) = Sigma / (2 pi k cos^2(phi/2)); diverges at phi = pi.
double cross_section(double k, double sigma, double phi);

// Sigma on an (alpha, beta) grid. Row-major with beta as the row index:
// out[ib * n_alpha + ia] for alpha_ia = a0 + ia*(a1-a0)/(n_alpha-1), same
// for beta.
std::vector<double> sigma_map(gauge::GroupTag group, const std::vector<Complex>& coeffs,
                              double a0, double a1, double b0, double b1, int n_alpha,
                              int n_beta);

}  // namespace nabscat::observables
