#pragma once

#include <vector>

// Bessel functions of the first kind for arbitrary real order (including
// negative non-integer orders), plus the reciprocal gamma function. These
// back every partial-wave term in the scattering series.

namespace nabscat::specfun {

struct BesselConfig {
  // Below this argument the power series is used; above it a normalized
  // downward recurrence takes over.
  double series_cutoff_x = 16.0;
  int max_series_terms = 400;
  double target_rel_err = 1e-12;

  void validate() const;  // throws std::invalid_argument
};

const BesselConfig& default_bessel_config();

// 1/Gamma(z). Total: returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double z);

// J_nu(x) for real nu, x >= 0. Negative non-integer nu requires x > 0.
double bessel_j(double nu, double x);
double bessel_j(double nu, double x, const BesselConfig& cfg);

// (J_{nu-1}(x) - J_{nu+1}(x)) / 2, x > 0.
double bessel_j_derivative(double nu, double x);

// J_{nu0+j}(x) for j = j_lo..j_hi with nu0 in [0,1). One recurrence sweep
// serves a whole ladder of orders, which is what the partial-wave sums need
// at every grid point.
std::vector<double> bessel_j_sequence(double nu0, int j_lo, int j_hi, double x);
std::vector<double> bessel_j_sequence(double nu0, int j_lo, int j_hi, double x,
                                      const BesselConfig& cfg);

// Fault-injection hook for the verification harness: adds a constant bias to
// every bessel_j result. Not for production use.
void set_bessel_test_bias(double bias);

}  // namespace nabscat::specfun
