#include "bessel_oracle.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace testoracle {

namespace {
constexpr mpfr_prec_t kPrec = 320;
}

// J_nu(x) = sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)) with the term
// recurrence t_{k+1} = -t_k (x/2)^2 / ((k+1)(nu+k+1)).
double bessel_j_reference(double nu, double x) {
  if (x < 0.0) throw std::invalid_argument("bessel_j_reference: x must be >= 0");
  // negative integer order: parity identity, Gamma poles would zero the series
  if (nu < 0.0 && nu == std::floor(nu)) {
    const double flip = std::fmod(-nu, 2.0) == 1.0 ? -1.0 : 1.0;
    return flip * bessel_j_reference(-nu, x);
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw std::invalid_argument("bessel_j_reference: negative order at x = 0");
  }

  mpfr_t h, h2, nu_m, term, sum, g, tmp;
  mpfr_inits2(kPrec, h, h2, nu_m, term, sum, g, tmp, (mpfr_ptr)nullptr);
  mpfr_set_d(h, x, MPFR_RNDN);
  mpfr_div_ui(h, h, 2, MPFR_RNDN);          // x/2
  mpfr_sqr(h2, h, MPFR_RNDN);               // (x/2)^2
  mpfr_set_d(nu_m, nu, MPFR_RNDN);

  // t_0 = (x/2)^nu / Gamma(nu+1)
  mpfr_log(tmp, h, MPFR_RNDN);
  mpfr_mul(tmp, tmp, nu_m, MPFR_RNDN);
  mpfr_exp(term, tmp, MPFR_RNDN);           // (x/2)^nu
  mpfr_add_ui(tmp, nu_m, 1, MPFR_RNDN);
  mpfr_gamma(g, tmp, MPFR_RNDN);
  mpfr_div(term, term, g, MPFR_RNDN);
  mpfr_set(sum, term, MPFR_RNDN);

  for (unsigned k = 0; k < 2000; ++k) {
    // t_{k+1} = -t_k h2 / ((k+1)(nu+k+1))
    mpfr_mul(term, term, h2, MPFR_RNDN);
    mpfr_add_ui(tmp, nu_m, k + 1, MPFR_RNDN);
    mpfr_mul_ui(tmp, tmp, k + 1, MPFR_RNDN);
    mpfr_div(term, term, tmp, MPFR_RNDN);
    mpfr_neg(term, term, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    // converged once the terms shrink and are 2^-330 below the sum
    if (k + 1 > x * x / 4.0) {
      mpfr_abs(tmp, sum, MPFR_RNDN);
      mpfr_mul_2si(tmp, tmp, -330, MPFR_RNDN);
      mpfr_abs(g, term, MPFR_RNDN);
      if (mpfr_cmp(g, tmp) < 0) break;
    }
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(h, h2, nu_m, term, sum, g, tmp, (mpfr_ptr)nullptr);
  return out;
}

double reciprocal_gamma_reference(double z) {
  if (z <= 0.0 && z == std::floor(z)) return 0.0;
  mpfr_t g;
  mpfr_init2(g, kPrec);
  mpfr_set_d(g, z, MPFR_RNDN);
  mpfr_gamma(g, g, MPFR_RNDN);
  mpfr_ui_div(g, 1, g, MPFR_RNDN);
  const double out = mpfr_get_d(g, MPFR_RNDN);
  mpfr_clear(g);
  return out;
}

}  // namespace testoracle
