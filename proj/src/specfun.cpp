#include "specfun.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nabscat::specfun {

namespace {

std::atomic<double> g_test_bias{0.0};

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

bool is_integer(double z) { return z == std::floor(z); }

// sin(pi*z) with argument reduction; exact zero at integer z.
long double sinpi_ld(long double z) {
  long double n = std::nearbyint(z);
  long double r = z - n;
  long double s = std::sin(kPiL * r);
  return (std::fmod(std::fabs(n), 2.0L) == 1.0L) ? -s : s;
}

long double reciprocal_gamma_ld(long double z) {
  if (z >= 0.5L) return 1.0L / std::tgamma(z);
  long double s = sinpi_ld(z);
  if (s == 0.0L) return 0.0L;
  return s / kPiL * std::tgamma(1.0L - z);
}

// Power series sum_k (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)), in long
// double with compensated summation. Well conditioned for x up to the
// series cutoff.
long double series_j(long double nu, long double x, const BesselConfig& cfg) {
  if (x == 0.0L) return nu == 0.0L ? 1.0L : 0.0L;
  const long double h = x / 2.0L;
  const long double h2 = h * h;
  long double term = std::pow(h, nu) * reciprocal_gamma_ld(nu + 1.0L);
  long double sum = term;
  long double comp = 0.0L;
  for (int k = 1; k <= cfg.max_series_terms; ++k) {
    term *= -h2 / (static_cast<long double>(k) * (nu + k));
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::fabs(term) <= 1e-19L * std::fabs(sum) + 1e-4900L &&
        static_cast<long double>(k) * (nu + k) > h2) {
      break;
    }
  }
  return sum;
}

// Normalized downward recurrence (Miller). Computes J_{nu0+j}(x) for
// j = j_lo..j_hi, nu0 in [0,1), using the normalization
//   sum_k (nu0+2k) Gamma(nu0+k)/k! J_{nu0+2k}(x) = (x/2)^{nu0}.
std::vector<double> miller_sequence(double nu0, int j_lo, int j_hi, double x) {
  const long double nu0l = nu0;
  const long double xl = x;
  const int sweep_top =
      static_cast<int>(std::ceil(std::max<double>(j_hi + 1, x) +
                                 10.0 * std::cbrt(std::max(x, 1.0)) + 40.0));
  const int sweep_bot = std::min(j_lo, 0) - 1;
  const int count = sweep_top - sweep_bot + 1;
  std::vector<long double> f(static_cast<size_t>(count));
  // f[i] holds order nu0 + (sweep_bot + i).
  long double fp1 = 0.0L;
  long double fc = 1e-30L;
  f[static_cast<size_t>(sweep_top - sweep_bot)] = fc;
  long double rescale = 1.0L;
  for (int j = sweep_top; j > sweep_bot; --j) {
    long double fm1 = (2.0L * (nu0l + j) / xl) * fc - fp1;
    fp1 = fc;
    fc = fm1;
    if (std::fabs(fc) > 1e4000L) {
      // rescale the whole tail to avoid overflow at small x
      long double inv = 1e-4000L;
      fc *= inv;
      fp1 *= inv;
      for (int i = j - 1 - sweep_bot; i < count; ++i) f[static_cast<size_t>(i)] *= inv;
      rescale *= inv;
      (void)rescale;
    }
    f[static_cast<size_t>(j - 1 - sweep_bot)] = fc;
  }
  // normalization over even offsets >= 0
  long double weight = std::tgamma(nu0l + 1.0L);  // k = 0
  long double ck = weight;                         // Gamma(nu0+k)/k! at k=1
  long double s = weight * f[static_cast<size_t>(0 - sweep_bot)];
  for (int k = 1; 2 * k <= sweep_top; ++k) {
    long double wk = (nu0l + 2.0L * k) * ck;
    s += wk * f[static_cast<size_t>(2 * k - sweep_bot)];
    ck *= (nu0l + k) / (k + 1.0L);
  }
  const long double norm = std::pow(xl / 2.0L, nu0l) / s;
  std::vector<double> out(static_cast<size_t>(j_hi - j_lo + 1));
  for (int j = j_lo; j <= j_hi; ++j) {
    out[static_cast<size_t>(j - j_lo)] =
        static_cast<double>(f[static_cast<size_t>(j - sweep_bot)] * norm);
  }
  return out;
}

double bessel_j_impl(double nu, double x, const BesselConfig& cfg) {
  if (std::isnan(nu) || std::isnan(x) || x < 0.0) {
    throw std::domain_error("bessel_j: invalid argument");
  }
  // snap orders that sit within rounding noise of a negative integer; the
  // reciprocal-gamma recurrence is ill conditioned right next to the poles
  if (nu < 0.0 && std::fabs(nu - std::nearbyint(nu)) < 1e-12) {
    nu = std::nearbyint(nu);
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    if (is_integer(nu)) return 0.0;
    throw std::domain_error("bessel_j: negative non-integer order at x = 0");
  }
  if (nu < 0.0 && is_integer(nu)) {
    double v = bessel_j_impl(-nu, x, cfg);
    return (std::fmod(-nu, 2.0) == 1.0) ? -v : v;
  }
  double result;
  if (x <= cfg.series_cutoff_x) {
    result = static_cast<double>(series_j(nu, x, cfg));
  } else {
    int j = static_cast<int>(std::floor(nu));
    double nu0 = nu - j;
    result = miller_sequence(nu0, j, j, x)[0];
  }
  if (!std::isfinite(result)) {
    throw std::overflow_error("bessel_j: result not representable");
  }
  return result;
}

}  // namespace

void BesselConfig::validate() const {
  if (!(series_cutoff_x > 0.0) || max_series_terms < 50 ||
      !(target_rel_err > 0.0) || !(target_rel_err < 1e-6)) {
    throw std::invalid_argument("BesselConfig: invariant violated");
  }
}

const BesselConfig& default_bessel_config() {
  static const BesselConfig cfg{};
  return cfg;
}

double reciprocal_gamma(double z) {
  if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
  if (z >= 0.5) return 1.0 / std::tgamma(z);
  long double s = sinpi_ld(z);
  if (s == 0.0L) return 0.0;
  return static_cast<double>(s / kPiL * std::tgamma(1.0L - static_cast<long double>(z)));
}

double bessel_j(double nu, double x) { return bessel_j(nu, x, default_bessel_config()); }

double bessel_j(double nu, double x, const BesselConfig& cfg) {
  double v = bessel_j_impl(nu, x, cfg);
  double bias = g_test_bias.load(std::memory_order_relaxed);
  return bias == 0.0 ? v : v + bias;
}

double bessel_j_derivative(double nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_j_derivative: x must be positive");
  return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
}

std::vector<double> bessel_j_sequence(double nu0, int j_lo, int j_hi, double x) {
  return bessel_j_sequence(nu0, j_lo, j_hi, x, default_bessel_config());
}

std::vector<double> bessel_j_sequence(double nu0, int j_lo, int j_hi, double x,
                                      const BesselConfig& cfg) {
  if (!(nu0 >= 0.0) || !(nu0 < 1.0) || j_lo > j_hi || !(x > 0.0)) {
    throw std::domain_error("bessel_j_sequence: invalid arguments");
  }
  std::vector<double> out;
  if (x <= cfg.series_cutoff_x) {
    out.reserve(static_cast<size_t>(j_hi - j_lo + 1));
    for (int j = j_lo; j <= j_hi; ++j) out.push_back(bessel_j(nu0 + j, x, cfg));
  } else {
    out = miller_sequence(nu0, j_lo, j_hi, x);
    double bias = g_test_bias.load(std::memory_order_relaxed);
    if (bias != 0.0) {
      for (double& v : out) v += bias;
    }
  }
  return out;
}

void set_bessel_test_bias(double bias) { g_test_bias.store(bias, std::memory_order_relaxed); }

}  // namespace nabscat::specfun
