#include "gauge.hpp"

#include <cmath>
#include <stdexcept>

namespace nabscat::gauge {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(what);
}
}  // namespace

int channel_count(GroupTag tag) {
  switch (tag) {
    case GroupTag::Su2: return 2;
    case GroupTag::Su3: return 3;
    case GroupTag::U2: return 2;
  }
  throw std::invalid_argument("unknown group tag");
}

FluxSpec FluxSpec::su2(double alpha) {
  require_finite(alpha, "su2_flux: alpha must be finite");
  return FluxSpec{GroupTag::Su2, {alpha, -alpha}};
}

FluxSpec FluxSpec::su3(double alpha, double beta) {
  require_finite(alpha, "su3_flux: alpha must be finite");
  require_finite(beta, "su3_flux: beta must be finite");
  return FluxSpec{GroupTag::Su3, {beta + alpha, beta - alpha, -2.0 * beta}};
}

FluxSpec FluxSpec::u2(double alpha, double beta) {
  require_finite(alpha, "u2_flux: alpha must be finite");
  require_finite(beta, "u2_flux: beta must be finite");
  return FluxSpec{GroupTag::U2, {beta + alpha, beta - alpha}};
}

double FluxSpec::max_abs_eigenvalue() const {
  double m = 0.0;
  for (double a : eigenvalues) m = std::max(m, std::fabs(a));
  return m;
}

void FluxSpec::validate() const {
  if (channels() != channel_count(group)) {
    throw std::invalid_argument("FluxSpec: eigenvalue count does not match group");
  }
  double trace = 0.0;
  for (double a : eigenvalues) {
    require_finite(a, "FluxSpec: eigenvalue must be finite");
    trace += a;
  }
  // su(N) generators are traceless
  if ((group == GroupTag::Su2 || group == GroupTag::Su3) && std::fabs(trace) > 1e-12) {
    throw std::invalid_argument("FluxSpec: su(N) flux must be traceless");
  }
}

std::vector<std::complex<double>> polarization_vector(const FluxSpec& flux, int channel) {
  if (channel < 1 || channel > flux.channels()) {
    throw std::invalid_argument("polarization_vector: channel out of range");
  }
  std::vector<std::complex<double>> w(static_cast<size_t>(flux.channels()), 0.0);
  w[static_cast<size_t>(channel - 1)] = 1.0;
  return w;
}

GaugePotential gauge_potential(const FluxSpec& flux, double x, double y) {
  const double r2 = x * x + y * y;
  if (r2 == 0.0) throw std::domain_error("gauge_potential: singular at the origin");
  GaugePotential out;
  out.ax.reserve(flux.eigenvalues.size());
  out.ay.reserve(flux.eigenvalues.size());
  for (double a : flux.eigenvalues) {
    out.ax.push_back(-a * y / (kTwoPi * r2));
    out.ay.push_back(a * x / (kTwoPi * r2));
  }
  return out;
}

std::vector<std::complex<double>> wilson_loop(const FluxSpec& flux) {
  std::vector<std::complex<double>> w;
  w.reserve(flux.eigenvalues.size());
  for (double a : flux.eigenvalues) {
    w.push_back(std::polar(1.0, kTwoPi * a));
  }
  return w;
}

}  // namespace nabscat::gauge
