#include "observables.hpp"

#include <cmath>
#include <stdexcept>

namespace nabscat::observables {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};

double sin2_pi(double a) {
  // sin^2(a pi) with argument reduction so that integer a gives exactly 0
  double r = a - std::nearbyint(a);
  double s = std::sin(kPi * r);
  return s * s;
}
}  // namespace

double probability_density(const std::vector<Complex>& state) {
  double rho = 0.0;
  for (const Complex& v : state) rho += std::norm(v);
  return rho;
}

namespace {

Current dirac_current(const std::vector<Complex>& psi) {
  Current j;
  const Complex bilinear = std::conj(psi[0]) * psi[1] + std::conj(psi[2]) * psi[3];
  j.jx = 2.0 * bilinear.real();
  j.jy = 2.0 * bilinear.imag();
  return j;
}

// (1/M) Re[psi* (Pi psi)] with Pi = -i grad + (alpha_n / r) phi_hat per
// channel; natural units M = hbar = 1
Current kinetic_current(const models::StateEvaluator::Derivatives& d,
                        const std::vector<double>& alphas, double r, double phi) {
  double jr = 0.0;
  double jphi = 0.0;
  for (size_t n = 0; n < d.psi.size(); ++n) {
    const Complex conj_psi = std::conj(d.psi[n]);
    jr += (conj_psi * (-kI * d.dpsi_dr[n])).real();
    jphi += (conj_psi * (-kI * d.dpsi_dphi[n] / r + alphas[n] / r * d.psi[n])).real();
  }
  Current j;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  j.jx = jr * c - jphi * s;
  j.jy = jr * s + jphi * c;
  return j;
}

}  // namespace

Current current_density(const models::StateEvaluator& state, double r, double phi) {
  if (!(r > 0.0)) throw std::invalid_argument("current_density: r must be positive");
  if (models::internal_dim(state.model()) == 2) {
    return dirac_current(state.evaluate(r, phi).psi);
  }
  return kinetic_current(state.evaluate_with_derivatives(r, phi),
                         state.flux().eigenvalues, r, phi);
}

PointSample sample_fields(const models::StateEvaluator& state, double r, double phi) {
  if (!(r > 0.0)) throw std::invalid_argument("sample_fields: r must be positive");
  PointSample out;
  if (models::internal_dim(state.model()) == 2) {
    auto res = state.evaluate(r, phi);
    out.truncation_warning = res.truncation_warning;
    out.psi = std::move(res.psi);
    out.j = dirac_current(out.psi);
  } else {
    auto d = state.evaluate_with_derivatives(r, phi);
    out.truncation_warning = d.truncation_warning;
    out.j = kinetic_current(d, state.flux().eigenvalues, r, phi);
    out.psi = std::move(d.psi);
  }
  out.rho = probability_density(out.psi);
  return out;
}

double sigma_factor(const gauge::FluxSpec& flux, const std::vector<Complex>& coeffs) {
  flux.validate();
  if (coeffs.size() != flux.eigenvalues.size()) {
    throw std::invalid_argument("sigma_factor: coefficient count must equal channel count");
  }
  double norm2 = 0.0;
  for (const Complex& c : coeffs) norm2 += std::norm(c);
  if (std::fabs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument("sigma_factor: coefficients must be normalized");
  }
  double sigma = 0.0;
  for (size_t n = 0; n < coeffs.size(); ++n) {
    sigma += std::norm(coeffs[n]) * sin2_pi(flux.eigenvalues[n]);
  }
  return sigma;
}

double cross_section(double k, double sigma, double phi) {
  if (!(k > 0.0)) throw std::invalid_argument("cross_section: k must be positive");
  if (sigma < 0.0) throw std::invalid_argument("cross_section: sigma must be non-negative");
  const double reduced = phi / (2.0 * kPi) - std::nearbyint(phi / (2.0 * kPi));
  if (std::fabs(std::fabs(reduced) - 0.5) < 1e-15) {
    throw std::domain_error("cross_section: forward divergence at phi = pi");
  }
  const double c = std::cos(0.5 * phi);
  return sigma / (2.0 * kPi * k * c * c);
}

std::vector<double> sigma_map(gauge::GroupTag group, const std::vector<Complex>& coeffs,
                              double a0, double a1, double b0, double b1, int n_alpha,
                              int n_beta) {
  if (n_alpha < 2 || n_beta < 2) throw std::invalid_argument("sigma_map: resolution must be >= 2");
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(b0) || !std::isfinite(b1)) {
    throw std::invalid_argument("sigma_map: ranges must be finite");
  }
  std::vector<double> out(static_cast<size_t>(n_alpha) * static_cast<size_t>(n_beta));
  for (int ib = 0; ib < n_beta; ++ib) {
    const double beta = b0 + (b1 - b0) * ib / (n_beta - 1);
    for (int ia = 0; ia < n_alpha; ++ia) {
      const double alpha = a0 + (a1 - a0) * ia / (n_alpha - 1);
      gauge::FluxSpec flux;
      switch (group) {
        case gauge::GroupTag::Su2: flux = gauge::FluxSpec::su2(alpha); break;
        case gauge::GroupTag::Su3: flux = gauge::FluxSpec::su3(alpha, beta); break;
        case gauge::GroupTag::U2: flux = gauge::FluxSpec::u2(alpha, beta); break;
      }
      out[static_cast<size_t>(ib) * static_cast<size_t>(n_alpha) + static_cast<size_t>(ia)] =
          sigma_factor(flux, coeffs);
    }
  }
  return out;
}

}  // namespace nabscat::observables
