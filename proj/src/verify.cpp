#include "verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "contour.hpp"
#include "gauge.hpp"
#include "models.hpp"
#include "observables.hpp"
#include "specfun.hpp"

namespace nabscat::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
using Complex = std::complex<double>;

struct Reporter {
  const ReportSink& sink;
  int failures = 0;

  void check(const char* name, double err, double tol) {
    const bool ok = err <= tol;
    if (!ok) ++failures;
    char line[160];
    std::snprintf(line, sizeof(line), "%s %-48s max_err=%.3e tol=%.1e",
                  ok ? "PASS" : "FAIL", name, err, tol);
    sink(line);
  }
};

double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(want), 1e-300);
  return std::fabs(got - want) / scale;
}

double bessel_recurrence_err() {
  double worst = 0.0;
  for (double nu : {-4.3, -1.5, -0.5, 0.0, 0.7, 3.0, 12.5, 27.0}) {
    for (double x : {0.1, 0.9, 3.7, 11.0, 24.0, 55.0, 79.0}) {
      const double lhs = specfun::bessel_j(nu - 1.0, x) + specfun::bessel_j(nu + 1.0, x);
      const double rhs = 2.0 * nu / x * specfun::bessel_j(nu, x);
      const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-3});
      worst = std::max(worst, std::fabs(lhs - rhs) / scale);
    }
  }
  return worst;
}

double half_integer_err() {
  double worst = 0.0;
  for (double x = 0.1; x <= 80.0; x += 3.7) {
    const double f = std::sqrt(2.0 / (kPi * x));
    worst = std::max(worst, rel_err(specfun::bessel_j(0.5, x), f * std::sin(x)));
    worst = std::max(worst, rel_err(specfun::bessel_j(-0.5, x), f * std::cos(x)));
  }
  return worst;
}

double wilson_loop_err() {
  double worst = 0.0;
  for (auto flux : {gauge::FluxSpec::su2(0.37), gauge::FluxSpec::su3(0.2, 1.0 / 3.0),
                    gauge::FluxSpec::u2(0.5, 0.25)}) {
    const auto w = gauge::wilson_loop(flux);
    gauge::FluxSpec shifted = flux;
    shifted.eigenvalues[0] += 3.0;
    if (flux.group != gauge::GroupTag::U2) shifted.eigenvalues[1] -= 3.0;
    const auto w2 = gauge::wilson_loop(shifted);
    for (size_t i = 0; i < w.size(); ++i) {
      worst = std::max(worst, std::fabs(std::abs(w[i]) - 1.0));
    }
    worst = std::max(worst, std::abs(w2[0] - w[0]));
  }
  return worst;
}

double flatness_err() {
  const auto flux = gauge::FluxSpec::su3(0.4, 0.1);
  const double h = 1e-4;
  double worst = 0.0;
  for (auto [x, y] : {std::pair{1.3, 0.4}, std::pair{-2.0, 1.0}, std::pair{0.5, -3.0}}) {
    const auto axp = gauge::gauge_potential(flux, x + h, y);
    const auto axm = gauge::gauge_potential(flux, x - h, y);
    const auto ayp = gauge::gauge_potential(flux, x, y + h);
    const auto aym = gauge::gauge_potential(flux, x, y - h);
    for (size_t n = 0; n < flux.eigenvalues.size(); ++n) {
      const double curl =
          (axp.ay[n] - axm.ay[n]) / (2.0 * h) - (ayp.ax[n] - aym.ax[n]) / (2.0 * h);
      worst = std::max(worst, std::fabs(curl));
    }
  }
  return worst;
}

double zero_flux_reduction_err() {
  double worst = 0.0;
  const models::TruncationSpec trunc{40, false};
  for (auto model :
       {models::ModelId::Su2Doublet, models::ModelId::Su3Triplet, models::ModelId::U2Doublet}) {
    const auto flux = models::make_flux(model, 0.0, 0.0);
    for (int s : {+1, -1}) {
      if (!models::band_allowed(model, s)) continue;
      models::ModeSpec mode{model, s, 1, 1.0, 0.3};
      // hole-like bands: the incoming wave travels along theta, so its
      // momentum points the opposite way
      models::ModeSpec incident = mode;
      if (models::radial_velocity_sign(model, s) < 0) incident.theta += kPi;
      for (auto [r, phi] : {std::pair{0.5, 0.0}, std::pair{4.0, 1.1}, std::pair{9.0, -2.0}}) {
        const auto got = models::scattering_state(mode, flux, trunc, r, phi);
        const auto want = models::plane_wave(incident, r, phi);
        for (size_t i = 0; i < got.size(); ++i) {
          worst = std::max(worst, std::abs(got[i] - want[i]));
        }
      }
    }
  }
  return worst;
}

double single_valuedness_err() {
  const auto flux = gauge::FluxSpec::su2(0.23);
  models::ModeSpec mode{models::ModelId::Su2Doublet, +1, 1, 1.0, 0.0};
  const models::TruncationSpec trunc;
  double worst = 0.0;
  for (double phi : {0.1, 2.0, -1.4}) {
    const auto a = models::scattering_state(mode, flux, trunc, 3.0, phi);
    const auto b = models::scattering_state(mode, flux, trunc, 3.0, phi + 2.0 * kPi);
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double series_vs_contour_err() {
  double worst = 0.0;
  struct Case {
    models::ModelId model;
    double alpha, beta;
    int s;
  };
  for (const Case& c : {Case{models::ModelId::Su2Doublet, 0.2, 0.0, +1},
                        Case{models::ModelId::U2Doublet, 0.3, 0.2, +1},
                        Case{models::ModelId::U2Doublet, 0.3, 0.2, -1}}) {
    const auto flux = models::make_flux(c.model, c.alpha, c.beta);
    for (int n = 1; n <= models::gauge_dim(c.model); ++n) {
      models::ModeSpec mode{c.model, c.s, n, 1.0, 0.0};
      for (double r : {0.5, 5.0}) {
        for (int m = -6; m <= 6; m += 3) {
          const auto series = models::partial_wave_term(mode, flux, m, r, 1.1);
          const auto quad = contour::contour_term(mode, flux, m, r, 1.1);
          for (size_t i = 0; i < series.size(); ++i) {
            worst = std::max(worst, std::abs(series[i] - quad[i]));
          }
        }
      }
    }
  }
  return worst;
}

double sigma_properties_err() {
  double worst = 0.0;
  const std::vector<Complex> c2{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
  const std::vector<Complex> c3{Complex{1.0 / std::sqrt(3.0), 0.0},
                                Complex{1.0 / std::sqrt(3.0), 0.0},
                                Complex{1.0 / std::sqrt(3.0), 0.0}};
  // SU(2): independent of coefficients, equals sin^2(alpha pi)
  for (double alpha : {0.2, 0.5, 0.8, 1.7}) {
    const double s1 = observables::sigma_factor(gauge::FluxSpec::su2(alpha), c2);
    const double want = std::pow(std::sin(kPi * (alpha - std::nearbyint(alpha))), 2);
    worst = std::max(worst, std::fabs(s1 - want));
    // period-1 shift of a channel
    gauge::FluxSpec shifted = gauge::FluxSpec::su2(alpha);
    shifted.eigenvalues[0] += 1.0;
    shifted.eigenvalues[1] -= 1.0;
    worst = std::max(worst, std::fabs(observables::sigma_factor(shifted, c2) - s1));
  }
  // bounds and the no-scattering zeros
  for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{0.0, 0.0}}) {
    worst = std::max(worst, observables::sigma_factor(gauge::FluxSpec::su3(a, b), c3));
    worst = std::max(worst, observables::sigma_factor(gauge::FluxSpec::u2(a, b), c2));
  }
  return worst;
}

double cross_section_err() {
  double worst = 0.0;
  const double sigma = 0.42;
  const double ref = observables::cross_section(1.0, sigma, 0.0);
  worst = std::max(worst, rel_err(ref, sigma / (2.0 * kPi)));
  for (double phi = -2.9; phi <= 2.9; phi += 0.37) {
    const double v = observables::cross_section(1.0, sigma, phi);
    worst = std::max(worst, rel_err(v * std::pow(std::cos(0.5 * phi), 2), sigma / (2.0 * kPi)));
    worst = std::max(worst, rel_err(observables::cross_section(2.0, sigma, phi), 0.5 * v));
  }
  return worst;
}

double u2_current_consistency_err() {
  const auto flux = gauge::FluxSpec::u2(0.3, 0.2);
  const double inv = 1.0 / std::sqrt(2.0);
  models::StateEvaluator state(models::ModelId::U2Doublet, flux, +1, 1.0, 0.0,
                               {Complex{inv, 0.0}, Complex{inv, 0.0}}, {});
  double worst = 0.0;
  for (auto [r, phi] : {std::pair{1.0, 0.4}, std::pair{4.2, 2.0}, std::pair{7.0, -1.2}}) {
    const auto j = observables::current_density(state, r, phi);
    // independent route: velocity operator v (I_N x sigma) applied blockwise
    const auto psi = state.evaluate(r, phi).psi;
    double jx = 0.0, jy = 0.0;
    for (int n = 0; n < 2; ++n) {
      const Complex up = psi[static_cast<size_t>(2 * n)];
      const Complex lo = psi[static_cast<size_t>(2 * n + 1)];
      const Complex sx = std::conj(up) * lo + std::conj(lo) * up;
      const Complex sy = Complex{0.0, -1.0} * std::conj(up) * lo +
                         Complex{0.0, 1.0} * std::conj(lo) * up;
      jx += sx.real();
      jy += sy.real();
    }
    worst = std::max(worst, std::fabs(j.jx - jx));
    worst = std::max(worst, std::fabs(j.jy - jy));
  }
  return worst;
}

double reflection_symmetry_err() {
  const auto flux = gauge::FluxSpec::su2(0.2);
  const double inv = 1.0 / std::sqrt(2.0);
  models::StateEvaluator state(models::ModelId::Su2Doublet, flux, +1, 1.0, 0.0,
                               {Complex{inv, 0.0}, Complex{inv, 0.0}}, {});
  double worst = 0.0;
  for (auto [r, phi] : {std::pair{1.5, 0.7}, std::pair{5.0, 2.2}, std::pair{8.0, 0.1}}) {
    const double up = observables::probability_density(state.evaluate(r, phi).psi);
    const double down = observables::probability_density(state.evaluate(r, -phi).psi);
    worst = std::max(worst, std::fabs(up - down));
  }
  return worst;
}

}  // namespace

int run_verification(const ReportSink& sink) {
  Reporter rep{sink};
  rep.check("bessel recurrence", bessel_recurrence_err(), 1e-9);
  rep.check("bessel half-integer closed forms", half_integer_err(), 1e-10);
  rep.check("wilson loop unitarity and integer shift", wilson_loop_err(), 1e-12);
  rep.check("gauge field flatness", flatness_err(), 1e-6);
  rep.check("zero-flux reduction to plane waves", zero_flux_reduction_err(), 1e-10);
  rep.check("single-valuedness in phi", single_valuedness_err(), 1e-12);
  rep.check("series vs contour quadrature", series_vs_contour_err(), 1e-8);
  rep.check("sigma factor closed forms", sigma_properties_err(), 1e-12);
  rep.check("cross-section angular law", cross_section_err(), 1e-12);
  rep.check("u2 current route consistency", u2_current_consistency_err(), 1e-8);
  rep.check("su2 equal-weight reflection symmetry", reflection_symmetry_err(), 1e-8);
  return rep.failures;
}

}  // namespace nabscat::verify
