#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "models.hpp"
#include "specfun.hpp"

using namespace nabscat;
using models::ModelId;
using Complex = std::complex<double>;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double max_diff(const models::CVector& a, const models::CVector& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}
}  // namespace

TEST_CASE("model constants") {
  CHECK(models::gauge_dim(ModelId::Su2Doublet) == 2);
  CHECK(models::gauge_dim(ModelId::Su3Triplet) == 3);
  CHECK(models::gauge_dim(ModelId::U2Doublet) == 2);
  CHECK(models::internal_dim(ModelId::Su2Doublet) == 1);
  CHECK(models::internal_dim(ModelId::U2Doublet) == 2);
  CHECK(models::spinor_dim(ModelId::Su3Triplet) == 3);
  CHECK(models::spinor_dim(ModelId::U2Doublet) == 4);
  CHECK(models::band_allowed(ModelId::Su2Doublet, +1));
  CHECK_FALSE(models::band_allowed(ModelId::Su2Doublet, -1));
  CHECK(models::band_allowed(ModelId::U2Doublet, -1));
}

TEST_CASE("dispersion and velocity sign") {
  CHECK(models::dispersion(ModelId::Su2Doublet, +1, 2.0) == 2.0);   // k^2/2
  CHECK(models::dispersion(ModelId::Su3Triplet, +1, 3.0) == 4.5);
  CHECK(models::dispersion(ModelId::U2Doublet, +1, 1.5) == 1.5);    // s v k
  CHECK(models::dispersion(ModelId::U2Doublet, -1, 1.5) == -1.5);
  CHECK(models::radial_velocity_sign(ModelId::Su2Doublet, +1) == +1);
  CHECK(models::radial_velocity_sign(ModelId::U2Doublet, -1) == -1);
  CHECK_THROWS_AS((void)models::dispersion(ModelId::Su2Doublet, -1, 1.0),
                  std::invalid_argument);
}

TEST_CASE("internal eigenvectors") {
  const auto u = models::internal_eigenvector(ModelId::U2Doublet, +1, 0.0);
  CHECK(std::abs(u[0] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  CHECK(std::abs(u[1] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  const auto v = models::internal_eigenvector(ModelId::U2Doublet, -1, kPi);
  CHECK(std::abs(v[1] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
  const auto s = models::internal_eigenvector(ModelId::Su2Doublet, +1, 1.3);
  CHECK(s.size() == 1);
  CHECK(s[0] == Complex{1.0, 0.0});
}

TEST_CASE("plane wave") {
  models::ModeSpec su2{ModelId::Su2Doublet, +1, 1, 1.0, 0.0};
  const auto at0 = models::plane_wave(su2, 0.0, 0.7);
  CHECK(at0[0] == Complex{1.0, 0.0});
  CHECK(at0[1] == Complex{0.0, 0.0});
  const auto at = models::plane_wave(su2, 3.0, 0.4);
  CHECK(std::abs(at[0] - std::polar(1.0, 3.0 * std::cos(0.4))) < 1e-15);
  // unit norm everywhere
  double norm2 = 0.0;
  for (const auto& c : at) norm2 += std::norm(c);
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-14));
  // periodic phase
  const auto back = models::plane_wave(su2, 2.0 * kPi, 0.0);
  CHECK(std::abs(back[0] - at0[0]) < 1e-12);
}

TEST_CASE("partial wave terms: literal substitutions") {
  // zero flux, m = 0: (J_0(kr), 0)
  models::ModeSpec su2{ModelId::Su2Doublet, +1, 1, 1.0, 0.0};
  const auto flux0 = models::make_flux(ModelId::Su2Doublet, 0.0, 0.0);
  const auto t0 = models::partial_wave_term(su2, flux0, 0, 2.5, 1.0);
  CHECK(std::abs(t0[0] - Complex{specfun::bessel_j(0.0, 2.5), 0.0}) < 1e-14);
  CHECK(std::abs(t0[1]) == 0.0);

  // alpha = 0.2, m = 0, kr = 1, phi = theta - pi: angular factor is 1
  models::ModeSpec mode{ModelId::Su2Doublet, +1, 1, 1.0, kPi - 0.0};
  const auto flux = models::make_flux(ModelId::Su2Doublet, 0.2, 0.0);
  const auto t = models::partial_wave_term(mode, flux, 0, 1.0, mode.theta - kPi);
  const Complex want = std::polar(1.0, -0.5 * kPi * 0.2) * specfun::bessel_j(0.2, 1.0);
  CHECK(std::abs(t[0] - want) < 1e-14);

  // U2 s=+1, n=1, beta+alpha=-0.3, m=0: lower-spinor order is -0.7
  models::ModeSpec u2{ModelId::U2Doublet, +1, 1, 1.0, 0.0};
  const auto uflux = models::make_flux(ModelId::U2Doublet, -0.5, 0.2);  // a1 = -0.3
  const auto tu = models::partial_wave_term(u2, uflux, 0, 2.0, 0.3);
  // eps(-0.3) = -1, so lower = pref * (i * -1) * J_{-0.7}(kr) e^{i phi}
  const Complex pref = std::polar(1.0, -0.5 * kPi * 0.3) / std::sqrt(2.0);
  const Complex lower = pref * Complex{0.0, -1.0} * specfun::bessel_j(-0.7, 2.0) *
                        std::polar(1.0, 0.3);
  CHECK(std::abs(tu[1] - lower) < 1e-14);
  CHECK(std::abs(tu[2]) == 0.0);
  CHECK(std::abs(tu[3]) == 0.0);
}

TEST_CASE("zero-flux reduction to plane waves") {
  const models::TruncationSpec trunc{40, false};
  for (auto model : {ModelId::Su2Doublet, ModelId::Su3Triplet, ModelId::U2Doublet}) {
    const auto flux = models::make_flux(model, 0.0, 0.0);
    for (int s : {+1, -1}) {
      if (!models::band_allowed(model, s)) continue;
      models::ModeSpec mode{model, s, 1, 1.0, 0.0};
      // hole-like bands carry momentum opposite to the incidence direction
      models::ModeSpec incident = mode;
      if (models::radial_velocity_sign(model, s) < 0) incident.theta += kPi;
      for (double r : {0.5, 2.0, 6.0, 10.0}) {
        for (double phi : {0.0, 1.1, -2.6}) {
          const auto state = models::scattering_state(mode, flux, trunc, r, phi);
          const auto wave = models::plane_wave(incident, r, phi);
          CHECK(max_diff(state, wave) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("integer flux eigenvalues give unit density") {
  const auto flux = models::make_flux(ModelId::Su3Triplet, 0.5, 0.5);  // 1, 0, -1
  models::ModeSpec mode{ModelId::Su3Triplet, +1, 1, 1.0, 0.0};
  for (double r : {0.7, 3.0, 7.5}) {
    const auto state = models::scattering_state(mode, flux, {}, r, 0.9);
    double norm2 = 0.0;
    for (const auto& c : state) norm2 += std::norm(c);
    CHECK(std::fabs(norm2 - 1.0) < 1e-8);
  }
}

TEST_CASE("single-valuedness in phi") {
  const auto flux = models::make_flux(ModelId::U2Doublet, 0.3, 0.2);
  models::ModeSpec mode{ModelId::U2Doublet, +1, 2, 1.0, 0.4};
  const auto a = models::scattering_state(mode, flux, {}, 3.0, 0.8);
  const auto b = models::scattering_state(mode, flux, {}, 3.0, 0.8 + 2.0 * kPi);
  CHECK(max_diff(a, b) < 1e-12);
}

TEST_CASE("U2 blocks stay channel-diagonal") {
  const auto flux = models::make_flux(ModelId::U2Doublet, 0.3, 0.2);
  models::ModeSpec mode{ModelId::U2Doublet, +1, 1, 1.0, 0.0};
  const auto state = models::scattering_state(mode, flux, {}, 4.0, 1.0);
  CHECK(std::abs(state[2]) == 0.0);
  CHECK(std::abs(state[3]) == 0.0);
}

TEST_CASE("evaluator derivatives match finite differences") {
  const auto flux = models::make_flux(ModelId::Su2Doublet, 0.2, 0.0);
  models::StateEvaluator state(ModelId::Su2Doublet, flux, +1, 1.0, 0.0,
                               {Complex{1.0, 0.0}, Complex{0.0, 0.0}}, {});
  const double r = 3.2, phi = 0.9, h = 1e-6;
  const auto d = state.evaluate_with_derivatives(r, phi);
  const auto rp = state.evaluate(r + h, phi).psi;
  const auto rm = state.evaluate(r - h, phi).psi;
  const auto pp = state.evaluate(r, phi + h).psi;
  const auto pm = state.evaluate(r, phi - h).psi;
  for (size_t i = 0; i < d.psi.size(); ++i) {
    CHECK(std::abs(d.dpsi_dr[i] - (rp[i] - rm[i]) / (2.0 * h)) < 1e-6);
    CHECK(std::abs(d.dpsi_dphi[i] - (pp[i] - pm[i]) / (2.0 * h)) < 1e-6);
  }
}

TEST_CASE("superpose validates and normalizes") {
  const auto flux = models::make_flux(ModelId::Su2Doublet, 0.2, 0.0);
  std::vector<models::ModeSpec> modes{{ModelId::Su2Doublet, +1, 1, 1.0, 0.0},
                                      {ModelId::Su2Doublet, +1, 2, 1.0, 0.0}};
  auto ev = models::superpose(modes, flux, {Complex{1.0, 0.0}, Complex{1.0, 0.0}});
  CHECK(ev.coefficients_renormalized());
  CHECK(std::abs(ev.coefficients()[0] - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);

  // c = (1, 0) equals single-channel state
  auto single = models::superpose(modes, flux, {Complex{1.0, 0.0}, Complex{0.0, 0.0}});
  const auto a = single.evaluate(2.0, 0.5).psi;
  const auto b = models::scattering_state(modes[0], flux, {}, 2.0, 0.5);
  CHECK(max_diff(a, b) < 1e-14);

  std::vector<models::ModeSpec> bad = modes;
  bad[1].k = 2.0;
  CHECK_THROWS_AS((void)models::superpose(bad, flux, {Complex{1.0, 0.0}, Complex{0.0, 0.0}}),
                  std::invalid_argument);
  bad = modes;
  bad[1].n = 1;
  CHECK_THROWS_AS((void)models::superpose(bad, flux, {Complex{1.0, 0.0}, Complex{0.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("truncation rule") {
  const int m1 = models::TruncationSpec::auto_m_max(0.0, 0.0);
  CHECK(m1 == 12);
  const int m2 = models::TruncationSpec::auto_m_max(10.0, 0.5);
  CHECK(m2 >= 10 + 12);
  models::TruncationSpec fixed{17, false};
  CHECK(fixed.m_max_for(50.0, 1.0) == 17);
  models::TruncationSpec autod;
  CHECK(autod.m_max_for(10.0, 0.5) == m2);
}

TEST_CASE("mode validation") {
  models::ModeSpec bad{ModelId::Su2Doublet, +1, 3, 1.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {ModelId::Su2Doublet, +1, 1, -1.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {ModelId::Su3Triplet, -1, 1, 1.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
