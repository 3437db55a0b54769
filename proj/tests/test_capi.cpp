#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "nabscat.h"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

struct StateHandle {
  ns_state* p = nullptr;
  ~StateHandle() { ns_state_destroy(p); }
};
}  // namespace

TEST_CASE("status messages") {
  CHECK(std::string(ns_status_message(NS_OK)) == "ok");
  CHECK(std::strlen(ns_status_message(NS_ERR_INVALID_ARGUMENT)) > 0);
  CHECK(std::strlen(ns_status_message(NS_ERR_DOMAIN)) > 0);
  CHECK(std::strlen(ns_status_message(NS_ERR_NUMERICAL)) > 0);
  CHECK(std::strlen(ns_status_message(NS_ERR_IO)) > 0);
}

TEST_CASE("special functions through the C boundary") {
  double out = 0.0;
  CHECK(ns_bessel_j(0.3, 5.0, &out) == NS_OK);
  CHECK(std::fabs(out - (-0.2968291101257607608386414)) < 1e-13);
  CHECK(ns_reciprocal_gamma(-0.5, &out) == NS_OK);
  CHECK(std::fabs(out - (-0.2820947917738781434740397)) < 1e-13);
  CHECK(ns_bessel_j_derivative(0.0, 2.404826, &out) == NS_OK);
  CHECK(std::fabs(out - (-0.5191474018059454324770768)) < 1e-12);

  CHECK(ns_bessel_j(0.3, 5.0, nullptr) == NS_ERR_INVALID_ARGUMENT);
  CHECK(ns_bessel_j(1.0, -1.0, &out) == NS_ERR_DOMAIN);
  CHECK(ns_bessel_j(-0.7, 0.0, &out) == NS_ERR_DOMAIN);
}

TEST_CASE("gauge data through the C boundary") {
  CHECK(ns_channel_count(NS_MODEL_SU3) == 3);
  CHECK(ns_spinor_dim(NS_MODEL_U2) == 4);

  double ev[3] = {0, 0, 0};
  CHECK(ns_flux_eigenvalues(NS_MODEL_SU3, 0.2, 1.0 / 3.0, ev) == NS_OK);
  CHECK(std::fabs(ev[0] - 8.0 / 15.0) < 1e-15);
  CHECK(std::fabs(ev[2] + 2.0 / 3.0) < 1e-15);

  double wre[2], wim[2];
  CHECK(ns_wilson_loop(NS_MODEL_SU2, 0.5, 0.0, wre, wim) == NS_OK);
  CHECK(std::fabs(wre[0] + 1.0) < 1e-12);
  CHECK(std::fabs(wim[0]) < 1e-12);

  double ax[2], ay[2];
  CHECK(ns_gauge_potential(NS_MODEL_SU2, 0.3, 0.0, 1.0, 0.0, ax, ay) == NS_OK);
  CHECK(std::fabs(ay[0] - 0.3 / (2.0 * kPi)) < 1e-15);
  CHECK(ns_gauge_potential(NS_MODEL_SU2, 0.3, 0.0, 0.0, 0.0, ax, ay) == NS_ERR_DOMAIN);
}

TEST_CASE("band structure through the C boundary") {
  double e = 0.0;
  CHECK(ns_dispersion(NS_MODEL_U2, -1, 2.0, &e) == NS_OK);
  CHECK(e == -2.0);
  CHECK(ns_dispersion(NS_MODEL_SU2, -1, 2.0, &e) == NS_ERR_INVALID_ARGUMENT);
  int sign = 0;
  CHECK(ns_radial_velocity_sign(NS_MODEL_U2, -1, &sign) == NS_OK);
  CHECK(sign == -1);
}

TEST_CASE("series and contour terms agree through the C boundary") {
  const int dim = ns_spinor_dim(NS_MODEL_U2);
  std::vector<double> sre(dim), sim(dim), cre(dim), cim(dim);
  CHECK(ns_partial_wave_term(NS_MODEL_U2, 0.2, 0.3, +1, 1, 2, 1.0, 0.4, 3.0, 1.1,
                             sre.data(), sim.data()) == NS_OK);
  CHECK(ns_contour_term(NS_MODEL_U2, 0.2, 0.3, +1, 1, 2, 1.0, 0.4, 3.0, 1.1, 0.0, 0.0,
                        cre.data(), cim.data()) == NS_OK);
  for (int i = 0; i < dim; ++i) {
    CHECK(std::fabs(sre[i] - cre[i]) < 1e-8);
    CHECK(std::fabs(sim[i] - cim[i]) < 1e-8);
  }
}

TEST_CASE("state lifecycle and evaluation") {
  const double cre[2] = {1.0, 1.0};
  const double cim[2] = {0.0, 0.0};
  StateHandle h;
  CHECK(ns_state_create(NS_MODEL_SU2, 0.2, 0.0, +1, 1.0, 0.0, cre, cim, 2, -1, &h.p) ==
        NS_OK);
  REQUIRE(h.p != nullptr);
  CHECK(ns_state_dim(h.p) == 2);

  std::vector<double> pre(2), pim(2);
  double rho = 0.0, jx = 0.0, jy = 0.0;
  int warn = -1;
  CHECK(ns_state_eval(h.p, 2.0, 1.0, pre.data(), pim.data(), &rho, &jx, &jy, &warn) ==
        NS_OK);
  CHECK(rho > 0.0);
  CHECK(warn == 0);
  double rho_manual = 0.0;
  for (int i = 0; i < 2; ++i) rho_manual += pre[i] * pre[i] + pim[i] * pim[i];
  CHECK(std::fabs(rho - rho_manual) < 1e-13);

  // outputs are optional
  CHECK(ns_state_eval(h.p, 2.0, 1.0, nullptr, nullptr, &rho, nullptr, nullptr, nullptr) ==
        NS_OK);

  // equal-weight su(2) density is symmetric in y
  double rho_up = 0.0, rho_dn = 0.0;
  CHECK(ns_state_eval(h.p, 1.5, 2.5, nullptr, nullptr, &rho_up, nullptr, nullptr,
                      nullptr) == NS_OK);
  CHECK(ns_state_eval(h.p, 1.5, -2.5, nullptr, nullptr, &rho_dn, nullptr, nullptr,
                      nullptr) == NS_OK);
  CHECK(std::fabs(rho_up - rho_dn) < 1e-10);

  // error paths
  ns_state* bad = nullptr;
  CHECK(ns_state_create(NS_MODEL_SU2, 0.2, 0.0, +1, 1.0, 0.0, cre, cim, 3, -1, &bad) ==
        NS_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(ns_state_create(NS_MODEL_SU2, 0.2, 0.0, +1, 1.0, 0.0, nullptr, nullptr, 2, -1,
                        &bad) == NS_ERR_INVALID_ARGUMENT);
  CHECK(ns_state_eval(nullptr, 1.0, 1.0, nullptr, nullptr, &rho, nullptr, nullptr,
                      nullptr) == NS_ERR_INVALID_ARGUMENT);
  ns_state_destroy(nullptr);  // must be a no-op
}

TEST_CASE("observables through the C boundary") {
  const double inv = 1.0 / std::sqrt(2.0);
  const double cre[2] = {inv, inv};
  const double cim[2] = {0.0, 0.0};
  double sigma = 0.0;
  CHECK(ns_sigma_factor(NS_MODEL_SU2, 0.3, 0.0, cre, cim, 2, &sigma) == NS_OK);
  CHECK(std::fabs(sigma - std::pow(std::sin(0.3 * kPi), 2)) < 1e-14);

  double xs = 0.0;
  CHECK(ns_cross_section(1.0, 1.0, 0.0, &xs) == NS_OK);
  CHECK(std::fabs(xs - 1.0 / (2.0 * kPi)) < 1e-15);
  CHECK(ns_cross_section(1.0, 1.0, kPi, &xs) == NS_ERR_DOMAIN);

  std::vector<double> map(4);
  CHECK(ns_sigma_map(NS_MODEL_U2, cre, cim, 2, -0.5, 0.5, -0.5, 0.5, 2, 2, map.data()) ==
        NS_OK);
  for (double v : map) CHECK(std::fabs(v) < 1e-13);
}

TEST_CASE("grid rendering is thread-count independent") {
  const double cre[2] = {1.0, 0.0};
  const double cim[2] = {0.0, 0.0};
  StateHandle h;
  REQUIRE(ns_state_create(NS_MODEL_U2, 0.3, 0.2, +1, 1.0, 0.0, cre, cim, 2, -1, &h.p) ==
          NS_OK);
  ns_grid grid{-3.0, 3.0, -3.0, 3.0, 15, 13, 0.4};
  const size_t total = 15 * 13;
  std::vector<double> r1(total), x1(total), y1(total), r4(total), x4(total), y4(total);
  CHECK(ns_render_fields(h.p, &grid, 1, r1.data(), x1.data(), y1.data()) == NS_OK);
  CHECK(ns_render_fields(h.p, &grid, 4, r4.data(), x4.data(), y4.data()) == NS_OK);
  for (size_t i = 0; i < total; ++i) {
    const bool same = r1[i] == r4[i] || (std::isnan(r1[i]) && std::isnan(r4[i]));
    CHECK(same);
  }
  CHECK(ns_render_fields(h.p, nullptr, 1, r1.data(), x1.data(), y1.data()) ==
        NS_ERR_INVALID_ARGUMENT);
  ns_grid bad = grid;
  bad.nx = 1;
  CHECK(ns_render_fields(h.p, &bad, 1, r1.data(), x1.data(), y1.data()) ==
        NS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification suite and fault injection") {
  int lines = 0;
  auto count = [](const char*, void* user) { ++*static_cast<int*>(user); };
  CHECK(ns_run_verification(count, &lines) == 0);
  CHECK(lines > 0);

  // a biased Bessel routine must be caught
  ns_debug_set_bessel_bias(1e-6);
  const int failures = ns_run_verification(nullptr, nullptr);
  ns_debug_set_bessel_bias(0.0);
  CHECK(failures > 0);
  CHECK(ns_run_verification(nullptr, nullptr) == 0);
}
