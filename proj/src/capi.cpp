// C binding of the shared library. Each entry point catches exceptions from
// the C++ core and maps them onto ns_status codes.

#include "nabscat.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <vector>

#include "contour.hpp"
#include "fields.hpp"
#include "gauge.hpp"
#include "models.hpp"
#include "observables.hpp"
#include "specfun.hpp"
#include "verify.hpp"

namespace {

using nabscat::models::ModelId;
using Complex = std::complex<double>;

ns_status guard(const auto& body) {
  try {
    body();
    return NS_OK;
  } catch (const std::invalid_argument&) {
    return NS_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error&) {
    return NS_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    return NS_ERR_NUMERICAL;
  } catch (const std::exception&) {
    return NS_ERR_NUMERICAL;
  }
}

bool to_model(ns_model model, ModelId* out) {
  switch (model) {
    case NS_MODEL_SU2: *out = ModelId::Su2Doublet; return true;
    case NS_MODEL_SU3: *out = ModelId::Su3Triplet; return true;
    case NS_MODEL_U2: *out = ModelId::U2Doublet; return true;
  }
  return false;
}

std::vector<Complex> pack(const double* re, const double* im, size_t n) {
  std::vector<Complex> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = Complex{re[i], im ? im[i] : 0.0};
  return out;
}

void unpack(const std::vector<Complex>& v, double* re, double* im) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (re) re[i] = v[i].real();
    if (im) im[i] = v[i].imag();
  }
}

}  // namespace

struct ns_state {
  nabscat::models::StateEvaluator impl;
};

extern "C" {

const char* ns_status_message(ns_status status) {
  switch (status) {
    case NS_OK: return "ok";
    case NS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NS_ERR_DOMAIN: return "domain error";
    case NS_ERR_NUMERICAL: return "numerical failure";
    case NS_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

ns_status ns_reciprocal_gamma(double z, double* out) {
  if (!out) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::specfun::reciprocal_gamma(z); });
}

ns_status ns_bessel_j(double nu, double x, double* out) {
  if (!out) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::specfun::bessel_j(nu, x); });
}

ns_status ns_bessel_j_derivative(double nu, double x, double* out) {
  if (!out) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::specfun::bessel_j_derivative(nu, x); });
}

int ns_channel_count(ns_model model) {
  ModelId id;
  return to_model(model, &id) ? nabscat::models::gauge_dim(id) : 0;
}

int ns_spinor_dim(ns_model model) {
  ModelId id;
  return to_model(model, &id) ? nabscat::models::spinor_dim(id) : 0;
}

ns_status ns_flux_eigenvalues(ns_model model, double alpha, double beta, double* out) {
  ModelId id;
  if (!out || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    const auto flux = nabscat::models::make_flux(id, alpha, beta);
    for (size_t n = 0; n < flux.eigenvalues.size(); ++n) out[n] = flux.eigenvalues[n];
  });
}

ns_status ns_wilson_loop(ns_model model, double alpha, double beta, double* out_re,
                         double* out_im) {
  ModelId id;
  if (!out_re || !out_im || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    const auto w = nabscat::gauge::wilson_loop(nabscat::models::make_flux(id, alpha, beta));
    unpack(w, out_re, out_im);
  });
}

ns_status ns_gauge_potential(ns_model model, double alpha, double beta, double x,
                             double y, double* ax, double* ay) {
  ModelId id;
  if (!ax || !ay || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    const auto a =
        nabscat::gauge::gauge_potential(nabscat::models::make_flux(id, alpha, beta), x, y);
    for (size_t n = 0; n < a.ax.size(); ++n) {
      ax[n] = a.ax[n];
      ay[n] = a.ay[n];
    }
  });
}

ns_status ns_dispersion(ns_model model, int band, double k, double* out) {
  ModelId id;
  if (!out || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::models::dispersion(id, band, k); });
}

ns_status ns_radial_velocity_sign(ns_model model, int band, int* out) {
  ModelId id;
  if (!out || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::models::radial_velocity_sign(id, band); });
}

ns_status ns_plane_wave(ns_model model, int band, int channel, double k, double theta,
                        double r, double phi, double* out_re, double* out_im) {
  ModelId id;
  if (!out_re || !out_im || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    nabscat::models::ModeSpec mode{id, band, channel, k, theta};
    unpack(nabscat::models::plane_wave(mode, r, phi), out_re, out_im);
  });
}

ns_status ns_partial_wave_term(ns_model model, double alpha, double beta, int band,
                               int channel, int m, double k, double theta, double r,
                               double phi, double* out_re, double* out_im) {
  ModelId id;
  if (!out_re || !out_im || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    nabscat::models::ModeSpec mode{id, band, channel, k, theta};
    const auto flux = nabscat::models::make_flux(id, alpha, beta);
    unpack(nabscat::models::partial_wave_term(mode, flux, m, r, phi), out_re, out_im);
  });
}

ns_status ns_contour_term(ns_model model, double alpha, double beta, int band,
                          int channel, int m, double k, double theta, double r,
                          double phi, double height, double step, double* out_re,
                          double* out_im) {
  ModelId id;
  if (!out_re || !out_im || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  if (height == 0.0) height = 12.0;
  if (step == 0.0) step = 0.02;
  return guard([&] {
    nabscat::models::ModeSpec mode{id, band, channel, k, theta};
    const auto flux = nabscat::models::make_flux(id, alpha, beta);
    unpack(nabscat::contour::contour_term(mode, flux, m, r, phi, height, step), out_re,
           out_im);
  });
}

ns_status ns_state_create(ns_model model, double alpha, double beta, int band, double k,
                          double theta, const double* c_re, const double* c_im,
                          size_t n_coeff, int m_max, ns_state** out) {
  ModelId id;
  if (!out || !c_re || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guard([&] {
    nabscat::models::TruncationSpec trunc;
    if (m_max >= 0) trunc = nabscat::models::TruncationSpec{m_max, false};
    *out = new ns_state{nabscat::models::StateEvaluator(
        id, nabscat::models::make_flux(id, alpha, beta), band, k, theta,
        pack(c_re, c_im, n_coeff), trunc)};
  });
}

void ns_state_destroy(ns_state* state) { delete state; }

int ns_state_dim(const ns_state* state) { return state ? state->impl.dim() : 0; }

ns_status ns_state_eval(const ns_state* state, double x, double y, double* psi_re,
                        double* psi_im, double* rho, double* jx, double* jy,
                        int* truncation_warning) {
  if (!state) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    const double r = std::hypot(x, y);
    const double phi = std::atan2(y, x);
    const bool want_current = jx || jy;
    if (want_current || rho) {
      const auto sample = nabscat::observables::sample_fields(state->impl, r, phi);
      unpack(sample.psi, psi_re, psi_im);
      if (rho) *rho = sample.rho;
      if (jx) *jx = sample.j.jx;
      if (jy) *jy = sample.j.jy;
      if (truncation_warning) *truncation_warning = sample.truncation_warning ? 1 : 0;
    } else {
      const auto res = state->impl.evaluate(r, phi);
      unpack(res.psi, psi_re, psi_im);
      if (truncation_warning) *truncation_warning = res.truncation_warning ? 1 : 0;
    }
  });
}

ns_status ns_sigma_factor(ns_model model, double alpha, double beta, const double* c_re,
                          const double* c_im, size_t n_coeff, double* out) {
  ModelId id;
  if (!out || !c_re || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    *out = nabscat::observables::sigma_factor(nabscat::models::make_flux(id, alpha, beta),
                                              pack(c_re, c_im, n_coeff));
  });
}

ns_status ns_cross_section(double k, double sigma, double phi, double* out) {
  if (!out) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = nabscat::observables::cross_section(k, sigma, phi); });
}

ns_status ns_sigma_map(ns_model model, const double* c_re, const double* c_im,
                       size_t n_coeff, double a0, double a1, double b0, double b1,
                       int n_alpha, int n_beta, double* out) {
  ModelId id;
  if (!out || !c_re || !to_model(model, &id)) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    const auto map = nabscat::observables::sigma_map(
        nabscat::models::group_of(id), pack(c_re, c_im, n_coeff), a0, a1, b0, b1, n_alpha,
        n_beta);
    std::memcpy(out, map.data(), map.size() * sizeof(double));
  });
}

ns_status ns_render_fields(const ns_state* state, const ns_grid* grid, int threads,
                           double* rho, double* jx, double* jy) {
  if (!state || !grid || !rho || !jx || !jy) return NS_ERR_INVALID_ARGUMENT;
  return guard([&] {
    nabscat::fields::GridSpec spec{grid->x_min, grid->x_max, grid->y_min, grid->y_max,
                                   grid->nx, grid->ny, grid->r_min};
    const auto field = nabscat::fields::render_fields(state->impl, spec, threads);
    std::memcpy(rho, field.rho.data(), field.rho.size() * sizeof(double));
    std::memcpy(jx, field.jx.data(), field.jx.size() * sizeof(double));
    std::memcpy(jy, field.jy.data(), field.jy.size() * sizeof(double));
  });
}

int ns_run_verification(ns_report_fn report, void* user) {
  return nabscat::verify::run_verification([&](const std::string& line) {
    if (report) report(line.c_str(), user);
  });
}

void ns_debug_set_bessel_bias(double bias) { nabscat::specfun::set_bessel_test_bias(bias); }

}  // extern "C"
