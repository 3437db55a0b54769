/*
 * nabscat - scattering states, probability/current densities and
 * differential cross sections for flux-tube scattering in isotropic
 * multiband systems (SU(2) doublet, SU(3) triplet, U(2) doublet).
 *
 * C interface of the shared library. All functions are thread-safe; state
 * handles are immutable after creation and may be shared across threads.
 * Functions return ns_status; outputs are written through pointers.
 */

#ifndef NABSCAT_H
#define NABSCAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ns_status {
  NS_OK = 0,
  NS_ERR_INVALID_ARGUMENT = 1,
  NS_ERR_DOMAIN = 2,
  NS_ERR_NUMERICAL = 3,
  NS_ERR_IO = 4
} ns_status;

typedef enum ns_model {
  NS_MODEL_SU2 = 0, /* N=2, D=1, bands {+1} */
  NS_MODEL_SU3 = 1, /* N=3, D=1, bands {+1} */
  NS_MODEL_U2 = 2   /* N=2, D=2, bands {-1,+1} */
} ns_model;

const char* ns_status_message(ns_status status);

/* --- special functions ------------------------------------------------ */

/* 1/Gamma(z); total, exactly 0 at the poles of Gamma. */
ns_status ns_reciprocal_gamma(double z, double* out);
/* Bessel J of real order nu at x >= 0 (x > 0 for negative non-integer nu). */
ns_status ns_bessel_j(double nu, double x, double* out);
ns_status ns_bessel_j_derivative(double nu, double x, double* out);

/* --- gauge data -------------------------------------------------------- */

int ns_channel_count(ns_model model);  /* N */
int ns_spinor_dim(ns_model model);     /* N*D */

/* Flux eigenvalues alpha_n. SU2 ignores beta: [alpha,-alpha]. SU3:
 * [beta+alpha, beta-alpha, -2 beta]. U2: [beta+alpha, beta-alpha]. */
ns_status ns_flux_eigenvalues(ns_model model, double alpha, double beta, double* out);
/* Diagonal Wilson-loop entries exp(2 pi i alpha_n). */
ns_status ns_wilson_loop(ns_model model, double alpha, double beta, double* out_re,
                         double* out_im);
/* Diagonal gauge-potential entries at (x,y) != 0, units Phi_0/length. */
ns_status ns_gauge_potential(ns_model model, double alpha, double beta, double x,
                             double y, double* ax, double* ay);

/* --- band structure ----------------------------------------------------- */

ns_status ns_dispersion(ns_model model, int band, double k, double* out);
ns_status ns_radial_velocity_sign(ns_model model, int band, int* out);

/* --- wave functions ----------------------------------------------------- */

/* Complex N*D-vectors are returned as parallel re/im arrays of length
 * ns_spinor_dim(model). channel is 1-based. */
ns_status ns_plane_wave(ns_model model, int band, int channel, double k, double theta,
                        double r, double phi, double* out_re, double* out_im);
/* m-th summand of the scattering-state partial-wave series. */
ns_status ns_partial_wave_term(ns_model model, double alpha, double beta, int band,
                               int channel, int m, double k, double theta, double r,
                               double phi, double* out_re, double* out_im);
/* Same term evaluated by contour quadrature (independent oracle). height is
 * the imaginary cutoff of the contour, step the target node spacing; pass
 * 0 for the defaults (12, 0.02). */
ns_status ns_contour_term(ns_model model, double alpha, double beta, int band,
                          int channel, int m, double k, double theta, double r,
                          double phi, double height, double step, double* out_re,
                          double* out_im);

/* --- scattering-state evaluator ----------------------------------------- */

typedef struct ns_state ns_state;

/* Superposition over the channels of one (model, band, k, theta). c_re/c_im
 * hold one coefficient per channel (n_coeff == N); the vector is normalized
 * if it is not already. m_max < 0 selects automatic truncation. */
ns_status ns_state_create(ns_model model, double alpha, double beta, int band, double k,
                          double theta, const double* c_re, const double* c_im,
                          size_t n_coeff, int m_max, ns_state** out);
void ns_state_destroy(ns_state* state);
int ns_state_dim(const ns_state* state);

/* Evaluate at Cartesian (x, y). psi_re/psi_im (length ns_state_dim), rho,
 * jx, jy and truncation_warning may each be NULL if not wanted. */
ns_status ns_state_eval(const ns_state* state, double x, double y, double* psi_re,
                        double* psi_im, double* rho, double* jx, double* jy,
                        int* truncation_warning);

/* --- observables --------------------------------------------------------- */

ns_status ns_sigma_factor(ns_model model, double alpha, double beta, const double* c_re,
                          const double* c_im, size_t n_coeff, double* out);
/* sigma(phi) = Sigma / (2 pi k cos^2(phi/2)); NS_ERR_DOMAIN at phi = pi. */
ns_status ns_cross_section(double k, double sigma, double phi, double* out);
/* Sigma on the (alpha,beta) grid; out has n_beta rows of n_alpha values,
 * row-major, beta as the row index. */
ns_status ns_sigma_map(ns_model model, const double* c_re, const double* c_im,
                       size_t n_coeff, double a0, double a1, double b0, double b1,
                       int n_alpha, int n_beta, double* out);

/* --- grid rendering ------------------------------------------------------ */

typedef struct ns_grid {
  double x_min, x_max, y_min, y_max;
  int nx, ny;
  double r_min; /* samples with r < r_min are NaN */
} ns_grid;

/* rho/jx/jy are ny*nx row-major (index iy*nx + ix). Output is deterministic
 * and independent of the thread count. */
ns_status ns_render_fields(const ns_state* state, const ns_grid* grid, int threads,
                           double* rho, double* jx, double* jy);

/* --- verification --------------------------------------------------------- */

/* Runs the library's invariant suite; one report line per property through
 * the callback. Returns the number of failed properties. */
typedef void (*ns_report_fn)(const char* line, void* user);
int ns_run_verification(ns_report_fn report, void* user);

/* Fault-injection hook for testing the verification harness: biases every
 * Bessel evaluation by the given amount. Not for production use. */
void ns_debug_set_bessel_bias(double bias);

#ifdef __cplusplus
}
#endif

#endif /* NABSCAT_H */
