#pragma once

#include <complex>
#include <vector>

#include "gauge.hpp"

// The three concrete isotropic multiband systems behind one interface:
// dispersion, internal-space eigenvectors, group-velocity sign, plane waves
// and the per-channel partial-wave terms of the scattering states.

namespace nabscat::models {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

enum class ModelId { Su2Doublet, Su3Triplet, U2Doublet };

int gauge_dim(ModelId model);     // N
int internal_dim(ModelId model);  // D
int spinor_dim(ModelId model);    // N * D
bool band_allowed(ModelId model, int s);
gauge::GroupTag group_of(ModelId model);
gauge::FluxSpec make_flux(ModelId model, double alpha, double beta);

// One incoming scattering channel.
struct ModeSpec {
  ModelId model = ModelId::Su2Doublet;
  int s = +1;        // band index
  int n = 1;         // channel, 1..N
  double k = 1.0;    // wavenumber, units 1/d0
  double theta = 0.0;  // incidence angle

  void validate() const;  // throws std::invalid_argument
};

struct TruncationSpec {
  int m_max = 0;
  bool auto_rule = true;

  // m_max large enough that the omitted Bessel tail is negligible at kr.
  static int auto_m_max(double kr, double max_abs_alpha);
  int m_max_for(double kr, double max_abs_alpha) const;
};

double dispersion(ModelId model, int s, double k);
int radial_velocity_sign(ModelId model, int s);
CVector internal_eigenvector(ModelId model, int s, double theta);  // size D

// Incident plane wave e^{i k r cos(phi - theta)} w_n u_s; unit norm.
CVector plane_wave(const ModeSpec& mode, double r, double phi);

// The m-th summand of the scattering-state series.
CVector partial_wave_term(const ModeSpec& mode, const gauge::FluxSpec& flux, int m,
                          double r, double phi);

struct EvalResult {
  CVector psi;
  bool truncation_warning = false;
};

// Immutable evaluator for a superposition of scattering channels sharing
// (model, s, k, theta). Safe to share across threads.
class StateEvaluator {
 public:
  StateEvaluator(ModelId model, gauge::FluxSpec flux, int s, double k, double theta,
                 CVector coeffs, TruncationSpec trunc);

  EvalResult evaluate(double r, double phi) const;

  struct Derivatives {
    CVector psi;
    CVector dpsi_dr;
    CVector dpsi_dphi;
    bool truncation_warning = false;
  };
  // Analytic polar derivatives of the series (D = 1 models only).
  Derivatives evaluate_with_derivatives(double r, double phi) const;

  ModelId model() const { return model_; }
  const gauge::FluxSpec& flux() const { return flux_; }
  int band() const { return s_; }
  double wavenumber() const { return k_; }
  double incidence() const { return theta_; }
  const CVector& coefficients() const { return coeffs_; }
  const TruncationSpec& truncation() const { return trunc_; }
  int dim() const;
  bool coefficients_renormalized() const { return renormalized_; }

 private:
  ModelId model_;
  gauge::FluxSpec flux_;
  int s_;
  double k_;
  double theta_;
  CVector coeffs_;
  TruncationSpec trunc_;
  bool renormalized_ = false;
};

// Single-channel scattering state, summed as the truncated partial-wave series.
CVector scattering_state(const ModeSpec& mode, const gauge::FluxSpec& flux,
                         const TruncationSpec& trunc, double r, double phi);

// Linear combination over channels of a fixed (model, s, k, theta).
StateEvaluator superpose(const std::vector<ModeSpec>& modes, const gauge::FluxSpec& flux,
                         CVector coeffs, TruncationSpec trunc = {});

}  // namespace nabscat::models
