#include "models.hpp"

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace nabscat::models {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};

int sign_eps(double x) { return x >= 0.0 ? +1 : -1; }  // epsilon(0) = +1

// (-i)^p for real p >= 0
Complex minus_i_pow(double p) { return std::polar(1.0, -0.5 * kPi * p); }
Complex plus_i_pow(double p) { return std::polar(1.0, 0.5 * kPi * p); }

// Bessel values J_{|m + a| + e}(x), e in {-1,0,1}, for all m in [-M, M] of
// one channel with flux eigenvalue a. Orders split into at most two ladders
// with fractional bases f and 1-f; each ladder is one recurrence sweep.
class ChannelLadder {
 public:
  ChannelLadder(double a, int m_max, double x) {
    fl_ = static_cast<int>(std::floor(a));
    f_ = a - fl_;
    if (f_ < 1e-12 || f_ > 1.0 - 1e-12) {  // integer eigenvalue
      f_ = 0.0;
      fl_ = static_cast<int>(std::lround(a));
    }
    const int jmin = -m_max + fl_;
    const int jmax = m_max + fl_;
    if (f_ == 0.0) {
      int top = std::max(std::abs(jmin), std::abs(jmax)) + 1;
      loA_ = -1;
      A_ = specfun::bessel_j_sequence(0.0, loA_, top, x);
      hasA_ = true;
    } else {
      if (jmax >= 0) {
        loA_ = std::max(0, jmin) - 1;
        A_ = specfun::bessel_j_sequence(f_, loA_, jmax + 1, x);
        hasA_ = true;
      }
      if (jmin <= -1) {
        loB_ = -1;
        B_ = specfun::bessel_j_sequence(1.0 - f_, loB_, -jmin, x);
        hasB_ = true;
      }
    }
  }

  // J at order |m + a| + e
  double at(int m, int e) const {
    const int j = m + fl_;
    if (f_ == 0.0) return A_[static_cast<size_t>(std::abs(j) + e - loA_)];
    if (j >= 0) return A_[static_cast<size_t>(j + e - loA_)];
    return B_[static_cast<size_t>(-j - 1 + e - loB_)];
  }

  double order(int m) const {
    return std::fabs(static_cast<double>(m + fl_) + f_);
  }

 private:
  double f_ = 0.0;
  int fl_ = 0;
  std::vector<double> A_, B_;
  int loA_ = 0, loB_ = 0;
  bool hasA_ = false, hasB_ = false;
};

}  // namespace

int gauge_dim(ModelId model) {
  switch (model) {
    case ModelId::Su2Doublet: return 2;
    case ModelId::Su3Triplet: return 3;
    case ModelId::U2Doublet: return 2;
  }
  throw std::invalid_argument("unknown model");
}

int internal_dim(ModelId model) { return model == ModelId::U2Doublet ? 2 : 1; }

int spinor_dim(ModelId model) { return gauge_dim(model) * internal_dim(model); }

bool band_allowed(ModelId model, int s) {
  if (model == ModelId::U2Doublet) return s == +1 || s == -1;
  return s == +1;
}

gauge::GroupTag group_of(ModelId model) {
  switch (model) {
    case ModelId::Su2Doublet: return gauge::GroupTag::Su2;
    case ModelId::Su3Triplet: return gauge::GroupTag::Su3;
    case ModelId::U2Doublet: return gauge::GroupTag::U2;
  }
  throw std::invalid_argument("unknown model");
}

gauge::FluxSpec make_flux(ModelId model, double alpha, double beta) {
  switch (model) {
    case ModelId::Su2Doublet: return gauge::FluxSpec::su2(alpha);
    case ModelId::Su3Triplet: return gauge::FluxSpec::su3(alpha, beta);
    case ModelId::U2Doublet: return gauge::FluxSpec::u2(alpha, beta);
  }
  throw std::invalid_argument("unknown model");
}

void ModeSpec::validate() const {
  if (!band_allowed(model, s)) throw std::invalid_argument("ModeSpec: band not allowed");
  if (n < 1 || n > gauge_dim(model)) throw std::invalid_argument("ModeSpec: channel out of range");
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("ModeSpec: k must be positive");
  if (!std::isfinite(theta)) throw std::invalid_argument("ModeSpec: theta must be finite");
}

int TruncationSpec::auto_m_max(double kr, double max_abs_alpha) {
  return static_cast<int>(
      std::ceil(kr + 8.0 * std::cbrt(std::max(kr, 0.0)) + max_abs_alpha + 12.0));
}

int TruncationSpec::m_max_for(double kr, double max_abs_alpha) const {
  return auto_rule ? auto_m_max(kr, max_abs_alpha) : m_max;
}

double dispersion(ModelId model, int s, double k) {
  if (k < 0.0) throw std::invalid_argument("dispersion: k must be non-negative");
  if (!band_allowed(model, s)) throw std::invalid_argument("dispersion: band not allowed");
  if (model == ModelId::U2Doublet) return s * k;
  return 0.5 * k * k;
}

int radial_velocity_sign(ModelId model, int s) {
  if (!band_allowed(model, s)) throw std::invalid_argument("radial_velocity_sign: band not allowed");
  return model == ModelId::U2Doublet ? s : +1;
}

CVector internal_eigenvector(ModelId model, int s, double theta) {
  if (!band_allowed(model, s)) throw std::invalid_argument("internal_eigenvector: band not allowed");
  if (model == ModelId::U2Doublet) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {Complex{inv_sqrt2, 0.0},
            static_cast<double>(s) * inv_sqrt2 * std::polar(1.0, theta)};
  }
  return {Complex{1.0, 0.0}};
}

CVector plane_wave(const ModeSpec& mode, double r, double phi) {
  mode.validate();
  if (r < 0.0) throw std::invalid_argument("plane_wave: r must be non-negative");
  const Complex phase = std::polar(1.0, mode.k * r * std::cos(phi - mode.theta));
  const CVector u = internal_eigenvector(mode.model, mode.s, mode.theta);
  const int d = internal_dim(mode.model);
  CVector out(static_cast<size_t>(spinor_dim(mode.model)), 0.0);
  for (int i = 0; i < d; ++i) {
    out[static_cast<size_t>((mode.n - 1) * d + i)] = phase * u[static_cast<size_t>(i)];
  }
  return out;
}

CVector partial_wave_term(const ModeSpec& mode, const gauge::FluxSpec& flux, int m,
                          double r, double phi) {
  mode.validate();
  flux.validate();
  if (group_of(mode.model) != flux.group) {
    throw std::invalid_argument("partial_wave_term: flux group does not match model");
  }
  const double a = flux.eigenvalues[static_cast<size_t>(mode.n - 1)];
  const double q = m + a;
  const double absq = std::fabs(q);
  const double x = mode.k * r;
  const Complex angular = std::polar(1.0, m * (phi - mode.theta + kPi));
  CVector out(static_cast<size_t>(spinor_dim(mode.model)), 0.0);
  if (internal_dim(mode.model) == 1) {
    out[static_cast<size_t>(mode.n - 1)] =
        minus_i_pow(absq) * specfun::bessel_j(absq, x) * angular;
    return out;
  }
  // U(2) two-spinor: prefactor base -i for s=+1, +i for s=-1
  const int eps = sign_eps(q);
  const Complex pref = (mode.s == +1 ? minus_i_pow(absq) : plus_i_pow(absq)) / std::sqrt(2.0);
  const Complex lower_sign = (mode.s == +1 ? kI : -kI) * static_cast<double>(eps);
  const size_t base = static_cast<size_t>(2 * (mode.n - 1));
  out[base] = pref * specfun::bessel_j(absq, x) * angular;
  out[base + 1] = pref * lower_sign * specfun::bessel_j(absq + eps, x) *
                  std::polar(1.0, phi) * angular;
  return out;
}

StateEvaluator::StateEvaluator(ModelId model, gauge::FluxSpec flux, int s, double k,
                               double theta, CVector coeffs, TruncationSpec trunc)
    : model_(model), flux_(std::move(flux)), s_(s), k_(k), theta_(theta),
      coeffs_(std::move(coeffs)), trunc_(trunc) {
  flux_.validate();
  if (group_of(model_) != flux_.group) {
    throw std::invalid_argument("StateEvaluator: flux group does not match model");
  }
  if (!band_allowed(model_, s_)) throw std::invalid_argument("StateEvaluator: band not allowed");
  if (!(k_ > 0.0)) throw std::invalid_argument("StateEvaluator: k must be positive");
  if (coeffs_.size() != static_cast<size_t>(gauge_dim(model_))) {
    throw std::invalid_argument("StateEvaluator: coefficient count must equal channel count");
  }
  double norm2 = 0.0;
  for (const Complex& c : coeffs_) norm2 += std::norm(c);
  if (norm2 == 0.0) throw std::invalid_argument("StateEvaluator: zero coefficient vector");
  if (std::fabs(norm2 - 1.0) > 1e-9) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& c : coeffs_) c *= scale;
    renormalized_ = true;
  }
}

int StateEvaluator::dim() const { return spinor_dim(model_); }

EvalResult StateEvaluator::evaluate(double r, double phi) const {
  if (r < 0.0) throw std::invalid_argument("StateEvaluator: r must be non-negative");
  const double x = k_ * r;
  const int N = gauge_dim(model_);
  const int D = internal_dim(model_);
  const int M = trunc_.m_max_for(x, flux_.max_abs_eigenvalue());
  EvalResult res;
  res.psi.assign(static_cast<size_t>(N * D), 0.0);

  if (x == 0.0) {
    // slow path; valid only when all required orders are >= 0 or integer
    for (int n = 1; n <= N; ++n) {
      const Complex c = coeffs_[static_cast<size_t>(n - 1)];
      if (c == 0.0) continue;
      ModeSpec mode{model_, s_, n, k_, theta_};
      for (int m = -M; m <= M; ++m) {
        CVector term = partial_wave_term(mode, flux_, m, r, phi);
        for (size_t i = 0; i < term.size(); ++i) res.psi[i] += c * term[i];
      }
    }
    return res;
  }

  const double ang = phi - theta_ + kPi;
  double edge_norm2 = 0.0;
  for (int n = 0; n < N; ++n) {
    const Complex c = coeffs_[static_cast<size_t>(n)];
    if (c == 0.0) continue;
    const double a = flux_.eigenvalues[static_cast<size_t>(n)];
    ChannelLadder ladder(a, M, x);
    for (int m = -M; m <= M; ++m) {
      const double absq = ladder.order(m);
      const Complex angular = std::polar(1.0, m * ang);
      if (D == 1) {
        const Complex val = c * minus_i_pow(absq) * ladder.at(m, 0) * angular;
        res.psi[static_cast<size_t>(n)] += val;
        if (std::abs(m) == M) edge_norm2 = std::max(edge_norm2, std::norm(val));
      } else {
        const int eps = (static_cast<double>(m) + a >= 0.0) ? +1 : -1;
        const Complex pref =
            c * (s_ == +1 ? minus_i_pow(absq) : plus_i_pow(absq)) / std::sqrt(2.0) * angular;
        const Complex lower_sign = (s_ == +1 ? kI : -kI) * static_cast<double>(eps);
        const Complex up = pref * ladder.at(m, 0);
        const Complex lo = pref * lower_sign * ladder.at(m, eps) * std::polar(1.0, phi);
        res.psi[static_cast<size_t>(2 * n)] += up;
        res.psi[static_cast<size_t>(2 * n + 1)] += lo;
        if (std::abs(m) == M) edge_norm2 = std::max(edge_norm2, std::norm(up) + std::norm(lo));
      }
    }
  }
  double total2 = 0.0;
  for (const Complex& v : res.psi) total2 += std::norm(v);
  res.truncation_warning = std::sqrt(edge_norm2) > 1e-12 * std::sqrt(total2);
  return res;
}

StateEvaluator::Derivatives StateEvaluator::evaluate_with_derivatives(double r,
                                                                      double phi) const {
  if (internal_dim(model_) != 1) {
    throw std::invalid_argument("evaluate_with_derivatives: only defined for D = 1 models");
  }
  if (!(r > 0.0)) throw std::invalid_argument("evaluate_with_derivatives: r must be positive");
  const double x = k_ * r;
  const int N = gauge_dim(model_);
  const int M = trunc_.m_max_for(x, flux_.max_abs_eigenvalue());
  Derivatives res;
  res.psi.assign(static_cast<size_t>(N), 0.0);
  res.dpsi_dr.assign(static_cast<size_t>(N), 0.0);
  res.dpsi_dphi.assign(static_cast<size_t>(N), 0.0);
  const double ang = phi - theta_ + kPi;
  double edge_norm2 = 0.0;
  for (int n = 0; n < N; ++n) {
    const Complex c = coeffs_[static_cast<size_t>(n)];
    if (c == 0.0) continue;
    const double a = flux_.eigenvalues[static_cast<size_t>(n)];
    ChannelLadder ladder(a, M, x);
    for (int m = -M; m <= M; ++m) {
      const double absq = ladder.order(m);
      const Complex coef = c * minus_i_pow(absq) * std::polar(1.0, m * ang);
      const Complex val = coef * ladder.at(m, 0);
      res.psi[static_cast<size_t>(n)] += val;
      res.dpsi_dr[static_cast<size_t>(n)] +=
          coef * (k_ * 0.5 * (ladder.at(m, -1) - ladder.at(m, +1)));
      res.dpsi_dphi[static_cast<size_t>(n)] += kI * static_cast<double>(m) * val;
      if (std::abs(m) == M) edge_norm2 = std::max(edge_norm2, std::norm(val));
    }
  }
  double total2 = 0.0;
  for (const Complex& v : res.psi) total2 += std::norm(v);
  res.truncation_warning = std::sqrt(edge_norm2) > 1e-12 * std::sqrt(total2);
  return res;
}

CVector scattering_state(const ModeSpec& mode, const gauge::FluxSpec& flux,
                         const TruncationSpec& trunc, double r, double phi) {
  mode.validate();
  CVector coeffs(static_cast<size_t>(gauge_dim(mode.model)), 0.0);
  coeffs[static_cast<size_t>(mode.n - 1)] = 1.0;
  StateEvaluator ev(mode.model, flux, mode.s, mode.k, mode.theta, std::move(coeffs), trunc);
  return ev.evaluate(r, phi).psi;
}

StateEvaluator superpose(const std::vector<ModeSpec>& modes, const gauge::FluxSpec& flux,
                         CVector coeffs, TruncationSpec trunc) {
  if (modes.empty()) throw std::invalid_argument("superpose: no modes");
  if (coeffs.size() != modes.size()) {
    throw std::invalid_argument("superpose: coefficient count must match mode count");
  }
  const ModeSpec& first = modes.front();
  CVector full(static_cast<size_t>(gauge_dim(first.model)), 0.0);
  std::vector<bool> seen(full.size(), false);
  for (size_t i = 0; i < modes.size(); ++i) {
    const ModeSpec& mode = modes[i];
    mode.validate();
    if (mode.model != first.model || mode.s != first.s || mode.k != first.k ||
        mode.theta != first.theta) {
      throw std::invalid_argument("superpose: modes must share (model, s, k, theta)");
    }
    const size_t idx = static_cast<size_t>(mode.n - 1);
    if (seen[idx]) throw std::invalid_argument("superpose: duplicate channel");
    seen[idx] = true;
    full[idx] = coeffs[i];
  }
  return StateEvaluator(first.model, flux, first.s, first.k, first.theta, std::move(full),
                        trunc);
}

}  // namespace nabscat::models
