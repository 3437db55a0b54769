#include "contour.hpp"

#include <cmath>
#include <stdexcept>

namespace nabscat::contour {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI{0.0, 1.0};

// 10-point Gauss-Legendre rule on [-1, 1]
constexpr int kGlOrder = 10;
constexpr double kGlNode[kGlOrder] = {
    -0.9739065285171717, -0.8650633666889845, -0.6794095682990244,
    -0.4333953941292472, -0.1488743389816312, 0.1488743389816312,
    0.4333953941292472,  0.6794095682990244,  0.8650633666889845,
    0.9739065285171717};
constexpr double kGlWeight[kGlOrder] = {
    0.0666713443086881, 0.1494513491505806, 0.2190863625159820,
    0.2692667193099963, 0.2955242247147529, 0.2955242247147529,
    0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
    0.0666713443086881};

void append_segment(std::vector<QuadratureNode>& nodes, Complex from, Complex to,
                    double step) {
  const Complex delta = to - from;
  const double len = std::abs(delta);
  const int panels = std::max(1, static_cast<int>(std::ceil(len / (kGlOrder * step))));
  for (int p = 0; p < panels; ++p) {
    const double t0 = static_cast<double>(p) / panels;
    const double t1 = static_cast<double>(p + 1) / panels;
    const double mid = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    for (int g = 0; g < kGlOrder; ++g) {
      QuadratureNode node;
      node.xi = from + delta * (mid + half * kGlNode[g]);
      node.weight = delta * (half * kGlWeight[g]);
      nodes.push_back(node);
    }
  }
}

// Internal eigenvector continued to complex propagation angle xi.
std::vector<Complex> continued_eigenvector(models::ModelId model, int s, Complex xi) {
  if (models::internal_dim(model) == 2) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return {Complex{inv_sqrt2, 0.0},
            static_cast<double>(s) * inv_sqrt2 * std::exp(kI * xi)};
  }
  return {Complex{1.0, 0.0}};
}

}  // namespace

void ContourSpec::validate() const {
  if (!(height >= 10.0)) throw std::invalid_argument("ContourSpec: height must be >= 10");
  if (!(step > 0.0) || step > 0.05) {
    throw std::invalid_argument("ContourSpec: step must be in (0, 0.05]");
  }
  if (v_sign != +1 && v_sign != -1) throw std::invalid_argument("ContourSpec: bad v_sign");
}

ContourPath contour_nodes(const ContourSpec& spec) {
  spec.validate();
  ContourPath path;
  const Complex iT{0.0, spec.height};
  if (spec.branch == Branch::Plus) {
    double shift = spec.v_sign < 0 ? 2.0 * kPi : 0.0;
    const double a0 = -2.5 * kPi + spec.phi + shift;
    const double a1 = -0.5 * kPi + spec.phi + shift;
    path.vertices = {Complex{a0, 0.0} + iT, Complex{a0, 0.0}, Complex{a1, 0.0},
                     Complex{a1, 0.0} + iT};
  } else {
    const double a0 = -1.5 * kPi + spec.phi;
    const double a1 = 0.5 * kPi + spec.phi;
    path.vertices = {Complex{a0, 0.0} - iT, Complex{a0, 0.0}, Complex{a1, 0.0},
                     Complex{a1, 0.0} - iT};
  }
  for (int seg = 0; seg < 3; ++seg) {
    append_segment(path.nodes, path.vertices[static_cast<size_t>(seg)],
                   path.vertices[static_cast<size_t>(seg + 1)], spec.step);
  }
  return path;
}

std::vector<Complex> contour_term(const models::ModeSpec& mode, const gauge::FluxSpec& flux,
                                  int m, double r, double phi, double height, double step) {
  mode.validate();
  flux.validate();
  if (models::group_of(mode.model) != flux.group) {
    throw std::invalid_argument("contour_term: flux group does not match model");
  }
  if (!(r > 0.0)) throw std::invalid_argument("contour_term: r must be positive");
  const double a = flux.eigenvalues[static_cast<size_t>(mode.n - 1)];
  const double q = m + a;
  const double eps = q >= 0.0 ? 1.0 : -1.0;

  ContourSpec spec;
  spec.phi = phi;
  spec.branch = q >= 0.0 ? Branch::Plus : Branch::Minus;
  spec.v_sign = models::radial_velocity_sign(mode.model, mode.s);
  spec.height = height;
  spec.step = step;
  const ContourPath path = contour_nodes(spec);

  const double kr = mode.k * r;
  auto integrand_scalar = [&](Complex xi) {
    return std::exp(kI * (kr * std::cos(Complex{phi, 0.0} - xi)) +
                    kI * (static_cast<double>(m) * (xi - mode.theta)) -
                    kI * (a * (phi - xi)));
  };
  // endpoint decay check
  for (Complex end : {path.vertices[0], path.vertices[3]}) {
    if (std::abs(integrand_scalar(end)) >= 1e-14) {
      throw std::runtime_error("contour_term: integrand does not decay at contour endpoint");
    }
  }

  const int D = models::internal_dim(mode.model);
  std::vector<Complex> block(static_cast<size_t>(D), 0.0);
  for (const QuadratureNode& node : path.nodes) {
    const Complex f = integrand_scalar(node.xi) * node.weight;
    const std::vector<Complex> u = continued_eigenvector(mode.model, mode.s, node.xi);
    for (int i = 0; i < D; ++i) block[static_cast<size_t>(i)] += f * u[static_cast<size_t>(i)];
  }
  // Branch-phase convention: evaluating the representation with the Schläfli
  // integral shows the literal prefactor eps/(2 pi) leaves a constant phase
  // eps*e^{-i pi a} (electron-like) resp. eps*(-1)^m (hole-like) relative to
  // the closed Bessel series; the compensated scale below makes the two
  // representations identical. The sign eps cancels exactly.
  (void)eps;
  const Complex scale = (spec.v_sign > 0
                             ? std::polar(1.0, kPi * a)
                             : Complex{(m % 2 == 0) ? 1.0 : -1.0, 0.0}) /
                        (2.0 * kPi);
  std::vector<Complex> out(static_cast<size_t>(models::spinor_dim(mode.model)), 0.0);
  for (int i = 0; i < D; ++i) {
    out[static_cast<size_t>((mode.n - 1) * D + i)] = scale * block[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace nabscat::contour
