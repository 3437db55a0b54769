#pragma once

#include <array>
#include <complex>
#include <vector>

#include "gauge.hpp"
#include "models.hpp"

// Direct numerical evaluation of the contour-integral representation of the
// scattering states. This is the in-repo oracle against which the closed
// Bessel series (and hence the Bessel implementation itself) is validated.

namespace nabscat::contour {

using Complex = std::complex<double>;

enum class Branch { Plus, Minus };

struct ContourSpec {
  double phi = 0.0;
  Branch branch = Branch::Plus;
  int v_sign = +1;      // radial group-velocity sign; Plus branch shifts by 2 pi when < 0
  double height = 12.0;  // imaginary-part cutoff T
  double step = 0.02;    // target node spacing along the path

  void validate() const;  // throws std::invalid_argument
};

struct QuadratureNode {
  Complex xi;
  Complex weight;  // includes the complex direction d(xi)
};

struct ContourPath {
  // start, first corner on the real axis, second corner, end
  std::array<Complex, 4> vertices;
  std::vector<QuadratureNode> nodes;
};

ContourPath contour_nodes(const ContourSpec& spec);

// One partial-wave term of the scattering state via contour quadrature:
// the integral of Psi_{s,n,K}(r,phi) e^{i m (xi - theta) - i alpha_n (phi -
// xi)} d xi over the branch selected by sign(m+alpha_n), with the internal
// eigenvector analytically continued in xi, scaled by e^{i pi alpha_n}/2pi
// (electron-like bands) or (-1)^m/2pi (hole-like bands). These branch
// phases make the quadrature agree with the closed Bessel series; see the
// note in the implementation.
std::vector<Complex> contour_term(const models::ModeSpec& mode, const gauge::FluxSpec& flux,
                                  int m, double r, double phi, double height = 12.0,
                                  double step = 0.02);

}  // namespace nabscat::contour
