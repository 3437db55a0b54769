#pragma once

#include <complex>
#include <vector>

// Diagonalized non-Abelian flux, its polarization eigenbasis, the gauge
// potential field and the Wilson loop. Everything is stored per channel:
// in the diagonal gauge the scattering problem splits into independent
// Abelian problems, one per flux eigenvalue.

namespace nabscat::gauge {

enum class GroupTag { Su2, Su3, U2 };

int channel_count(GroupTag tag);  // N

struct FluxSpec {
  GroupTag group = GroupTag::Su2;
  std::vector<double> eigenvalues;  // dimensionless alpha_n = Phi_n / Phi_0

  static FluxSpec su2(double alpha);             // [alpha, -alpha]
  static FluxSpec su3(double alpha, double beta);  // [beta+alpha, beta-alpha, -2 beta]
  static FluxSpec u2(double alpha, double beta);   // [beta+alpha, beta-alpha]

  int channels() const { return static_cast<int>(eigenvalues.size()); }
  double max_abs_eigenvalue() const;
  void validate() const;  // throws std::invalid_argument
};

// Eigenvector w_n of the flux matrix; standard basis in the diagonal gauge.
// channel is 1-based.
std::vector<std::complex<double>> polarization_vector(const FluxSpec& flux, int channel);

// Diagonal entries of A_x and A_y at (x,y), in units of Phi_0 / length.
struct GaugePotential {
  std::vector<double> ax;
  std::vector<double> ay;
};
GaugePotential gauge_potential(const FluxSpec& flux, double x, double y);

// Diagonal entries of the Wilson loop exp(2 pi i alpha_n).
std::vector<std::complex<double>> wilson_loop(const FluxSpec& flux);

}  // namespace nabscat::gauge
