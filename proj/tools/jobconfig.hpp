#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

// Job description shared by all subcommands. Serializes to/from JSON so a
// run can be replayed from the envelope it emitted (--config), with
// command-line flags overriding individual fields.

namespace nabscat::cli {

struct GridConfig {
  double x0 = -10.0, x1 = 10.0;
  double y0 = -10.0, y1 = 10.0;
  int nx = 201, ny = 201;

  bool operator==(const GridConfig&) const = default;
};

struct JobConfig {
  std::string model = "su2";  // su2 | su3 | u2
  double alpha = 0.0;
  double beta = 0.0;
  int band = +1;
  double k = 1.0;      // k * d0
  double theta = 0.0;  // incidence angle
  std::vector<std::complex<double>> coeffs;  // empty = equal weights
  GridConfig grid;
  double rmin = 1e-3;
  int mmax = -1;  // < 0 selects automatic truncation
  std::string out;
  std::string format = "csv";  // csv | json | ppm
  int precision = 6;           // significant digits in text output
  int threads = 1;

  // xsection sweep
  double phi_min = -3.0, phi_max = 3.0;
  int phi_samples = 121;

  // sigma-map window
  double alpha0 = -1.0, alpha1 = 1.0;
  double beta0 = -1.0, beta1 = 1.0;
  int n_alpha = 101, n_beta = 101;

  bool operator==(const JobConfig&) const = default;
};

inline void to_json(nlohmann::json& j, const GridConfig& g) {
  j = nlohmann::json{{"x0", g.x0}, {"x1", g.x1}, {"y0", g.y0},
                     {"y1", g.y1}, {"nx", g.nx}, {"ny", g.ny}};
}

inline void from_json(const nlohmann::json& j, GridConfig& g) {
  g.x0 = j.value("x0", g.x0);
  g.x1 = j.value("x1", g.x1);
  g.y0 = j.value("y0", g.y0);
  g.y1 = j.value("y1", g.y1);
  g.nx = j.value("nx", g.nx);
  g.ny = j.value("ny", g.ny);
}

inline void to_json(nlohmann::json& j, const JobConfig& c) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& z : c.coeffs) coeffs.push_back({z.real(), z.imag()});
  j = nlohmann::json{{"model", c.model},
                     {"alpha", c.alpha},
                     {"beta", c.beta},
                     {"band", c.band},
                     {"k", c.k},
                     {"theta", c.theta},
                     {"coeffs", coeffs},
                     {"grid", c.grid},
                     {"rmin", c.rmin},
                     {"mmax", c.mmax},
                     {"out", c.out},
                     {"format", c.format},
                     {"precision", c.precision},
                     {"threads", c.threads},
                     {"phi_min", c.phi_min},
                     {"phi_max", c.phi_max},
                     {"phi_samples", c.phi_samples},
                     {"alpha0", c.alpha0},
                     {"alpha1", c.alpha1},
                     {"beta0", c.beta0},
                     {"beta1", c.beta1},
                     {"n_alpha", c.n_alpha},
                     {"n_beta", c.n_beta}};
}

inline void from_json(const nlohmann::json& j, JobConfig& c) {
  c.model = j.value("model", c.model);
  c.alpha = j.value("alpha", c.alpha);
  c.beta = j.value("beta", c.beta);
  c.band = j.value("band", c.band);
  c.k = j.value("k", c.k);
  c.theta = j.value("theta", c.theta);
  if (j.contains("coeffs")) {
    c.coeffs.clear();
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("config: coeffs entries must be [re, im] pairs");
      }
      c.coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  c.grid = j.value("grid", c.grid);
  c.rmin = j.value("rmin", c.rmin);
  c.mmax = j.value("mmax", c.mmax);
  c.out = j.value("out", c.out);
  c.format = j.value("format", c.format);
  c.precision = j.value("precision", c.precision);
  c.threads = j.value("threads", c.threads);
  c.phi_min = j.value("phi_min", c.phi_min);
  c.phi_max = j.value("phi_max", c.phi_max);
  c.phi_samples = j.value("phi_samples", c.phi_samples);
  c.alpha0 = j.value("alpha0", c.alpha0);
  c.alpha1 = j.value("alpha1", c.alpha1);
  c.beta0 = j.value("beta0", c.beta0);
  c.beta1 = j.value("beta1", c.beta1);
  c.n_alpha = j.value("n_alpha", c.n_alpha);
  c.n_beta = j.value("n_beta", c.n_beta);
}

// Parses one coefficient written as `a+bi` (also `a`, `bi`, `i`, `-i`,
// exponents allowed in either part).
std::complex<double> parse_complex(const std::string& text);

// Comma-separated list of `a+bi` terms.
std::vector<std::complex<double>> parse_coefficients(const std::string& text);

}  // namespace nabscat::cli
