// nabscat-cli: front end over the shared library's C interface.
//
// Subcommands: state, xsection, sigma-map, oracle-diff, verify.
// Exit codes: 0 success, 1 validation error, 2 numerical failure, 3 I/O.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jobconfig.hpp"
#include "json.hpp"
#include "nabscat.h"

namespace cli = nabscat::cli;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

void require(ns_status status, const std::string& what) {
  if (status == NS_OK) return;
  int code = kExitNumerical;
  if (status == NS_ERR_INVALID_ARGUMENT || status == NS_ERR_DOMAIN) code = kExitValidation;
  if (status == NS_ERR_IO) code = kExitIo;
  throw CliError(code, what + ": " + ns_status_message(status));
}

ns_model model_of(const std::string& name) {
  if (name == "su2") return NS_MODEL_SU2;
  if (name == "su3") return NS_MODEL_SU3;
  if (name == "u2") return NS_MODEL_U2;
  throw CliError(kExitValidation, "unknown model '" + name + "' (expected su2|su3|u2)");
}

std::vector<Complex> effective_coeffs(const cli::JobConfig& cfg, int n_channels) {
  if (cfg.coeffs.empty()) {
    return std::vector<Complex>(static_cast<size_t>(n_channels),
                                Complex{1.0 / std::sqrt(double(n_channels)), 0.0});
  }
  if (static_cast<int>(cfg.coeffs.size()) != n_channels) {
    throw CliError(kExitValidation, "expected " + std::to_string(n_channels) +
                                        " coefficients, got " +
                                        std::to_string(cfg.coeffs.size()));
  }
  return cfg.coeffs;
}

void split_coeffs(const std::vector<Complex>& c, std::vector<double>& re,
                  std::vector<double>& im) {
  re.resize(c.size());
  im.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    re[i] = c[i].real();
    im[i] = c[i].imag();
  }
}

std::string fmt(double v, int prec) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

// Output sink: file when --out is given, stdout otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* os = nullptr;

  explicit Sink(const std::string& path) {
    if (path.empty()) {
      os = &std::cout;
    } else {
      file.open(path, std::ios::binary);
      if (!file) throw CliError(kExitIo, "cannot open output file '" + path + "'");
      os = &file;
    }
  }
  std::ostream& stream() { return *os; }
  void finish() {
    os->flush();
    if (os->fail()) throw CliError(kExitIo, "write failure");
  }
};

// Fixed 256-entry color table (viridis-like), linearly interpolated between
// anchor colors so the repo needs no imaging dependency.
std::array<std::array<unsigned char, 3>, 256> color_table() {
  static const std::array<std::array<double, 3>, 10> anchors = {{{68, 1, 84},
                                                                 {72, 40, 120},
                                                                 {62, 74, 137},
                                                                 {49, 104, 142},
                                                                 {38, 130, 142},
                                                                 {31, 158, 137},
                                                                 {53, 183, 121},
                                                                 {109, 205, 89},
                                                                 {180, 222, 44},
                                                                 {253, 231, 37}}};
  std::array<std::array<unsigned char, 3>, 256> table{};
  for (int i = 0; i < 256; ++i) {
    const double t = i / 255.0 * (anchors.size() - 1);
    const int lo = std::min(static_cast<int>(t), static_cast<int>(anchors.size()) - 2);
    const double f = t - lo;
    for (int c = 0; c < 3; ++c) {
      const double v = anchors[lo][c] * (1.0 - f) + anchors[lo + 1][c] * f;
      table[i][c] = static_cast<unsigned char>(std::lround(v));
    }
  }
  return table;
}

// Binary PPM (P6). Values are min-max normalized; NaN renders black. The top
// image row is the largest-y grid row.
void write_ppm(std::ostream& os, const std::vector<double>& vals, int nx, int ny) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : vals) {
    if (!std::isfinite(v)) continue;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) {
    lo = 0.0;
    hi = 1.0;
  }
  const auto table = color_table();
  os << "P6\n" << nx << " " << ny << "\n255\n";
  for (int iy = ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const double v = vals[static_cast<size_t>(iy) * nx + ix];
      unsigned char rgb[3] = {0, 0, 0};
      if (std::isfinite(v)) {
        const int idx = static_cast<int>(std::lround((v - lo) / (hi - lo) * 255.0));
        const auto& c = table[static_cast<size_t>(std::clamp(idx, 0, 255))];
        rgb[0] = c[0];
        rgb[1] = c[1];
        rgb[2] = c[2];
      }
      os.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
}

// --- subcommands ----------------------------------------------------------

using StatePtr = std::unique_ptr<ns_state, decltype(&ns_state_destroy)>;

StatePtr make_state(const cli::JobConfig& cfg, ns_model model) {
  const int n = ns_channel_count(model);
  std::vector<double> re, im;
  split_coeffs(effective_coeffs(cfg, n), re, im);
  ns_state* raw = nullptr;
  require(ns_state_create(model, cfg.alpha, cfg.beta, cfg.band, cfg.k, cfg.theta,
                          re.data(), im.data(), re.size(), cfg.mmax, &raw),
          "state setup");
  return StatePtr(raw, &ns_state_destroy);
}

void run_state(const cli::JobConfig& cfg) {
  const ns_model model = model_of(cfg.model);
  const StatePtr state = make_state(cfg, model);

  ns_grid grid{cfg.grid.x0, cfg.grid.x1, cfg.grid.y0,
               cfg.grid.y1, cfg.grid.nx, cfg.grid.ny, cfg.rmin};
  const size_t total = static_cast<size_t>(grid.nx) * static_cast<size_t>(grid.ny);
  std::vector<double> rho(total), jx(total), jy(total);
  require(ns_render_fields(state.get(), &grid, cfg.threads, rho.data(), jx.data(),
                           jy.data()),
          "field rendering");

  Sink sink(cfg.out);
  if (cfg.format == "csv") {
    std::ostream& os = sink.stream();
    os << "x,y,rho,jx,jy\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
      const double y = grid.y_min + (grid.y_max - grid.y_min) * iy / (grid.ny - 1);
      for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x_min + (grid.x_max - grid.x_min) * ix / (grid.nx - 1);
        const size_t idx = static_cast<size_t>(iy) * grid.nx + ix;
        os << fmt(x, cfg.precision) << ',' << fmt(y, cfg.precision) << ','
           << fmt(rho[idx], cfg.precision) << ',' << fmt(jx[idx], cfg.precision) << ','
           << fmt(jy[idx], cfg.precision) << '\n';
      }
    }
  } else if (cfg.format == "json") {
    nlohmann::json envelope;
    envelope["config"] = cfg;
    envelope["rho"] = rho;  // NaN serializes as null
    envelope["jx"] = jx;
    envelope["jy"] = jy;
    sink.stream() << envelope.dump(2) << '\n';
  } else if (cfg.format == "ppm") {
    write_ppm(sink.stream(), rho, grid.nx, grid.ny);
  } else {
    throw CliError(kExitValidation, "unknown format '" + cfg.format + "'");
  }
  sink.finish();
}

void run_xsection(const cli::JobConfig& cfg) {
  const ns_model model = model_of(cfg.model);
  if (!(cfg.phi_min < cfg.phi_max) || cfg.phi_samples < 2) {
    throw CliError(kExitValidation, "xsection: need phi_min < phi_max and >= 2 samples");
  }
  // the angular profile diverges at odd multiples of pi
  const double qlo = std::ceil((cfg.phi_min - kPi) / (2.0 * kPi));
  if (cfg.phi_min <= kPi * (2.0 * qlo + 1.0) && kPi * (2.0 * qlo + 1.0) <= cfg.phi_max) {
    throw CliError(kExitValidation, "xsection: phi range crosses the forward direction");
  }
  const int n = ns_channel_count(model);
  std::vector<double> re, im;
  split_coeffs(effective_coeffs(cfg, n), re, im);
  double sigma_total = 0.0;
  require(ns_sigma_factor(model, cfg.alpha, cfg.beta, re.data(), im.data(), re.size(),
                          &sigma_total),
          "sigma factor");

  Sink sink(cfg.out);
  std::ostream& os = sink.stream();
  os << "phi,sigma\n";
  for (int i = 0; i < cfg.phi_samples; ++i) {
    const double phi =
        cfg.phi_min + (cfg.phi_max - cfg.phi_min) * i / (cfg.phi_samples - 1);
    double value = 0.0;
    require(ns_cross_section(cfg.k, sigma_total, phi, &value), "cross section");
    os << fmt(phi, cfg.precision) << ',' << fmt(value, cfg.precision) << '\n';
  }
  sink.finish();
}

void run_sigma_map(const cli::JobConfig& cfg) {
  const ns_model model = model_of(cfg.model);
  const int n = ns_channel_count(model);
  std::vector<double> re, im;
  split_coeffs(effective_coeffs(cfg, n), re, im);
  std::vector<double> map(static_cast<size_t>(cfg.n_alpha) * cfg.n_beta);
  require(ns_sigma_map(model, re.data(), im.data(), re.size(), cfg.alpha0, cfg.alpha1,
                       cfg.beta0, cfg.beta1, cfg.n_alpha, cfg.n_beta, map.data()),
          "sigma map");

  Sink sink(cfg.out);
  if (cfg.format == "ppm") {
    write_ppm(sink.stream(), map, cfg.n_alpha, cfg.n_beta);
  } else if (cfg.format == "csv") {
    std::ostream& os = sink.stream();
    for (int ib = 0; ib < cfg.n_beta; ++ib) {
      for (int ia = 0; ia < cfg.n_alpha; ++ia) {
        if (ia) os << ',';
        os << fmt(map[static_cast<size_t>(ib) * cfg.n_alpha + ia], cfg.precision);
      }
      os << '\n';
    }
  } else {
    throw CliError(kExitValidation, "sigma-map supports csv or ppm output");
  }
  sink.finish();
}

void run_oracle_diff(const cli::JobConfig& cfg) {
  const ns_model model = model_of(cfg.model);
  const int n_channels = ns_channel_count(model);
  const int dim = ns_spinor_dim(model);
  const int m_window = cfg.mmax >= 0 ? cfg.mmax : 12;
  const std::array<double, 4> kr_samples{0.5, 1.0, 5.0, 15.0};
  const std::array<double, 3> phi_samples{0.0, kPi / 3.0, 2.8};

  Sink sink(cfg.out);
  std::ostream& os = sink.stream();
  os << "m,kr,phi,max_diff\n";
  double global = 0.0;
  std::vector<double> sre(dim), sim(dim), qre(dim), qim(dim);
  for (int m = -m_window; m <= m_window; ++m) {
    for (double kr : kr_samples) {
      const double r = kr / cfg.k;
      for (double phi : phi_samples) {
        double worst = 0.0;
        for (int channel = 1; channel <= n_channels; ++channel) {
          require(ns_partial_wave_term(model, cfg.alpha, cfg.beta, cfg.band, channel, m,
                                       cfg.k, cfg.theta, r, phi, sre.data(), sim.data()),
                  "series term");
          require(ns_contour_term(model, cfg.alpha, cfg.beta, cfg.band, channel, m, cfg.k,
                                  cfg.theta, r, phi, 0.0, 0.0, qre.data(), qim.data()),
                  "contour term");
          for (int i = 0; i < dim; ++i) {
            worst = std::max(worst, std::hypot(sre[i] - qre[i], sim[i] - qim[i]));
          }
        }
        global = std::max(global, worst);
        char line[96];
        std::snprintf(line, sizeof(line), "%d,%g,%g,%.3e\n", m, kr, phi, worst);
        os << line;
      }
    }
  }
  char tail[64];
  std::snprintf(tail, sizeof(tail), "# global_max %.3e\n", global);
  os << tail;
  sink.finish();
  if (global > 1e-8) {
    throw CliError(kExitNumerical, "oracle disagreement above 1e-8");
  }
}

void report_line(const char* line, void* user) {
  *static_cast<std::ostream*>(user) << line << '\n';
}

int run_verify(double bessel_bias) {
  if (bessel_bias != 0.0) ns_debug_set_bessel_bias(bessel_bias);
  const int failures = ns_run_verification(&report_line, &std::cout);
  ns_debug_set_bessel_bias(0.0);
  std::cout << (failures == 0 ? "all properties passed\n"
                              : std::to_string(failures) + " properties failed\n");
  return failures == 0 ? kExitOk : kExitNumerical;
}

// --- flag plumbing ----------------------------------------------------------

struct Flags {
  std::string config_path;
  std::string model, coeffs, grid, out, format;
  double alpha = 0, beta = 0, k = 0, theta = 0, rmin = 0;
  double phi_min = 0, phi_max = 0;
  double alpha0 = 0, alpha1 = 0, beta0 = 0, beta1 = 0;
  int band = 0, mmax = 0, precision = 0, threads = 0;
  int phi_samples = 0, n_alpha = 0, n_beta = 0;
  double bessel_bias = 0.0;
};

void add_common_options(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON job file; flags override its fields");
  sub->add_option("--model", f.model, "su2 | su3 | u2");
  sub->add_option("--alpha", f.alpha, "flux parameter alpha");
  sub->add_option("--beta", f.beta, "flux parameter beta (su3/u2)");
  sub->add_option("--band", f.band, "band index s (+1; u2 also -1)");
  sub->add_option("--k", f.k, "wavenumber k*d0");
  sub->add_option("--theta", f.theta, "incidence angle");
  sub->add_option("--coeffs", f.coeffs, "channel coefficients, e.g. '0.6,0.8i'");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--format", f.format, "csv | json | ppm");
  sub->add_option("--precision", f.precision, "significant digits in text output");
  sub->add_option("--threads", f.threads, "worker threads for grid rendering");
  auto* mmax = sub->add_option("--mmax", f.mmax, "fixed partial-wave cutoff");
  sub->add_flag("--auto-trunc", "choose the cutoff automatically (default)")
      ->excludes(mmax);
}

cli::JobConfig build_config(const CLI::App* sub, const Flags& f) {
  cli::JobConfig cfg;
  if (sub->count("--config")) {
    std::ifstream in(f.config_path);
    if (!in) throw CliError(kExitIo, "cannot read config file '" + f.config_path + "'");
    nlohmann::json j;
    try {
      in >> j;
      cfg = j.get<cli::JobConfig>();
    } catch (const nlohmann::json::exception& e) {
      throw CliError(kExitValidation, std::string("config parse error: ") + e.what());
    }
  }
  // not every subcommand defines every flag
  auto given = [&](const char* flag) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    return opt && opt->count() > 0;
  };
  auto set = [&](const char* flag, auto& dst, const auto& src) {
    if (given(flag)) dst = src;
  };
  set("--model", cfg.model, f.model);
  set("--alpha", cfg.alpha, f.alpha);
  set("--beta", cfg.beta, f.beta);
  set("--band", cfg.band, f.band);
  set("--k", cfg.k, f.k);
  set("--theta", cfg.theta, f.theta);
  set("--out", cfg.out, f.out);
  set("--format", cfg.format, f.format);
  set("--precision", cfg.precision, f.precision);
  set("--threads", cfg.threads, f.threads);
  set("--rmin", cfg.rmin, f.rmin);
  set("--mmax", cfg.mmax, f.mmax);
  if (sub->count("--auto-trunc")) cfg.mmax = -1;
  if (sub->count("--coeffs")) cfg.coeffs = cli::parse_coefficients(f.coeffs);
  if (given("--grid")) {
    std::stringstream ss(f.grid);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ',')) v.push_back(std::stod(part));
    if (v.size() != 6) {
      throw CliError(kExitValidation, "--grid expects x0,x1,y0,y1,nx,ny");
    }
    cfg.grid = {v[0], v[1], v[2], v[3], static_cast<int>(v[4]), static_cast<int>(v[5])};
  }
  set("--phi-min", cfg.phi_min, f.phi_min);
  set("--phi-max", cfg.phi_max, f.phi_max);
  set("--phi-samples", cfg.phi_samples, f.phi_samples);
  set("--alpha0", cfg.alpha0, f.alpha0);
  set("--alpha1", cfg.alpha1, f.alpha1);
  set("--beta0", cfg.beta0, f.beta0);
  set("--beta1", cfg.beta1, f.beta1);
  set("--n-alpha", cfg.n_alpha, f.n_alpha);
  set("--n-beta", cfg.n_beta, f.n_beta);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering states, densities and cross sections for "
               "flux-tube scattering in multiband systems"};
  app.require_subcommand(1);

  Flags f;
  auto* state = app.add_subcommand("state", "render rho and j on a grid");
  add_common_options(state, f);
  state->add_option("--grid", f.grid, "window: x0,x1,y0,y1,nx,ny");
  state->add_option("--rmin", f.rmin, "minimum-radius guard (NaN inside)");

  auto* xsection = app.add_subcommand("xsection", "differential cross section sweep");
  add_common_options(xsection, f);
  xsection->add_option("--phi-min", f.phi_min, "sweep start angle");
  xsection->add_option("--phi-max", f.phi_max, "sweep end angle");
  xsection->add_option("--phi-samples", f.phi_samples, "number of samples");

  auto* sigma_map = app.add_subcommand("sigma-map", "Sigma over an (alpha,beta) window");
  add_common_options(sigma_map, f);
  sigma_map->add_option("--alpha0", f.alpha0, "alpha range start");
  sigma_map->add_option("--alpha1", f.alpha1, "alpha range end");
  sigma_map->add_option("--beta0", f.beta0, "beta range start");
  sigma_map->add_option("--beta1", f.beta1, "beta range end");
  sigma_map->add_option("--n-alpha", f.n_alpha, "alpha resolution");
  sigma_map->add_option("--n-beta", f.n_beta, "beta resolution");

  auto* oracle = app.add_subcommand(
      "oracle-diff", "compare the partial-wave series against contour quadrature");
  add_common_options(oracle, f);

  auto* verify = app.add_subcommand("verify", "run the library invariant suite");
  verify->add_option("--bessel-bias", f.bessel_bias,
                     "fault-injection bias for harness self-tests")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(f.bessel_bias);
    const CLI::App* sub = app.get_subcommands().front();
    const cli::JobConfig cfg = build_config(sub, f);
    if (state->parsed()) {
      run_state(cfg);
    } else if (xsection->parsed()) {
      run_xsection(cfg);
    } else if (sigma_map->parsed()) {
      run_sigma_map(cfg);
    } else if (oracle->parsed()) {
      run_oracle_diff(cfg);
    }
    return kExitOk;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
