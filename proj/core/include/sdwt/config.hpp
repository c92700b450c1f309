#pragma once

// Run configuration: one JSON document, defaults for every key, and dotted
// "key.path=value" overrides from the command line.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdwt/fock.hpp"
#include "sdwt/fresnel.hpp"
#include "sdwt/transform.hpp"
#include "sdwt/wavelet.hpp"

namespace sdwt {

struct WaveletSpec {
  std::string name = "gauss-hermite-default";
  double scale = 1.0;
  // Rescale so the admissibility integral is 1 at (norm_beta, norm_p).
  bool normalize = true;
  cplx norm_beta{1.0, 0.0};
  double norm_p = 1.0;

  MotherWavelet build() const;
};

struct GridSpec {
  double alpha_radius = 6.0;
  std::size_t alpha_count = 32;
  double x_radius = 8.0;
  std::size_t x_count = 64;

  Grid3D grid() const;
};

struct SamplingSpec {
  std::size_t mu_count = 8;
  double mu_max = 1.5;
  std::size_t phi_count = 8;
  double theta = 0.0;
  std::size_t a_count = 12;
  double a_lo = 0.25;
  double a_hi = 4.0;
  bool mirror_negative = true;
  double a_min = 0.05;
  double kappa_radius = 3.5;
  std::size_t kappa_count = 8;
  double b_radius = 7.5;
  std::size_t b_count = 16;

  // (mu, phi, a) counts multiplied by `refine` (rounded).
  ParameterSampling build(double refine = 1.0) const;
};

struct FockSpec {
  std::size_t cutoff = 24;           // state-level checks
  std::size_t operator_cutoff = 12;  // operator assembly
  std::size_t quad_nodes = 32;
  double quad_radius = 6.0;
  std::string quad_kind = "gauss-hermite";  // or "trapezoid"
  // Transform point of the `fock` verb.
  double mu = 0.3, phi = 0.0, theta = 0.0, a = 1.5;

  FockQuadrature quadrature() const;
};

struct KernelSpec {
  ABCDMatrix abcd{1.0, 1.0, 0.0, 1.0};
  double a = 1.0;
  double eta_radius = 4.0;
  std::size_t eta_count = 64;
};

struct PlotSpec {
  std::string input;  // coefficient CSV
  std::string axis1 = "a";
  std::string axis2 = "b";
  // Values of the remaining columns; unset columns take their first value.
  std::map<std::string, double> fixed;
};

struct RunConfig {
  std::uint64_t seed = 20240601;
  WaveletSpec wavelet;
  GridSpec grid;
  SamplingSpec sampling;
  QuadratureSpec quadrature;
  FockSpec fock;
  KernelSpec kernel;
  PlotSpec plot;
  // Signal file for `transform`, or "fixture:<gaussian|zero|exponential>".
  std::string input = "fixture:gaussian";
  std::string transform_method = "fourier";  // or "direct"
  std::string output_dir = "sdwt-out";

  // Canonical JSON text (sorted keys, shortest round-trip numbers).
  std::string to_json() const;
  // Throws InvalidArgument on inconsistent values.
  void validate() const;
};

// Defaults, then the JSON text, then the overrides in order. Unknown keys
// are rejected. Override values are parsed as JSON when possible, else taken
// as strings.
RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const std::vector<std::string>& overrides = {});

}  // namespace sdwt
