#pragma once

// The symplectic-dilation wavelet transform: forward (direct and Fourier
// paths), batch driver, adjoint, reproducing sum, Parseval check and
// inversion, plus the one-dimensional and complex-plane baseline transforms.

#include <cstddef>
#include <optional>
#include <vector>

#include "sdwt/fourier.hpp"
#include "sdwt/types.hpp"
#include "sdwt/wavelet.hpp"

namespace sdwt {

// Discretized parameter set. Points are enumerated mu-major:
// (mu, phi, a, kappa1, kappa2, b) with b fastest.
struct ParameterSampling {
  std::vector<double> mu;
  std::vector<double> mu_weights;
  std::vector<double> phi;
  std::vector<double> phi_weights;
  double theta = 0.0;
  // Signed dilations; |a| >= a_min. Weights realize da/|a| (log spacing).
  std::vector<double> a;
  std::vector<double> a_weights;
  double a_min = 0.05;
  Axis kappa1{0.0, 1.0, 2};
  Axis kappa2{0.0, 1.0, 2};
  Axis b{0.0, 1.0, 2};

  // mu in [0, mu_max] (trapezoid), phi in [0, 2 pi) (periodic),
  // |a| log-spaced in [a_lo, a_hi] with optional mirrored negatives.
  static ParameterSampling make(std::size_t n_mu, double mu_max, std::size_t n_phi, double theta,
                                std::size_t n_a, double a_lo, double a_hi, bool mirror_negative,
                                Axis kappa1, Axis kappa2, Axis b, double a_min = 0.05);

  std::size_t scale_count() const { return mu.size() * phi.size() * a.size(); }
  std::size_t lattice_count() const { return kappa1.count * kappa2.count * b.count; }
  std::size_t size() const { return scale_count() * lattice_count(); }

  // Throws InvalidArgument on empty or inconsistent axes, a_min <= 0 or |a| < a_min.
  void validate() const;

  // (s, a) block `k` in enumeration order.
  TransformPoint scale_point(std::size_t k) const;
  // da d^2s / (a^2 |s|^2) weight of block k = a_weight/|a| * tanh(mu) mu_w phi_w.
  double scale_weight(std::size_t k) const;
  TransformPoint point(std::size_t i) const;
  double cell_weight() const { return kappa1.step * kappa2.step * b.step; }

  // Same (mu, phi, a) sets with the (kappa, b) lattice equal to a signal grid.
  ParameterSampling on_lattice(const Grid3D& grid) const;
};

enum class ErrorMode { None, Doubling };

// Truncated-domain quadrature on the signal grid: only nodes with
// |alpha1|, |alpha2| <= r_alpha and |x| <= r_x (relative to the grid
// centers) contribute; `stride` subsamples the grid.
struct QuadratureSpec {
  double r_alpha = 6.0;
  double r_x = 8.0;
  std::size_t stride = 1;
  ErrorMode error_mode = ErrorMode::None;

  // Throws InvalidArgument unless radii >= 4 * envelope_width.
  void validate(double envelope_width) const;
};

struct ForwardResult {
  cplx value;
  std::optional<double> error_estimate;
};

// Relative/absolute thresholds of the doubling estimate.
inline constexpr double kForwardRelTol = 1e-4;
inline constexpr double kForwardAbsTol = 1e-10;

// \int dx/sqrt(pi) \int d^2alpha/(2 pi) g conj(psi_tp).
ForwardResult sdwt_forward(const SampledField& g, const MotherWavelet& psi,
                           const TransformPoint& tp, const QuadratureSpec& q = {});

// sqrt(s|a|) \int dp/sqrt(2pi) \int d^2beta/pi F conj(Phi(s*beta* - r*beta, a p))
//   e^{kappa* beta - kappa beta* - i p b}, with sqrt(s) = conj(sqrt(s*)).
cplx sdwt_forward_fourier(const FourierField& F, const MotherWavelet& psi, const TransformPoint& tp);

enum class BatchMethod { Direct, Fourier };

CoefficientField sdwt_batch(const SampledField& g, const MotherWavelet& psi,
                            const ParameterSampling& sampling, const QuadratureSpec& q = {},
                            BatchMethod method = BatchMethod::Fourier);

// Direct driver over an explicit point list (same order as `points`).
CoefficientField sdwt_batch(const SampledField& g, const MotherWavelet& psi,
                            const std::vector<TransformPoint>& points, const QuadratureSpec& q = {});

// Largest allowed (kappa step) * (|s| + |r|) and (b step) / |a|, in units of
// the wavelet width, for the direct adjoint sum.
inline constexpr double kMaxLatticeStepPerWidth = 1.0;

// \int db/sqrt(pi) \int d^2kappa/(2 pi) W psi_tp(alpha, x) as a weighted
// sum over all points of W (cell_weights when present, else weight 1 and no
// measure normalization). Throws SamplingTooSparse when the lattice steps
// exceed the wavelet decay scale.
cplx adjoint_transform(const CoefficientField& W, const MotherWavelet& psi, cplx alpha, double x,
                       std::optional<double> kappa_step = std::nullopt,
                       std::optional<double> b_step = std::nullopt);

// Spectral realization shared by reproduce/parseval/invert on a lattice
// equal to the signal grid: the coefficient lattice of each (s, a) block is
// computed exactly by FFT.
SampledField reproduce(const SampledField& g, const MotherWavelet& psi,
                       const ParameterSampling& sampling, const QuadratureSpec& q = {});

struct ParsevalResult {
  cplx lhs;
  cplx rhs;
  double rel_gap = 0.0;
};

// lhs = sum over the sampling of W g conj(W g') with the inversion measure,
// evaluated spectrally as \int F conj(F') K; rel_gap = |lhs - rhs| / (|g| |g'|).
ParsevalResult parseval_check(const SampledField& g, const SampledField& g_prime,
                              const MotherWavelet& psi, const ParameterSampling& sampling,
                              const QuadratureSpec& q = {});

// K(beta, p) = sum over (s, a) blocks of weight |s| |a| |Phi|^2 on the grid
// conjugate to `grid`, in FourierField order.
std::vector<double> admissibility_field(const Grid3D& grid, const MotherWavelet& psi,
                                       const ParameterSampling& sampling);

// Same check with a precomputed admissibility field.
ParsevalResult parseval_check(const SampledField& g, const SampledField& g_prime, const std::vector<double>& K);

struct InversionResult {
  SampledField field;
  std::optional<double> rel_l2_error;  // on the central half-domain
};

enum class InvertMethod { Auto, Direct, Fourier };

// da db d^2kappa d^2s/(sqrt(pi) 2 pi a^2 |s|^2) W psi_tp summed over W.
// The Fourier method requires every (s, a) block of W to be a full lattice
// equal to target_grid; Auto picks it when possible.
InversionResult invert(const CoefficientField& W, const MotherWavelet& psi, const Grid3D& target_grid,
                       const SampledField* reference = nullptr, InvertMethod method = InvertMethod::Auto);

// invert(sdwt_batch(g, psi, sampling.on_lattice(g.grid())), psi, g.grid(), &g)
// computed one (s, a) block at a time, so the coefficient field is never
// held in memory.
InversionResult round_trip(const SampledField& g, const MotherWavelet& psi, const ParameterSampling& sampling);

// Relative L2 distance on the central half of every axis.
double central_rel_l2(const SampledField& approx, const SampledField& reference);

// Sampled 1D signal on a uniform axis.
struct Signal1D {
  Axis axis;
  std::vector<cplx> values;
};

// (1/sqrt|a|) \int f(x) conj(phi((x-b)/a)) dx.
cplx classic_wt_1d(const Signal1D& f, const Wavelet1D& phi, double a, double b);

// Complex-plane field on a 2D grid, row-major (alpha1, alpha2).
struct PlaneField {
  Axis alpha1;
  Axis alpha2;
  std::vector<cplx> values;
};

// \int d^2z/pi f(z) conj(sqrt(s*) phi(s(z-kappa) - r(z-kappa)*)).
cplx swt_complex(const PlaneField& f, const ComplexWavelet& phi, cplx s, cplx r, cplx kappa);

}  // namespace sdwt
