#pragma once

// Mother wavelets psi(w, x') on C x R, the transformed family, the Fourier
// spectrum Phi and the generalized admissibility integral.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "sdwt/types.hpp"

namespace sdwt {

class MotherWavelet {
 public:
  using EvalFn = std::function<cplx(cplx w, double xp)>;
  using SpectrumFn = std::function<cplx(cplx xi, double q)>;

  // `closed_form` may be empty; spectrum() then falls back to quadrature.
  // `width` is the decay length of psi in both arguments, used by the
  // sampling-density checks.
  MotherWavelet(std::string name, EvalFn eval, SpectrumFn closed_form = {},
                double decay_radius = 6.0, double width = 1.0);

  const std::string& name() const noexcept { return name_; }
  double scale() const noexcept { return scale_; }
  double decay_radius() const noexcept { return decay_radius_; }
  double width() const noexcept { return width_; }
  bool has_closed_form() const noexcept { return static_cast<bool>(closed_form_); }

  cplx eval(cplx w, double xp) const { return scale_ * eval_(w, xp); }
  cplx operator()(cplx w, double xp) const { return eval(w, xp); }

  // Phi(xi, q) = \int dx'/sqrt(pi) \int d^2w/(2 pi) psi(w,x') e^{w xi - w* xi* + i q x'}.
  cplx spectrum(cplx xi, double q) const;
  // Trapezoid quadrature over |w1|,|w2|,|x'| <= decay_radius with `nodes`
  // per axis; throws QuadratureDivergence when the half-resolution estimate
  // differs by more than 1e-6.
  cplx spectrum_quadrature(cplx xi, double q, std::size_t nodes = 97) const;

  MotherWavelet scaled(double factor) const;

 private:
  std::string name_;
  EvalFn eval_;
  SpectrumFn closed_form_;
  double decay_radius_;
  double width_;
  double scale_ = 1.0;
};

// psi(w, x') = w e^{-|w|^2/2} x' e^{-x'^2/2}.
MotherWavelet default_wavelet();

// Looks a wavelet up by name ("gauss-hermite-default") and applies `scale`.
MotherWavelet make_wavelet(const std::string& name, double scale = 1.0);

// sqrt(s*/|a|) with the principal square-root branch.
cplx family_prefactor(const TransformPoint& tp);

// sqrt(s*/|a|) psi[s(alpha-kappa) - r(alpha-kappa)*, (x-b)/a].
cplx eval_family(const MotherWavelet& psi, const TransformPoint& tp, cplx alpha, double x);

// xi = s* beta* - r* beta, the first spectrum argument seen at (s, r).
cplx spectrum_argument(const SymplecticParams& sym, cplx beta);

struct AdmissibilityOptions {
  double theta = 0.0;     // phase of r on the surface realization
  double mu_max = 1.5;
  double a_min = 0.05;    // |a| is integrated over [a_min, a_max]
  double a_max = 20.0;
  bool negative_a = true; // also integrate a in [-a_max, -a_min]
  std::size_t mu_nodes = 48;
  std::size_t phi_nodes = 48;
  std::size_t a_nodes = 96;
  // Throw CutoffTooSmall when a boundary ratio exceeds 1e-8.
  bool require_converged = false;
};

struct AdmissibilityResult {
  double value = 0.0;
  // Integrand at the cutoff, relative to the accumulated value.
  double mu_boundary_ratio = 0.0;
  double a_boundary_ratio = 0.0;
  // |value - value at half resolution|.
  double discretization_error = 0.0;
};

inline constexpr double kBoundaryRatioLimit = 1e-8;

// \int da/|a| \int sinh(mu) dmu dphi |Phi(s* beta* - r* beta, a p)|^2 with
// s = e^{i phi} cosh mu, r = e^{i theta} sinh mu.
AdmissibilityResult admissibility_integral(const MotherWavelet& psi, cplx beta, double p,
                                           const AdmissibilityOptions& opts = {});

// Returns psi scaled so admissibility_integral(beta, p) == 1.
// Throws ZeroAdmissibility when the integral is not finite and positive.
MotherWavelet normalize_admissible(const MotherWavelet& psi, cplx beta, double p,
                                   const AdmissibilityOptions& opts = {});

// One-dimensional wavelet for the classical transform.
struct Wavelet1D {
  std::string name;
  std::function<cplx(double)> eval;
};

// (1 - x^2) e^{-x^2/2}.
Wavelet1D mexican_hat();

// Complex-plane mother wavelet phi(z) for the single-mode symplectic transform.
using ComplexWavelet = std::function<cplx(cplx)>;

// z e^{-|z|^2/2}.
ComplexWavelet default_complex_wavelet();

}  // namespace sdwt
