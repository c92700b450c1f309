#pragma once

// Parameter types, grids and sampled fields shared by every module.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdwt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Tolerance on |s|^2 - |r|^2 = 1.
inline constexpr double kConstraintTolerance = 1e-9;

// A point (s, r) on the surface |s|^2 - |r|^2 = 1. Only constructible
// through the validating factories below.
class SymplecticParams {
 public:
  static SymplecticParams identity() { return SymplecticParams(1.0, 0.0); }

  cplx s() const noexcept { return s_; }
  cplx r() const noexcept { return r_; }

  // Hyperbolic modulus mu with |s| = cosh(mu).
  double mu() const;
  double phi() const { return std::arg(s_); }
  // Phase of r; nullopt when r == 0.
  std::optional<double> theta() const;

  friend SymplecticParams validate_symplectic(cplx s, cplx r);
  friend SymplecticParams symplectic_from_hyperbolic(double mu, double phi, double theta);

 private:
  SymplecticParams(cplx s, cplx r) : s_(s), r_(r) {}
  cplx s_;
  cplx r_;
};

// Throws ConstraintViolation (value = |s|^2 - |r|^2 - 1) when off-surface.
SymplecticParams validate_symplectic(cplx s, cplx r);

// s = e^{i phi} cosh mu, r = e^{i theta} sinh mu. Throws NegativeModulus for mu < 0.
SymplecticParams symplectic_from_hyperbolic(double mu, double phi, double theta);

// Real dilation a != 0 and shift b. lambda = ln a exists only for a > 0.
class DilationParams {
 public:
  static DilationParams make(double a, double b = 0.0);
  static DilationParams identity() { return DilationParams(1.0, 0.0); }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::optional<double> lambda() const;

  // sech(lambda) = 2a/(1+a^2), tanh(lambda) = (a^2-1)/(1+a^2); both throw
  // NonPositiveDilation when a <= 0.
  double sech_lambda() const;
  double tanh_lambda() const;

 private:
  DilationParams(double a, double b) : a_(a), b_(b) {}
  double a_;
  double b_;
};

struct TranslationParams {
  cplx kappa{0.0, 0.0};
};

struct TransformPoint {
  SymplecticParams sym = SymplecticParams::identity();
  DilationParams dil = DilationParams::identity();
  TranslationParams tr{};

  static TransformPoint identity() { return {}; }
};

// Uniform axis, symmetric about `center`:
//   node(i) = center + (i - (count-1)/2) * step.
struct Axis {
  double center = 0.0;
  double step = 1.0;
  std::size_t count = 2;

  static Axis from_radius(double radius, std::size_t count, double center = 0.0);

  double node(std::size_t i) const {
    return center + (static_cast<double>(i) - 0.5 * static_cast<double>(count - 1)) * step;
  }
  double radius() const { return 0.5 * static_cast<double>(count - 1) * step; }
  double lo() const { return node(0); }
  double hi() const { return node(count - 1); }
  std::vector<double> nodes() const;

  // Throws InvalidGrid unless count >= 2, step > 0 and all values finite.
  void validate() const;

  bool operator==(const Axis&) const = default;
};

// Tensor grid over (alpha1, alpha2, x); storage is row-major with x fastest.
struct Grid3D {
  Axis alpha1;
  Axis alpha2;
  Axis x;

  std::size_t size() const { return alpha1.count * alpha2.count * x.count; }
  std::size_t index(std::size_t i1, std::size_t i2, std::size_t ix) const {
    return (i1 * alpha2.count + i2) * x.count + ix;
  }
  double cell_volume() const { return alpha1.step * alpha2.step * x.step; }
  cplx alpha(std::size_t i1, std::size_t i2) const { return {alpha1.node(i1), alpha2.node(i2)}; }
  void validate() const;

  bool operator==(const Grid3D&) const = default;
};

// g(alpha, x) tabulated on a Grid3D.
class SampledField {
 public:
  SampledField(Grid3D grid, std::vector<cplx> values);

  static SampledField zeros(const Grid3D& grid);
  static SampledField tabulate(const Grid3D& grid,
                               const std::function<cplx(cplx alpha, double x)>& f);

  const Grid3D& grid() const noexcept { return grid_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::vector<cplx>& values() noexcept { return values_; }

  cplx at(std::size_t i1, std::size_t i2, std::size_t ix) const {
    return values_[grid_.index(i1, i2, ix)];
  }
  cplx& at(std::size_t i1, std::size_t i2, std::size_t ix) {
    return values_[grid_.index(i1, i2, ix)];
  }

  // Riemann-sum integrals over the grid (plain cell-volume weights).
  double norm2() const;  // \int |g|^2 dx d^2alpha
  cplx inner(const SampledField& other) const;  // \int g conj(other) dx d^2alpha

  SampledField& operator+=(const SampledField& other);
  SampledField& operator*=(cplx factor);

 private:
  Grid3D grid_;
  std::vector<cplx> values_;
};

SampledField operator+(SampledField lhs, const SampledField& rhs);

struct FourierPoint {
  cplx beta{0.0, 0.0};
  double p = 0.0;
};

// (mu, phi, theta) realization of a symplectic point; theta is taken from
// `theta_hint` when r == 0.
struct SurfaceCoords {
  double mu = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};
SurfaceCoords surface_coords(const SymplecticParams& sym, double theta_hint);

struct QuadratureMeta {
  Grid3D grid;
  double tolerance = 0.0;
  std::string method;  // "direct" or "fourier"
  // Branch used for sqrt(s*) in the wavelet family prefactor.
  std::string sqrt_branch = "principal";
  double theta = 0.0;
  // Steps of the (kappa1, kappa2, b) lattice when the points came from a
  // ParameterSampling; empty otherwise.
  std::vector<double> lattice_steps;
};

// W_psi g over a list of parameter points.
struct CoefficientField {
  std::vector<TransformPoint> points;
  std::vector<cplx> values;
  // NaN where no estimate was requested.
  std::vector<double> error_estimates;
  // Quadrature weights of the inversion measure, split into the (kappa, b)
  // lattice cell d^2kappa db and the (s, a) part da d^2s / (a^2 |s|^2).
  // Both are empty when the points did not come from a ParameterSampling.
  std::vector<double> cell_weights;
  std::vector<double> scale_weights;
  QuadratureMeta meta;

  std::size_t size() const { return points.size(); }
  // Throws InvalidArgument when the per-point vectors disagree in length.
  void validate() const;
};

}  // namespace sdwt
