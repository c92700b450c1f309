#pragma once

// ABCD parametrization of (s, r) and the mixed lens-Fresnel kernel: the
// Fresnel factor acts on eta1, while eta2 is rescaled by the dilation a.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sdwt/fock.hpp"
#include "sdwt/types.hpp"

namespace sdwt {

inline constexpr double kUnimodularTolerance = 1e-12;

struct ABCDMatrix {
  double A = 1.0, B = 0.0, C = 0.0, D = 1.0;

  double det() const { return A * D - B * C; }
  ABCDMatrix operator*(const ABCDMatrix& o) const {
    return {A * o.A + B * o.C, A * o.B + B * o.D, C * o.A + D * o.C, C * o.B + D * o.D};
  }
  bool operator==(const ABCDMatrix&) const = default;
};

// s + r = D - iB, s - r = A + iC: A = Re(s-r), C = Im(s-r), D = Re(s+r), B = -Im(s+r).
// (This sign of C is the one that inverts sr_from_abcd and keeps AD - BC = 1.)
ABCDMatrix abcd_from_sr(const SymplecticParams& sym);
ABCDMatrix abcd_from_sr(cplx s, cplx r);

// s = ((A+D) - i(B-C))/2, r = -((A-D) + i(B+C))/2. Throws NotUnimodular.
SymplecticParams sr_from_abcd(const ABCDMatrix& m);

// Kernel (pi/sqrt a) (2 i pi B)^{-1/2} exp[(i/2B)(A eta1'^2 - 2 eta1 eta1' + D eta1^2)]
// times delta(eta2' - eta2/a), with the delta kept as the scale a.
struct LensFresnelKernel {
  ABCDMatrix abcd;
  double a = 1.0;
  // sqrt(2 i pi B) = sqrt(pi) * principal sqrt(2 i B).
  std::string branch = "principal sqrt(2iB)";

  // Throws NotUnimodular or InvalidArgument (a <= 0).
  void validate() const;
};

// Throws ZeroB when B == 0.
cplx kernel_eval(const LensFresnelKernel& k, double eta1, double eta1p);

// sqrt(pi/a) (s*+r*-s-r)^{-1/2} exp[-(eta1^2+eta1'^2)/2 + ((r*-s) eta1'^2 - (s+r) eta1^2 + 2 eta1 eta1')/(s*+r*-s-r)].
// Throws DegenerateDenominator when s + r is real.
cplx eq42_matrix_element(cplx s, cplx r, double a, double eta1, double eta1p);

// abcd = k1.abcd * k2.abcd, a = k1.a * k2.a.
LensFresnelKernel kernel_compose(const LensFresnelKernel& k1, const LensFresnelKernel& k2);

// Sampled function of (eta1, eta2) on a 2D grid, row-major (eta1, eta2).
struct EtaField {
  Axis eta1;
  Axis eta2;
  std::vector<cplx> values;

  cplx at(std::size_t i1, std::size_t i2) const { return values[i1 * eta2.count + i2]; }
};

// (K f)(eta1, eta2) = (1/sqrt a) \int d eta1' L(eta1, eta1') f(eta1', eta2/a)
// with L the Fresnel factor without pi/sqrt a; trapezoid in eta1' and
// linear interpolation in eta2 (zero outside the grid).
EtaField kernel_apply(const LensFresnelKernel& k, const EtaField& f);

struct CompositionCheck {
  double max_modulus_gap = 0.0;
  double max_modulus = 0.0;
};

// Applies the eta1 Fresnel factors of k2 then k1 to f, and the composed
// factor directly, on `out` (inner integrals on `inner`), and compares moduli.
CompositionCheck kernel_compose_check(const LensFresnelKernel& k1, const LensFresnelKernel& k2,
                                      const std::function<cplx(double)>& f, const Axis& out,
                                      const Axis& inner);

// Gaussian test function of eta2'.
struct GaussianProfile {
  double center = 0.0;
  double width = 1.0;
  double operator()(double t) const {
    const double u = (t - center) / width;
    return std::exp(-0.5 * u * u);
  }
};

struct SmearedKernelElement {
  cplx fock{};    // quadrature over truncated states
  cplx closed{};  // eq42 element times f(eta2/a)
};

struct SmearedKernelOptions {
  std::size_t cutoff = 20;
  std::size_t alpha_nodes = 40;
  double alpha_radius = 8.0;
  std::size_t x_nodes = 32;
  double x_radius = 7.0;
  std::size_t eta2_nodes = 97;
};

// \int d eta2' f(eta2') <eta|U|eta1' + i eta2'> with U from the integral
// sqrt(s/a) \int dx/sqrt(pi) d^2alpha/(2 pi) |s alpha - r alpha*, x/a><alpha, x|.
// The alpha integrand decays like exp[-(A alpha1 + B alpha2)^2/2 - alpha1^2/2],
// so the box only captures it when |B| is of order one.
SmearedKernelElement smeared_kernel_element(cplx s, cplx r, double a, const EtaLabel& eta, double eta1p,
                                            const GaussianProfile& f, const SmearedKernelOptions& opt = {});

}  // namespace sdwt
