#pragma once

// Fourier pair on C x R:
//   F(beta,p) = \int dx/sqrt(2pi) \int d^2alpha/pi g(alpha,x) e^{alpha beta* - alpha* beta + i p x}
//   g(alpha,x) = \int dp/sqrt(2pi) \int d^2beta/pi F(beta,p) e^{alpha* beta - alpha beta* - i p x}
// with alpha beta* - alpha* beta = 2i(alpha2 beta1 - alpha1 beta2).

#include <vector>

#include "sdwt/types.hpp"

namespace sdwt {

// F(beta, p) on the grid conjugate to a signal grid. Row-major in
// (beta1, beta2, p). beta1 is conjugate to alpha2 and beta2 to alpha1.
struct FourierField {
  Axis beta1;
  Axis beta2;
  Axis p;
  std::vector<cplx> values;
  // Signal grid this field is dual to; inverse_ft reconstructs on it.
  Grid3D source;

  std::size_t size() const { return beta1.count * beta2.count * p.count; }
  std::size_t index(std::size_t i1, std::size_t i2, std::size_t ip) const {
    return (i1 * beta2.count + i2) * p.count + ip;
  }
  cplx at(std::size_t i1, std::size_t i2, std::size_t ip) const { return values[index(i1, i2, ip)]; }
  FourierPoint point(std::size_t i1, std::size_t i2, std::size_t ip) const {
    return FourierPoint{{beta1.node(i1), beta2.node(i2)}, p.node(ip)};
  }
  double cell_volume() const { return beta1.step * beta2.step * p.step; }
  // \int |F|^2 dp d^2beta as a plain Riemann sum.
  double norm2() const;
};

// Zero-valued field on the grid conjugate to `source`:
// beta steps pi/(n h), p step 2 pi/(n h), all centered at zero.
FourierField conjugate_field(const Grid3D& source);

struct FourierExtent {
  double beta_radius = 0.0;
  double p_radius = 0.0;
};

FourierField forward_ft(const SampledField& g);
// Throws GridTooCoarse when the requested extent exceeds the Nyquist
// extent of the conjugate grid.
FourierField forward_ft(const SampledField& g, const FourierExtent& requested);

SampledField inverse_ft(const FourierField& F);

// Inverse transform evaluated at arbitrary tensor nodes (separable partial
// sums). Result is row-major in (alpha1, alpha2, x).
std::vector<cplx> inverse_ft_at(const FourierField& F, const std::vector<double>& alpha1,
                                const std::vector<double>& alpha2, const std::vector<double>& x);

}  // namespace sdwt
