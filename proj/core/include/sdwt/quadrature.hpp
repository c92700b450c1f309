#pragma once

// One-dimensional quadrature rules for plain integrals \int f(t) dt.

#include <cstddef>
#include <vector>

namespace sdwt {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double max_abs_node() const;
};

// Gauss-Hermite rule for weight e^{-(t/sigma)^2}, returned with the weight
// folded back in so that sum w_i f(t_i) ~ \int f(t) dt for Gaussian-type f.
Rule1D gauss_hermite(std::size_t n, double sigma = 1.0);

// Gauss-Hermite rule rescaled so the outermost node sits at +/-radius.
Rule1D gauss_hermite_to_radius(std::size_t n, double radius);

// Gauss-Legendre rule on [lo, hi].
Rule1D gauss_legendre(std::size_t n, double lo, double hi);

// Trapezoid rule on [-radius, radius] with n nodes (end weights halved).
Rule1D trapezoid(std::size_t n, double radius);

// Trapezoid rule on [lo, hi].
Rule1D trapezoid(std::size_t n, double lo, double hi);

// Periodic rectangle rule on [0, period): n equal weights, first node at 0.
Rule1D periodic(std::size_t n, double period);

}  // namespace sdwt
