#include "sdwt/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "sdwt/errors.hpp"

namespace sdwt {

double Rule1D::max_abs_node() const {
  double m = 0.0;
  for (double t : nodes) m = std::max(m, std::abs(t));
  return m;
}

Rule1D gauss_hermite(std::size_t n, double sigma) {
  if (n < 1 || !(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "gauss_hermite needs n >= 1, sigma > 0");
  const double b = 1.0 / (sigma * sigma);
  std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)> ws(
      gsl_integration_fixed_alloc(gsl_integration_fixed_hermite, n, 0.0, b, 0.0, 0.0),
      &gsl_integration_fixed_free);
  if (!ws) throw Error(ErrorCode::InvalidArgument, "GSL could not build the Hermite rule");
  const double* x = gsl_integration_fixed_nodes(ws.get());
  const double* w = gsl_integration_fixed_weights(ws.get());
  Rule1D rule;
  rule.nodes.assign(x, x + n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] = w[i] * std::exp(b * x[i] * x[i]);
  return rule;
}

Rule1D gauss_hermite_to_radius(std::size_t n, double radius) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two nodes to map a radius");
  const double outer = gauss_hermite(n).max_abs_node();
  return gauss_hermite(n, radius / outer);
}

Rule1D gauss_legendre(std::size_t n, double lo, double hi) {
  if (n < 1 || !(hi > lo)) throw Error(ErrorCode::InvalidArgument, "gauss_legendre needs n >= 1 and hi > lo");
  std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)> ws(
      gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, n, lo, hi, 0.0, 0.0),
      &gsl_integration_fixed_free);
  if (!ws) throw Error(ErrorCode::InvalidArgument, "GSL could not build the Legendre rule");
  const double* x = gsl_integration_fixed_nodes(ws.get());
  const double* w = gsl_integration_fixed_weights(ws.get());
  return Rule1D{std::vector<double>(x, x + n), std::vector<double>(w, w + n)};
}

Rule1D trapezoid(std::size_t n, double radius) { return trapezoid(n, -radius, radius); }

Rule1D trapezoid(std::size_t n, double lo, double hi) {
  if (n < 2 || !(hi > lo)) throw Error(ErrorCode::InvalidArgument, "trapezoid needs n >= 2 and hi > lo");
  const double h = (hi - lo) / static_cast<double>(n - 1);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, h);
  for (std::size_t i = 0; i < n; ++i) rule.nodes[i] = lo + h * static_cast<double>(i);
  rule.weights.front() *= 0.5;
  rule.weights.back() *= 0.5;
  return rule;
}

Rule1D periodic(std::size_t n, double period) {
  if (n < 1 || !(period > 0.0)) throw Error(ErrorCode::InvalidArgument, "periodic rule needs n >= 1");
  const double h = period / static_cast<double>(n);
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, h);
  for (std::size_t i = 0; i < n; ++i) rule.nodes[i] = h * static_cast<double>(i);
  return rule;
}

}  // namespace sdwt
