#include <cmath>

#include "common.hpp"
#include "sdwt/quadrature.hpp"
#include "sdwt/types.hpp"

using namespace sdwt;

namespace {
double apply(const Rule1D& r, double (*f)(double)) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * f(r.nodes[i]);
  return s;
}
}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Hermite moments") {
    const Rule1D r = gauss_hermite(20, 1.0);
    // \int t^4 e^{-t^2} dt = 3 sqrt(pi) / 4
    CHECK(apply(r, [](double t) { return t * t * t * t * std::exp(-t * t); }) ==
          doctest::Approx(0.75 * std::sqrt(kPi)).epsilon(1e-13));
    const Rule1D wide = gauss_hermite(30, 2.0);
    CHECK(apply(wide, [](double t) { return std::exp(-t * t / 4.0); }) == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-12));
    CHECK(gauss_hermite_to_radius(16, 5.0).max_abs_node() == doctest::Approx(5.0));
  }

  TEST_CASE("Gauss-Legendre is exact for polynomials") {
    const Rule1D r = gauss_legendre(5, -1.0, 2.0);
    // \int_{-1}^{2} t^9 dt = (2^10 - 1)/10
    CHECK(apply(r, [](double t) { return std::pow(t, 9); }) == doctest::Approx(102.3).epsilon(1e-13));
  }

  TEST_CASE("trapezoid and periodic rules") {
    const Rule1D t = trapezoid(101, 1.0);
    CHECK(apply(t, [](double x) { return x * x; }) == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
    const Rule1D p = periodic(16, 2.0 * kPi);
    CHECK(p.nodes.front() == 0.0);
    CHECK(apply(p, [](double x) { return std::cos(3.0 * x) * std::cos(3.0 * x); }) == doctest::Approx(kPi).epsilon(1e-14));
  }
}
