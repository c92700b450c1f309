#include "common.hpp"
#include "sdwt/fresnel.hpp"

using namespace sdwt;

TEST_SUITE("fresnel") {
  TEST_CASE("ABCD of s = cosh mu, r = i sinh mu") {
    const double mu = 0.4;
    const ABCDMatrix m = abcd_from_sr(std::cosh(mu), cplx{0.0, std::sinh(mu)});
    CHECK(m.A == doctest::Approx(std::cosh(mu)));
    CHECK(m.D == doctest::Approx(std::cosh(mu)));
    CHECK(m.B == doctest::Approx(-std::sinh(mu)));
    CHECK(m.C == doctest::Approx(-std::sinh(mu)));
    CHECK(std::abs(m.det() - 1.0) < 1e-14);
  }

  TEST_CASE("identity and free propagation") {
    const ABCDMatrix id = abcd_from_sr(SymplecticParams::identity());
    CHECK(id == ABCDMatrix{1.0, 0.0, 0.0, 1.0});
    const auto sym = sr_from_abcd(ABCDMatrix{1.0, 2.0, 0.0, 1.0});
    CHECK(std::abs(sym.s() - cplx{1.0, -1.0}) < 1e-15);
    CHECK(std::abs(sym.r() - cplx{0.0, -1.0}) < 1e-15);
  }

  TEST_CASE("property: round trips on random points") {
    testing::Draw draw(17);
    for (int i = 0; i < 200; ++i) {
      const auto sym = symplectic_from_hyperbolic(draw(0, 2), draw(0, 6.3), draw(0, 6.3));
      const auto back = sr_from_abcd(abcd_from_sr(sym));
      CHECK(std::abs(back.s() - sym.s()) < 1e-12);
      CHECK(std::abs(back.r() - sym.r()) < 1e-12);
    }
  }

  TEST_CASE("error paths") {
    testing::expect_error(ErrorCode::NotUnimodular, [] { sr_from_abcd(ABCDMatrix{1.0, 1.0, 1.0, 1.0}); });
    testing::expect_error(ErrorCode::ZeroB, [] { kernel_eval(LensFresnelKernel{{2.0, 0.0, 0.3, 0.5}, 1.0}, 0.1, 0.2); });
    testing::expect_error(ErrorCode::DegenerateDenominator, [] { eq42_matrix_element(std::cosh(0.3), std::sinh(0.3), 1.0, 0.1, 0.2); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { LensFresnelKernel{{1.0, 1.0, 0.0, 1.0}, -1.0}.validate(); });
  }

  TEST_CASE("kernel equals the matrix-element formula") {
    const auto sym = symplectic_from_hyperbolic(0.4, 0.2, 0.0);
    const LensFresnelKernel k{abcd_from_sr(sym), 1.3};
    for (double e : {-1.5, 0.0, 0.7}) {
      for (double ep : {-0.4, 1.1}) {
        CHECK(testing::rel(kernel_eval(k, e, ep), eq42_matrix_element(sym.s(), sym.r(), 1.3, e, ep)) < 1e-12);
      }
    }
  }

  TEST_CASE("composition multiplies matrices and scales") {
    const LensFresnelKernel k1{{1.0, 1.0, 0.0, 1.0}, 2.0}, k2{{1.0, 0.5, -0.4, 0.8}, 0.5};
    const LensFresnelKernel k = kernel_compose(k1, k2);
    CHECK(k.abcd == k1.abcd * k2.abcd);
    CHECK(k.a == 1.0);
    const auto c = kernel_compose_check(k1, k2, [](double t) { return cplx{std::exp(-0.5 * t * t)}; }, Axis::from_radius(2.0, 16),
                                        Axis::from_radius(20.0, 4001));
    CHECK(c.max_modulus_gap < 1e-6 * c.max_modulus);
  }

  TEST_CASE("kernel_apply on a Gaussian column") {
    // Free propagation B = 1 of exp(-t^2/2): modulus (1+B^2)^{-1/4} exp(-t^2/(2(1+B^2))).
    const LensFresnelKernel k{{1.0, 1.0, 0.0, 1.0}, 1.0};
    const Axis e1 = Axis::from_radius(16.0, 1601), e2 = Axis::from_radius(1.0, 3);
    EtaField f{e1, e2, {}};
    for (double t : e1.nodes()) {
      for (std::size_t j = 0; j < e2.count; ++j) f.values.emplace_back(std::exp(-0.5 * t * t));
    }
    const EtaField out = kernel_apply(k, f);
    for (std::size_t i : {800u, 820u, 850u}) {
      const double t = e1.node(i);
      const double expect = std::pow(2.0, -0.25) * std::exp(-t * t / 4.0);
      CHECK(std::abs(std::abs(out.at(i, 1)) - expect) < 1e-6);
    }
  }

  TEST_CASE("smeared element at the lens-dominated point") {
    const auto sym = sr_from_abcd(ABCDMatrix{1.0, 1.5, 0.0, 1.0});
    SmearedKernelOptions o;
    o.cutoff = 16;
    o.alpha_nodes = 32;
    o.x_nodes = 24;
    const auto el = smeared_kernel_element(sym.s(), sym.r(), 1.3, EtaLabel{0.3, 0.2}, -0.2, GaussianProfile{}, o);
    CHECK(testing::rel(el.fock, el.closed) < 1e-2);
  }
}
