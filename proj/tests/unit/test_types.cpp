#include "common.hpp"
#include "sdwt/types.hpp"

using namespace sdwt;

TEST_SUITE("types") {
  TEST_CASE("constraint surface") {
    const auto p = symplectic_from_hyperbolic(0.7, 0.3, -1.1);
    CHECK(std::norm(p.s()) - std::norm(p.r()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.mu() == doctest::Approx(0.7));
    CHECK(p.phi() == doctest::Approx(0.3));
    CHECK(*p.theta() == doctest::Approx(-1.1));
    CHECK_FALSE(SymplecticParams::identity().theta().has_value());
  }

  TEST_CASE("off-surface pairs are rejected") {
    testing::expect_error(ErrorCode::ConstraintViolation, [] { validate_symplectic(1.0, 0.5); });
    testing::expect_error(ErrorCode::NegativeModulus, [] { symplectic_from_hyperbolic(-0.1, 0, 0); });
  }

  TEST_CASE("property: random hyperbolic points stay on the surface") {
    testing::Draw draw(11);
    for (int i = 0; i < 500; ++i) {
      const auto p = symplectic_from_hyperbolic(draw(0, 3), draw(-4, 4), draw(-4, 4));
      CHECK(std::abs(std::norm(p.s()) - std::norm(p.r()) - 1.0) < 1e-9);
      const auto c = surface_coords(p, 0.0);
      const auto q = symplectic_from_hyperbolic(c.mu, c.phi, c.theta);
      CHECK(std::abs(q.s() - p.s()) < 1e-9);
      CHECK(std::abs(q.r() - p.r()) < 1e-9);
    }
  }

  TEST_CASE("dilation hyperbolic functions") {
    const auto d = DilationParams::make(2.0);
    CHECK(d.sech_lambda() == doctest::Approx(0.8));
    CHECK(d.tanh_lambda() == doctest::Approx(0.6));
    CHECK(*d.lambda() == doctest::Approx(std::log(2.0)));
    CHECK_FALSE(DilationParams::make(-1.0).lambda().has_value());
    testing::expect_error(ErrorCode::NonPositiveDilation, [] { DilationParams::make(-2.0).sech_lambda(); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { DilationParams::make(0.0); });
  }

  TEST_CASE("axis and grid layout") {
    const Axis a = Axis::from_radius(2.0, 5);
    CHECK(a.step == doctest::Approx(1.0));
    CHECK(a.lo() == doctest::Approx(-2.0));
    CHECK(a.hi() == doctest::Approx(2.0));
    testing::expect_error(ErrorCode::InvalidGrid, [] { Axis::from_radius(1.0, 1); });
    const Grid3D g{a, a, Axis::from_radius(1.0, 3)};
    CHECK(g.size() == 75);
    CHECK(g.index(1, 2, 0) == (1 * 5 + 2) * 3);
  }

  TEST_CASE("field algebra") {
    const Grid3D g{Axis::from_radius(1, 3), Axis::from_radius(1, 3), Axis::from_radius(1, 3)};
    const auto f = SampledField::tabulate(g, [](cplx al, double x) { return al + x; });
    auto two = f + f;
    CHECK(two.inner(f).real() == doctest::Approx(2.0 * f.norm2()));
    two *= 0.5;
    CHECK(two.values() == f.values());
    testing::expect_error(ErrorCode::InvalidGrid, [&] { SampledField(g, std::vector<cplx>(3)); });
  }
}
