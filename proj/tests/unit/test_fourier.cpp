#include "common.hpp"
#include "sdwt/fourier.hpp"

using namespace sdwt;

namespace {
Grid3D grid() { return {Axis::from_radius(7.0, 48), Axis::from_radius(7.0, 48), Axis::from_radius(9.0, 64)}; }
}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("Gaussian transform closed form") {
    const auto g = SampledField::tabulate(grid(), [](cplx al, double x) { return cplx{std::exp(-0.5 * std::norm(al) - 0.5 * x * x)}; });
    const FourierField F = forward_ft(g);
    double worst = 0.0;
    for (std::size_t i1 = 0; i1 < F.beta1.count; i1 += 3) {
      for (std::size_t i2 = 0; i2 < F.beta2.count; i2 += 3) {
        for (std::size_t ip = 0; ip < F.p.count; ip += 5) {
          const FourierPoint pt = F.point(i1, i2, ip);
          const cplx expect = 2.0 * std::exp(-2.0 * std::norm(pt.beta) - 0.5 * pt.p * pt.p);
          worst = std::max(worst, std::abs(F.at(i1, i2, ip) - expect));
        }
      }
    }
    CHECK(worst < 1e-10);
  }

  TEST_CASE("shifted Gaussian picks up the plane-wave phase") {
    const cplx c{0.4, -0.3};
    const auto g = SampledField::tabulate(grid(), [&](cplx al, double x) { return cplx{std::exp(-0.5 * std::norm(al - c) - 0.5 * x * x)}; });
    const FourierField F = forward_ft(g);
    const FourierPoint pt = F.point(20, 27, 30);
    const cplx expect = 2.0 * std::exp(-2.0 * std::norm(pt.beta) - 0.5 * pt.p * pt.p) *
                        std::exp(c * std::conj(pt.beta) - std::conj(c) * pt.beta);
    CHECK(std::abs(F.at(20, 27, 30) - expect) < 1e-10);
  }

  TEST_CASE("forward then inverse is the identity") {
    testing::Draw draw(5);
    const Grid3D small{Axis::from_radius(3.0, 8), Axis::from_radius(3.0, 10), Axis::from_radius(4.0, 12)};
    std::vector<cplx> v(small.size());
    for (auto& z : v) z = {draw(-1, 1), draw(-1, 1)};
    const SampledField g(small, v);
    const SampledField back = inverse_ft(forward_ft(g));
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) worst = std::max(worst, std::abs(back.values()[i] - v[i]));
    CHECK(worst < 1e-13);
  }

  TEST_CASE("Plancherel on the discrete pair") {
    const auto g = SampledField::tabulate(grid(), [](cplx al, double x) { return al * std::exp(-0.5 * std::norm(al) - 0.5 * x * x) * x; });
    CHECK(forward_ft(g).norm2() == doctest::Approx(g.norm2()).epsilon(1e-12));
  }

  TEST_CASE("off-grid evaluation agrees with the FFT inverse on nodes") {
    const auto g = SampledField::tabulate(grid(), [](cplx al, double x) { return cplx{std::exp(-0.5 * std::norm(al) - 0.5 * x * x)}; });
    const FourierField F = forward_ft(g);
    const auto vals = inverse_ft_at(F, {grid().alpha1.node(10)}, {grid().alpha2.node(30)}, {grid().x.node(17)});
    CHECK(std::abs(vals[0] - g.at(10, 30, 17)) < 1e-12);
  }

  TEST_CASE("requested extent beyond Nyquist") {
    const auto g = SampledField::zeros(grid());
    testing::expect_error(ErrorCode::GridTooCoarse, [&] { forward_ft(g, FourierExtent{100.0, 1.0}); });
  }
}
