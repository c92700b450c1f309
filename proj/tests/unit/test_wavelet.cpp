#include "common.hpp"
#include "sdwt/wavelet.hpp"

using namespace sdwt;

TEST_SUITE("wavelet") {
  TEST_CASE("default wavelet values") {
    const MotherWavelet psi = default_wavelet();
    CHECK(psi(cplx{0, 0}, 1.0) == cplx{0, 0});
    const cplx w{0.5, -0.2};
    const double x = 0.7;
    CHECK(testing::rel(psi(w, x), w * std::exp(-0.5 * std::norm(w)) * x * std::exp(-0.5 * x * x)) < 1e-15);
    CHECK(psi.has_closed_form());
  }

  TEST_CASE("closed-form spectrum matches quadrature") {
    const MotherWavelet psi = default_wavelet();
    for (const auto& [xi, q] : {std::pair{cplx{0.3, -0.4}, 0.8}, std::pair{cplx{-0.6, 0.1}, -1.3}, std::pair{cplx{0.0, 0.5}, 0.4}}) {
      const cplx closed = psi.spectrum(xi, q);
      // -2 sqrt2 i xi* q exp(-2|xi|^2 - q^2/2)
      const cplx formula = -2.0 * std::sqrt(2.0) * cplx{0, 1} * std::conj(xi) * q * std::exp(-2.0 * std::norm(xi) - 0.5 * q * q);
      CHECK(testing::rel(closed, formula) < 1e-14);
      CHECK(testing::rel(psi.spectrum_quadrature(xi, q, 129), closed) < 1e-6);
    }
  }

  TEST_CASE("identity family member is the mother wavelet") {
    const MotherWavelet psi = default_wavelet();
    const cplx al{0.4, 0.9};
    CHECK(testing::rel(eval_family(psi, TransformPoint::identity(), al, -0.3), psi(al, -0.3)) < 1e-15);
    TransformPoint tp{symplectic_from_hyperbolic(0.5, 0.4, 1.0), DilationParams::make(-2.0, 0.3), {cplx{0.1, 0.2}}};
    const cplx s = tp.sym.s(), r = tp.sym.r();
    const cplx d = al - tp.tr.kappa;
    const cplx expect = std::sqrt(std::conj(s) / 2.0) * psi(s * d - r * std::conj(d), (-0.3 - 0.3) / -2.0);
    CHECK(testing::rel(eval_family(psi, tp, al, -0.3), expect) < 1e-14);
  }

  TEST_CASE("spectrum argument") {
    const auto sym = symplectic_from_hyperbolic(0.3, 0.2, -0.5);
    const cplx beta{0.7, -0.1};
    CHECK(spectrum_argument(sym, beta) == std::conj(sym.s()) * std::conj(beta) - std::conj(sym.r()) * beta);
  }

  TEST_CASE("normalization hits one at the anchor") {
    const MotherWavelet psi = normalize_admissible(default_wavelet(), {1.0, 0.0}, 1.0);
    CHECK(admissibility_integral(psi, {1.0, 0.0}, 1.0).value == doctest::Approx(1.0).epsilon(1e-12));
    // Scaling psi by c scales the integral by c^2.
    const MotherWavelet twice = psi.scaled(2.0);
    CHECK(admissibility_integral(twice, {1.0, 0.0}, 1.0).value == doctest::Approx(4.0).epsilon(1e-12));
  }

  TEST_CASE("zero wavelet is not admissible") {
    const MotherWavelet zero("zero", [](cplx, double) { return cplx{}; }, [](cplx, double) { return cplx{}; });
    testing::expect_error(ErrorCode::ZeroAdmissibility, [&] { normalize_admissible(zero, {1.0, 0.0}, 1.0); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { make_wavelet("morlet-2d"); });
  }

  TEST_CASE("property: admissibility integrand is even in p") {
    const MotherWavelet psi = default_wavelet();
    testing::Draw draw(3);
    for (int i = 0; i < 5; ++i) {
      const cplx beta{draw(-2, 2), draw(-2, 2)};
      const double p = draw(0.2, 2.0);
      CHECK(admissibility_integral(psi, beta, p).value == doctest::Approx(admissibility_integral(psi, beta, -p).value).epsilon(1e-12));
    }
  }
}
