#include "common.hpp"
#include "sdwt/transform.hpp"

using namespace sdwt;

namespace {

Grid3D tiny_grid() { return {Axis::from_radius(5.0, 12), Axis::from_radius(5.0, 12), Axis::from_radius(6.0, 16)}; }

ParameterSampling tiny_sampling() {
  return ParameterSampling::make(2, 0.8, 2, 0.0, 3, 0.5, 2.0, true, Axis::from_radius(1.0, 3), Axis::from_radius(1.0, 3),
                                 Axis::from_radius(2.0, 5));
}

SampledField gauss(const Grid3D& g, cplx c = {}, double x0 = 0.0) {
  return SampledField::tabulate(g, [=](cplx al, double x) { return cplx{std::exp(-0.5 * std::norm(al - c) - 0.5 * (x - x0) * (x - x0))}; });
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("self-transform of the mother wavelet at the identity") {
    // \int dx/sqrt(pi) \int d^2a/(2pi) |psi|^2 = (1/sqrt(pi)) (1/2pi) pi (sqrt(pi)/2) = 1/4
    const MotherWavelet psi = default_wavelet();
    const Grid3D g{Axis::from_radius(7.0, 71), Axis::from_radius(7.0, 71), Axis::from_radius(8.0, 81)};
    const auto f = SampledField::tabulate(g, [&](cplx al, double x) { return psi(al, x); });
    const ForwardResult r = sdwt_forward(f, psi, TransformPoint::identity());
    CHECK(std::abs(r.value - 0.25) < 1e-10);
  }

  TEST_CASE("zero signal gives zero coefficients") {
    const auto W = sdwt_batch(SampledField::zeros(tiny_grid()), default_wavelet(), tiny_sampling());
    CHECK(W.size() == tiny_sampling().size());
    for (const cplx& v : W.values) CHECK(v == cplx{});
  }

  TEST_CASE("batch enumeration order and weights") {
    const ParameterSampling s = tiny_sampling();
    const auto W = sdwt_batch(gauss(tiny_grid()), default_wavelet(), s);
    CHECK(W.points[0].sym.mu() == doctest::Approx(0.0));
    CHECK(W.points[1].dil.b() == doctest::Approx(s.b.node(1)));
    CHECK(W.scale_weights[s.lattice_count()] == doctest::Approx(s.scale_weight(1)));
    CHECK(W.cell_weights[0] == doctest::Approx(s.cell_weight()));
  }

  TEST_CASE("direct and Fourier batch paths agree") {
    const Grid3D g{Axis::from_radius(6.0, 32), Axis::from_radius(6.0, 32), Axis::from_radius(8.0, 64)};
    const auto f = gauss(g, {0.2, -0.1}, 0.3);
    const ParameterSampling s = ParameterSampling::make(2, 0.5, 2, 0.0, 2, 0.7, 1.4, false, Axis::from_radius(0.5, 2),
                                                        Axis::from_radius(0.5, 2), Axis::from_radius(0.5, 2));
    const auto a = sdwt_batch(f, default_wavelet(), s, {}, BatchMethod::Direct);
    const auto b = sdwt_batch(f, default_wavelet(), s, {}, BatchMethod::Fourier);
    double worst = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
      peak = std::max(peak, std::abs(a.values[i]));
    }
    CHECK(worst < 1e-6 * peak);
  }

  TEST_CASE("round_trip equals invert of the on-lattice batch") {
    const MotherWavelet psi = default_wavelet();
    const auto f = gauss(tiny_grid(), {0.3, 0.1});
    const ParameterSampling s = tiny_sampling();
    const InversionResult streamed = round_trip(f, psi, s);
    const auto W = sdwt_batch(f, psi, s.on_lattice(f.grid()));
    const InversionResult full = invert(W, psi, f.grid(), &f, InvertMethod::Fourier);
    double worst = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
      worst = std::max(worst, std::abs(streamed.field.values()[i] - full.field.values()[i]));
      peak = std::max(peak, std::abs(full.field.values()[i]));
    }
    CHECK(worst <= 1e-12 * peak);
    CHECK(*streamed.rel_l2_error == doctest::Approx(*full.rel_l2_error).epsilon(1e-10));
  }

  TEST_CASE("spectral Parseval equals the weighted coefficient sum") {
    const MotherWavelet psi = default_wavelet();
    const Grid3D g = tiny_grid();
    const auto f = gauss(g, {0.3, 0.1}), fp = gauss(g, {-0.2, 0.0}, 0.4);
    const ParameterSampling s = tiny_sampling().on_lattice(g);
    const auto W = sdwt_batch(f, psi, s), Wp = sdwt_batch(fp, psi, s);
    std::vector<cplx> terms(W.size());
    for (std::size_t i = 0; i < W.size(); ++i) {
      terms[i] = W.scale_weights[i] * W.cell_weights[i] * W.values[i] * std::conj(Wp.values[i]);
    }
    cplx direct{};
    for (const auto& t : terms) direct += t;
    const ParsevalResult p = parseval_check(f, fp, psi, tiny_sampling());
    CHECK(testing::rel(p.lhs, direct) < 1e-10);
  }

  TEST_CASE("Parseval edge cases") {
    const MotherWavelet psi = default_wavelet();
    const Grid3D g = tiny_grid();
    const auto z = parseval_check(gauss(g), SampledField::zeros(g), psi, tiny_sampling());
    CHECK(z.lhs == cplx{});
    CHECK(z.rhs == cplx{});
    // Odd and even in x: both sides vanish by symmetry.
    const auto odd = SampledField::tabulate(g, [](cplx al, double x) { return cplx{x * std::exp(-0.5 * std::norm(al) - 0.5 * x * x)}; });
    const auto oe = parseval_check(gauss(g), odd, psi, tiny_sampling());
    CHECK(std::abs(oe.lhs) < 1e-12 * std::sqrt(gauss(g).norm2() * odd.norm2()));
  }

  TEST_CASE("inversion is linear and maps zero to zero") {
    const MotherWavelet psi = default_wavelet();
    const Grid3D g = tiny_grid();
    const ParameterSampling s = tiny_sampling().on_lattice(g);
    auto W1 = sdwt_batch(gauss(g, {0.5, 0.0}), psi, s);
    const auto W2 = sdwt_batch(gauss(g, {0.0, -0.5}, 0.5), psi, s);
    const auto r1 = invert(W1, psi, g).field, r2 = invert(W2, psi, g).field;
    for (std::size_t i = 0; i < W1.size(); ++i) W1.values[i] += W2.values[i];
    const auto r12 = invert(W1, psi, g).field;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(r12.values()[i] - r1.values()[i] - r2.values()[i]));
    CHECK(worst < 1e-12);
    auto Z = W2;
    std::fill(Z.values.begin(), Z.values.end(), cplx{});
    const auto rz = invert(Z, psi, g).field;
    for (const cplx& v : rz.values()) CHECK(v == cplx{});
  }

  TEST_CASE("single-point coefficient field reproduces one family member") {
    const MotherWavelet psi = default_wavelet();
    CoefficientField W;
    TransformPoint tp{symplectic_from_hyperbolic(0.2, 0.1, 0.0), DilationParams::make(1.3, 0.2), {cplx{0.1, 0.0}}};
    W.points = {tp};
    W.values = {1.0};
    W.error_estimates = {NAN};
    const cplx al{0.3, -0.4};
    CHECK(testing::rel(adjoint_transform(W, psi, al, 0.5), eval_family(psi, tp, al, 0.5)) < 1e-15);
  }

  TEST_CASE("coarse lattices are rejected by the direct adjoint") {
    const MotherWavelet psi = default_wavelet();
    const ParameterSampling s = ParameterSampling::make(2, 0.8, 2, 0.0, 2, 0.5, 2.0, false, Axis::from_radius(3.5, 3),
                                                        Axis::from_radius(3.5, 3), Axis::from_radius(2.0, 3));
    const auto W = sdwt_batch(gauss(tiny_grid()), psi, s);
    testing::expect_error(ErrorCode::SamplingTooSparse, [&] { adjoint_transform(W, psi, {0.0, 0.0}, 0.0); });
  }

  TEST_CASE("sampling validation") {
    testing::expect_error(ErrorCode::InvalidArgument, [] {
      ParameterSampling::make(2, 0.8, 2, 0.0, 2, 0.01, 2.0, false, Axis{}, Axis{}, Axis{}, 0.05);
    });
  }

  TEST_CASE("doubling error estimate is reported") {
    QuadratureSpec q;
    q.error_mode = ErrorMode::Doubling;
    const Grid3D g{Axis::from_radius(6.0, 48), Axis::from_radius(6.0, 48), Axis::from_radius(8.0, 64)};
    const auto r = sdwt_forward(gauss(g), default_wavelet(), TransformPoint{symplectic_from_hyperbolic(0.2, 0, 0), DilationParams::make(1.2, 0.1), {cplx{0.2, 0}}}, q);
    REQUIRE(r.error_estimate.has_value());
    CHECK(*r.error_estimate < 1e-4 * std::max(1.0, std::abs(r.value)));
  }

  TEST_CASE("one-dimensional baseline") {
    // \int (1 - x^2) e^{-x^2} dx = sqrt(pi)/2
    const Axis ax = Axis::from_radius(10.0, 2001);
    Signal1D f{ax, {}};
    for (double x : ax.nodes()) f.values.emplace_back(std::exp(-0.5 * x * x));
    CHECK(std::abs(classic_wt_1d(f, mexican_hat(), 1.0, 0.0) - 0.5 * std::sqrt(kPi)) < 1e-10);
  }

  TEST_CASE("complex-plane baseline") {
    // \int d^2z/pi |z|^2 e^{-|z|^2} = 1
    const Axis ax = Axis::from_radius(8.0, 161);
    PlaneField f{ax, ax, {}};
    const ComplexWavelet phi = default_complex_wavelet();
    for (double a1 : ax.nodes()) {
      for (double a2 : ax.nodes()) f.values.push_back(phi({a1, a2}));
    }
    CHECK(std::abs(swt_complex(f, phi, 1.0, 0.0, 0.0) - 1.0) < 1e-10);
  }
}
