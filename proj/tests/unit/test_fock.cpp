#include "common.hpp"
#include "sdwt/fock.hpp"

using namespace sdwt;

TEST_SUITE("fock") {
  TEST_CASE("ladder operators") {
    const FockSpace sp(5);
    const LadderOps ops = ladder_ops(sp);
    const FockVector v = ops.a1.apply(FockVector::basis(sp, 1, 0));
    CHECK(v.at(0, 0) == cplx{1.0, 0.0});
    CHECK((ops.x1.mat - ops.x1.mat.transpose()).norm() == 0.0);
    CHECK(ops.x1.mat.imag().norm() == 0.0);
    // [a1, a1^dagger] = I below the top level.
    const Eigen::MatrixXcd comm = ops.a1.mat * ops.a1d.mat - ops.a1d.mat * ops.a1.mat;
    double worst = 0.0;
    for (std::size_t i = 0; i < sp.dim(); ++i) {
      if (sp.n1(i) == sp.cutoff()) continue;
      for (std::size_t j = 0; j < sp.dim(); ++j) {
        if (sp.n1(j) == sp.cutoff()) continue;
        worst = std::max(worst, std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)));
      }
    }
    CHECK(worst < 1e-14);
  }

  TEST_CASE("entangled-coherent vacuum amplitude") {
    const FockSpace sp(10);
    const cplx al{0.4, -0.3};
    const double x = 0.6;
    const FockVector v = ecs_vector(al, x, sp);
    CHECK(std::abs(v.at(0, 0) - std::exp(-0.5 * x * x - 0.25 * std::norm(al))) < 1e-15);
    // One-photon amplitudes are the linear coefficients of the generating exponential.
    CHECK(std::abs(v.at(1, 0) - (x + 0.5 * al) * v.at(0, 0)) < 1e-15);
    CHECK(std::abs(v.at(0, 1) - (x - 0.5 * al) * v.at(0, 0)) < 1e-15);
    // Two photons in mode 1: ((x+a/2)^2 - 1/2) / sqrt 2 times the vacuum term.
    const cplx A = x + 0.5 * al;
    CHECK(std::abs(v.at(2, 0) - (A * A - 0.5) / std::sqrt(2.0) * v.at(0, 0)) < 1e-15);
  }

  TEST_CASE("EPR state at eta = 0 is the unit diagonal") {
    const FockSpace sp(6);
    const FockVector v = eta_vector(EtaLabel{0.0, 0.0}, sp, false);
    for (std::size_t n1 = 0; n1 <= 6; ++n1) {
      for (std::size_t n2 = 0; n2 <= 6; ++n2) CHECK(std::abs(v.at(n1, n2) - (n1 == n2 ? 1.0 : 0.0)) < 1e-15);
    }
  }

  TEST_CASE("truncation guard") {
    testing::expect_error(ErrorCode::TruncationOverflow, [] { ecs_vector({4.0, 0.0}, 3.0, FockSpace(8)); });
    CHECK(ecs_tail_estimate({0.5, 0.0}, 0.5, 24) < 1e-12);
    CHECK(eta_tail_estimate(EtaLabel{3.0, 0.0}, 6) > kTruncationTailLimit);
  }

  TEST_CASE("eigen-relation residuals shrink with the cutoff") {
    double prev = INFINITY;
    for (std::size_t n : {12u, 18u, 24u}) {
      const auto r = ecs_eigen_residual({0.6, 0.7}, 1.0, FockSpace(n));
      const double w = std::max(r.annihilation, r.coordinate);
      CHECK(w < prev);
      prev = w;
    }
    CHECK(prev < 1e-8);
    CHECK(eta_eigen_residual(EtaLabel{0.5, 0.5}, FockSpace(24)) < 1e-8);
  }

  TEST_CASE("overlap closed form with summation methods") {
    const FockSpace sp(24);
    const EtaLabel e{0.5, -0.5};
    const cplx al{0.3, -0.2};
    const double x = 0.5;
    const cplx ref = eta_ecs_closed_form(e, al, x);
    const FockVector bra = eta_vector(e, sp), ket = ecs_vector(al, x, sp);
    CHECK(std::abs(overlap(bra, ket, Summation::LogConformal) - ref) < 1e-6);
    CHECK(std::abs(overlap(bra, ket, Summation::Conformal) - ref) < 1e-4);
    // The plain partial sum converges only slowly.
    CHECK(std::abs(overlap(bra, ket, Summation::Truncated) - ref) > 1e-4);
  }

  TEST_CASE("coherent states are normalized") {
    const FockVector v = coherent_vector({0.5, 0.2}, {-0.3, 0.1}, FockSpace(20));
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("wavefunction is linear and matches the definition") {
    const FockSpace sp(6);
    FockVector a = FockVector::basis(sp, 1, 0), b = FockVector::basis(sp, 0, 2);
    const cplx al{0.2, 0.3};
    const double x = -0.4;
    const FockVector vac = FockVector::basis(sp, 0, 0);
    CHECK(std::abs(fock_wavefunction(vac, 0.0, 0.0) - std::conj(ecs_vector(0.0, 0.0, sp).at(0, 0))) < 1e-15);
    FockVector sum = a;
    sum.amp = 2.0 * a.amp + cplx{0, 1} * b.amp;
    const cplx lhs = fock_wavefunction(sum, al, x);
    const cplx rhs = 2.0 * fock_wavefunction(a, al, x) + cplx{0, 1} * fock_wavefunction(b, al, x);
    CHECK(std::abs(lhs - rhs) < 1e-14);
  }

  TEST_CASE("completeness on the low block") {
    FockQuadrature q;
    q.nodes = 40;
    const auto r = resolution_identity_check(FockSpace(12), q, 4);
    CHECK(r.max_deviation < 1e-3);
    FockQuadrature small;
    small.radius = 3.0;
    small.sigma_alpha = 0.5;
    small.sigma_x = 0.5;
    small.nodes = 6;
    testing::expect_error(ErrorCode::CutoffTooSmall, [&] { resolution_identity_check(FockSpace(8), small, 4); });
  }

  TEST_CASE("smeared orthogonality") {
    const FockSpace sp(24);
    const auto gauss = [](double t) { return std::exp(-0.5 * t * t); };
    const auto r = smeared_orthogonality_check(0.0, 0.0, 0.0, gauss, Axis::from_radius(6.0, 97), sp);
    CHECK(std::abs(r.lhs / r.rhs - 1.0) < 0.02);
    CHECK(std::abs(r.rhs - std::sqrt(kPi)) < 1e-14);
    const auto z = smeared_orthogonality_check({0.3, 0.1}, 0.2, {0.1, 0.0}, [](double) { return 0.0; }, Axis::from_radius(6.0, 33), sp);
    CHECK(z.lhs == cplx{});
    CHECK(z.rhs == cplx{});
  }

  TEST_CASE("normal-ordered operator at the identity is exactly I") {
    const FockSpace sp(6);
    const FockOperator U = build_U_normal_ordered(1.0, 0.0, 1.0, sp);
    CHECK((U.mat - Eigen::MatrixXcd::Identity(49, 49)).norm() == 0.0);
  }

  TEST_CASE("normal-ordered coefficients at a = 2") {
    const NormalOrderedGaussian n = normal_ordered_form(1.0, 0.0, 2.0);
    CHECK(n.sech == doctest::Approx(0.8));
    CHECK(n.tanh == doctest::Approx(0.6));
    CHECK(std::abs(n.c_plus + 0.15) < 1e-15);
    CHECK(std::abs(n.d_plus - 0.15) < 1e-15);
    CHECK(std::abs(n.c_minus) < 1e-15);
    CHECK(std::abs(n.lambda(0, 0) - 0.9) < 1e-15);
    CHECK(std::abs(n.lambda(0, 1) + 0.1) < 1e-15);
    CHECK(std::abs(n.prefactor - std::sqrt(0.8)) < 1e-15);
    testing::expect_error(ErrorCode::NonPositiveDilation, [] { normal_ordered_form(1.0, 0.0, -1.0); });
  }

  TEST_CASE("quadrature operator agrees with the normal-ordered form") {
    const FockSpace sp(10);
    const auto sym = symplectic_from_hyperbolic(0.3, 0.0, 0.0);
    const FockOperator Uq = build_U_quadrature(TransformPoint{sym, DilationParams::make(1.5), {}}, sp);
    const FockOperator Un = build_U_normal_ordered(sym.s(), sym.r(), 1.5, sp);
    CHECK(Uq.block_deviation(Un.mat, 3) < 1e-3);
  }

  TEST_CASE("property: U^dagger U approaches I on the low block as N grows") {
    const auto sym = symplectic_from_hyperbolic(0.3, 0.0, 0.0);
    double prev = INFINITY;
    for (std::size_t n : {6u, 10u, 14u}) {
      const FockSpace sp(n);
      const FockOperator U = build_U_normal_ordered(sym.s(), sym.r(), 1.5, sp);
      const FockOperator UU(sp, U.mat.adjoint() * U.mat);
      const double dev = UU.block_deviation(Eigen::MatrixXcd::Identity(U.mat.rows(), U.mat.cols()), 2);
      CHECK(dev < prev);
      prev = dev;
    }
  }

  TEST_CASE("quantum transform trivial fixtures") {
    const FockSpace sp(4);
    const FockVector vac = FockVector::basis(sp, 0, 0), one = FockVector::basis(sp, 1, 0);
    CHECK(std::abs(quantum_sdwt(vac, vac, TransformPoint::identity(), sp) - 1.0) < 1e-6);
    CHECK(std::abs(quantum_sdwt(vac, one, TransformPoint::identity(), sp)) < 1e-6);
  }
}
