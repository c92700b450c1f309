#include "sdwt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <tuple>

#include "sdwt/errors.hpp"
#include "sdwt/field_io.hpp"
#include "sdwt/fock.hpp"
#include "sdwt/fourier.hpp"
#include "sdwt/fresnel.hpp"
#include "sdwt/parallel.hpp"
#include "sdwt/transform.hpp"
#include "sdwt/wavelet.hpp"

namespace sdwt {
namespace {

// Tolerances of the acceptance criteria.
constexpr double kTolExponential = 1e-3;
constexpr double kTolPathAgreement = 1e-4;
constexpr double kTolParsevalRatio = 0.05;
constexpr double kTolOrthogonalFloor = 1e-3;
constexpr double kTolRoundTrip = 0.05;
constexpr double kTolRoundTripRefined = 0.025;
constexpr double kTolDelta = 0.02;
constexpr double kTolAdmissibility = 1e-3;
constexpr double kTolEigen = 1e-8;
constexpr double kTolCompleteness = 1e-3;
constexpr double kTolOverlap = 1e-6;
constexpr double kTolOperator = 1e-3;
constexpr double kTolQuantumClassical = 1e-3;
constexpr double kTolSmearedOrthogonality = 0.02;
constexpr double kTolAbcd = 1e-12;
constexpr double kTolKernelIdentity = 1e-10;
constexpr double kTolSmearedKernel = 1e-2;
constexpr double kTolComposition = 1e-6;

// Refinement ladder of the sampling-density checks: (mu, phi, a) counts are
// multiplied by these factors.
constexpr double kRefine[] = {1.0, 1.5, 2.0};

// Below this the error is at rounding level and "halving" is not measurable.
constexpr double kDeltaFloor = 1e-12;

// Portable uniform draws: mt19937_64 output is fixed by the standard, the
// distribution classes are not.
class Rng {
 public:
  Rng(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : tag) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    eng_.seed(seed ^ h);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 eng_;
};

using Details = std::vector<std::pair<std::string, double>>;

CheckRecord record(double value, double reference, double tolerance, bool pass, Details details = {}) {
  CheckRecord r;
  r.value = value;
  r.reference = reference;
  r.tolerance = tolerance;
  r.pass = pass;
  r.details = std::move(details);
  return r;
}

std::string level_key(const char* prefix, std::size_t i) { return std::string(prefix) + std::to_string(i); }

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

SampledField gaussian(const Grid3D& grid, cplx center, double x0, double sa, double sx) {
  return SampledField::tabulate(grid, [=](cplx al, double x) {
    const double u = (x - x0) / sx;
    return cplx{std::exp(-std::norm(al - center) / (2.0 * sa * sa) - 0.5 * u * u), 0.0};
  });
}

// ---------------------------------------------------------------- inversion

std::vector<CheckRecord> check_exponential(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const Grid3D grid{Axis::from_radius(8.0, 97), Axis::from_radius(8.0, 97), Axis::from_radius(16.0, 129)};
  const cplx beta{0.5, 0.0};
  const double p = 1.0;
  const SampledField g = SampledField::tabulate(grid, [&](cplx al, double x) {
    return std::exp(std::conj(al) * beta - al * std::conj(beta) - cplx{0.0, p * x});
  });
  QuadratureSpec q;
  q.r_alpha = 8.0;
  q.r_x = 16.0;
  Rng rng(cfg.seed, "A1");
  double worst = 0.0;
  Details d;
  for (std::size_t i = 0; i < 5; ++i) {
    const double mu = rng.uniform(0.0, 0.8);
    const double theta = rng.coin(0.5) ? 0.0 : kPi;
    const auto sym = symplectic_from_hyperbolic(mu, 0.0, theta);
    const double a = rng.uniform(0.5, 2.0) * (rng.coin(0.3) ? -1.0 : 1.0);
    const double b = rng.uniform(-0.5, 0.5);
    const cplx kappa{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    const TransformPoint tp{sym, DilationParams::make(a, b), {kappa}};
    const cplx v = sdwt_forward(g, psi, tp, q).value;
    const cplx ref = std::sqrt(sym.s() * std::abs(a)) * std::conj(psi.spectrum(spectrum_argument(sym, beta), a * p)) *
                     std::exp(std::conj(kappa) * beta - kappa * std::conj(beta) - cplx{0.0, p * b});
    const double err = std::abs(v - ref) / std::abs(ref);
    d.emplace_back(level_key("rel_err_", i), err);
    worst = std::max(worst, err);
  }
  return {record(worst, 0.0, kTolExponential, worst <= kTolExponential, d)};
}

std::vector<CheckRecord> check_paths(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const Grid3D grid = cfg.grid.grid();
  Rng rng(cfg.seed, "A2");
  double worst = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const cplx c0{rng.uniform(0, 1), rng.uniform(0, 1)};
    const double c1 = rng.uniform(0, 1), c2 = rng.uniform(0, 1);
    const double sx = rng.uniform(0.8, 1.2);
    const cplx shift{rng.uniform(0, 0.5), rng.uniform(0, 0.5)};
    const SampledField g = SampledField::tabulate(grid, [&](cplx al, double x) {
      const cplx dlt = al - shift;
      return (c0 + c1 * dlt + c2 * x * x) * std::exp(-0.5 * std::norm(dlt) - x * x / (2.0 * sx * sx));
    });
    const auto sym = symplectic_from_hyperbolic(rng.uniform(0, 0.6), rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi));
    const double a = rng.uniform(0.6, 1.6), b = rng.uniform(-0.5, 0.5);
    const cplx kappa{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    const TransformPoint tp{sym, DilationParams::make(a, b), {kappa}};
    QuadratureSpec q = cfg.quadrature;
    q.r_alpha = std::min(q.r_alpha, grid.alpha1.radius());
    q.r_x = std::min(q.r_x, grid.x.radius());
    const cplx direct = sdwt_forward(g, psi, tp, q).value;
    const cplx fourier = sdwt_forward_fourier(forward_ft(g), psi, tp);
    worst = std::max(worst, std::abs(direct - fourier) / std::abs(direct));
  }
  return {record(worst, 0.0, kTolPathAgreement, worst <= kTolPathAgreement)};
}

std::vector<CheckRecord> check_round_trip(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const SampledField g = gaussian(cfg.grid.grid(), {}, 0.0, 1.0, 1.0);
  const double e0 = *round_trip(g, psi, cfg.sampling.build(kRefine[0])).rel_l2_error;
  const double e1 = *round_trip(g, psi, cfg.sampling.build(kRefine[1])).rel_l2_error;
  Details d{{"rel_l2_default", e0}, {"rel_l2_refined", e1}, {"refine_factor", kRefine[1]},
            {"tolerance_refined", kTolRoundTripRefined}};
  return {record(e0, 0.0, kTolRoundTrip, e0 <= kTolRoundTrip && e1 <= kTolRoundTripRefined, d)};
}

std::vector<CheckRecord> check_delta(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const std::tuple<double, double, double> points[] = {{0.3, 0.5, 1.2}, {0.0, 0.0, 1.0}, {0.5, 2.0, -1.5}};
  std::vector<double> fourier_err, direct_err;
  for (std::size_t lvl = 0; lvl < 3; ++lvl) {
    const std::size_t na = 16u << lvl, nx = 32u << lvl;
    const Grid3D grid{Axis::from_radius(6.0, na + 1), Axis::from_radius(6.0, na + 1), Axis::from_radius(8.0, nx + 1)};
    SampledField g = SampledField::zeros(grid);
    const std::size_t i1 = na / 2 + 1, i2 = na / 2 - 1, ix = nx / 2 + 2;
    g.at(i1, i2, ix) = 1.0 / grid.cell_volume();
    const FourierField F = forward_ft(g);
    double wf = 0.0, wd = 0.0;
    for (const auto& [mu, phi, a] : points) {
      const TransformPoint tp{symplectic_from_hyperbolic(mu, phi, 0.3), DilationParams::make(a, 0.2), {cplx{0.1, -0.2}}};
      const cplx ref = std::conj(eval_family(psi, tp, grid.alpha(i1, i2), grid.x.node(ix))) / (2.0 * kPi * std::sqrt(kPi));
      wf = std::max(wf, std::abs(sdwt_forward_fourier(F, psi, tp) - ref) / std::abs(ref));
      wd = std::max(wd, std::abs(sdwt_forward(g, psi, tp).value - ref) / std::abs(ref));
    }
    fourier_err.push_back(wf);
    direct_err.push_back(wd);
  }
  bool halving = true;
  for (std::size_t i = 1; i < fourier_err.size(); ++i) {
    halving = halving && (fourier_err[i] <= 0.5 * fourier_err[i - 1] || fourier_err[i] <= kDeltaFloor);
  }
  Details d;
  for (std::size_t i = 0; i < fourier_err.size(); ++i) d.emplace_back(level_key("fourier_rel_err_", i), fourier_err[i]);
  for (std::size_t i = 0; i < direct_err.size(); ++i) d.emplace_back(level_key("direct_rel_err_", i), direct_err[i]);
  return {record(fourier_err[0], 0.0, kTolDelta, fourier_err[0] <= kTolDelta && halving, d)};
}

// ----------------------------------------------------------------- parseval

std::vector<CheckRecord> check_parseval(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const Grid3D grid = cfg.grid.grid();
  Rng rng(cfg.seed, "A3");
  std::vector<std::pair<SampledField, SampledField>> pairs;
  for (std::size_t i = 0; i < 5; ++i) {
    auto draw = [&] {
      return gaussian(grid, {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)}, rng.uniform(-0.4, 0.4),
                      rng.uniform(0.8, 1.2), rng.uniform(0.8, 1.2));
    };
    SampledField g = draw();
    // First pair is g' = g.
    SampledField gp = i == 0 ? g : draw();
    pairs.emplace_back(std::move(g), std::move(gp));
  }
  std::vector<double> worst_ratio_dev, worst_gap;
  Details d;
  for (std::size_t lvl = 0; lvl < std::size(kRefine); ++lvl) {
    const std::vector<double> K = admissibility_field(grid, psi, cfg.sampling.build(kRefine[lvl]));
    double rd = 0.0, gap = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const ParsevalResult r = parseval_check(pairs[i].first, pairs[i].second, K);
      const double ratio = std::abs(r.lhs / r.rhs);
      if (lvl == 0) d.emplace_back(level_key("ratio_pair_", i), ratio);
      rd = std::max(rd, std::abs(ratio - 1.0));
      gap = std::max(gap, r.rel_gap);
    }
    worst_ratio_dev.push_back(rd);
    worst_gap.push_back(gap);
    d.emplace_back(level_key("rel_gap_level_", lvl), gap);
  }
  const bool pass = worst_ratio_dev[0] <= kTolParsevalRatio && strictly_decreasing(worst_gap);
  CheckRecord r = record(worst_ratio_dev[0], 0.0, kTolParsevalRatio, pass, d);
  r.note = "value is max |lhs/rhs - 1| at default sampling; gap must decrease over the refinement ladder";
  return {r};
}

std::vector<CheckRecord> check_parseval_orthogonal(const RunConfig& cfg) {
  const MotherWavelet psi = cfg.wavelet.build();
  const Grid3D grid = cfg.grid.grid();
  const SampledField even = gaussian(grid, {0.2, -0.1}, 0.0, 1.0, 1.0);
  const SampledField odd = SampledField::tabulate(grid, [](cplx al, double x) {
    return cplx{x * std::exp(-0.5 * std::norm(al - cplx{0.2, -0.1}) - 0.5 * x * x), 0.0};
  });
  const ParsevalResult r = parseval_check(even, odd, psi, cfg.sampling.build());
  const double scale = std::sqrt(even.norm2() * odd.norm2());
  const double v = std::abs(r.lhs) / scale;
  return {record(v, 0.0, kTolOrthogonalFloor, v <= kTolOrthogonalFloor, {{"abs_rhs_scaled", std::abs(r.rhs) / scale}})};
}

// ------------------------------------------------------------ admissibility

std::vector<CheckRecord> check_admissibility(const RunConfig& cfg) {
  const cplx beta0{1.0, 0.0};
  const double p0 = 1.0;
  const MotherWavelet psi = normalize_admissible(make_wavelet(cfg.wavelet.name, cfg.wavelet.scale), beta0, p0);
  const AdmissibilityResult at = admissibility_integral(psi, beta0, p0);
  CheckRecord main = record(at.value, 1.0, kTolAdmissibility, std::abs(at.value - 1.0) <= kTolAdmissibility,
                            {{"mu_boundary_ratio", at.mu_boundary_ratio},
                             {"a_boundary_ratio", at.a_boundary_ratio},
                             {"discretization_error", at.discretization_error}});
  Details d;
  double lo = INFINITY, hi = 0.0;
  for (double b : {0.5, 1.0, 2.0}) {
    for (double p : {0.5, 1.0, 2.0}) {
      const double v = admissibility_integral(psi, {b, 0.0}, p).value;
      d.emplace_back("K_beta" + format_double(b) + "_p" + format_double(p), v);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  CheckRecord variation = record(hi / lo, 1.0, 0.0, true, d);
  variation.informational = true;
  variation.name = "admissibility variation over (beta, p)";
  variation.note = "max/min of the normalized integral over a 3x3 sample; reported only";
  return {main, variation};
}

// --------------------------------------------------------------------- fock

std::vector<CheckRecord> check_eigen(const RunConfig&) {
  const cplx alphas[] = {{0, 0}, {1, 0}, {0, -1}, {0.6, 0.7}, {-0.7, -0.7}};
  const double xs[] = {-1.0, 0.3, 1.0};
  std::vector<double> res;
  Details d;
  for (std::size_t n : {12u, 18u, 24u}) {
    const FockSpace sp(n);
    double w = 0.0;
    for (cplx al : alphas) {
      for (double x : xs) {
        const auto r = ecs_eigen_residual(al, x, sp);
        w = std::max({w, r.annihilation, r.coordinate});
      }
    }
    res.push_back(w);
    d.emplace_back(level_key("residual_N", n), w);
    d.emplace_back(level_key("eta_residual_N", n), eta_eigen_residual(EtaLabel{0.7, -0.4}, sp));
  }
  return {record(res.back(), 0.0, kTolEigen, res.back() <= kTolEigen && strictly_decreasing(res), d)};
}

std::vector<CheckRecord> check_completeness(const RunConfig&) {
  FockQuadrature q;
  q.nodes = 48;
  const CompletenessResult r = resolution_identity_check(FockSpace(16), q, 4);
  return {record(r.max_deviation, 0.0, kTolCompleteness, r.max_deviation <= kTolCompleteness,
                 {{"max_diag_deviation", r.max_diag_deviation}, {"abs_offdiag_00_10", std::abs(r.offdiag_00_10)}})};
}

std::vector<CheckRecord> check_smeared_orthogonality(const RunConfig& cfg) {
  const FockSpace sp(cfg.fock.cutoff);
  const auto f = [](double t) { return std::exp(-0.5 * t * t); };
  const std::tuple<cplx, double, cplx> cases[] = {
      {{0, 0}, 0.0, {0, 0}}, {{0.5, 0}, 0.3, {0.5, 0}}, {{0.3, 0.2}, -0.4, {-0.2, 0.4}}};
  double worst = 0.0;
  for (const auto& [al, x, alp] : cases) {
    const auto r = smeared_orthogonality_check(al, x, alp, f, Axis::from_radius(6.0, 129), sp);
    worst = std::max(worst, std::abs(r.lhs / r.rhs - 1.0));
  }
  return {record(worst, 0.0, kTolSmearedOrthogonality, worst <= kTolSmearedOrthogonality)};
}

std::vector<CheckRecord> check_overlap(const RunConfig& cfg) {
  const FockSpace sp(cfg.fock.cutoff);
  const cplx al{0.3, -0.2};
  double gap = 0.0, plain = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        const EtaLabel e{-1.0 + 0.5 * i, -1.0 + 0.5 * j};
        const double x = -1.0 + 0.5 * k;
        const FockVector bra = eta_vector(e, sp), ket = ecs_vector(al, x, sp);
        const cplx ref = eta_ecs_closed_form(e, al, x);
        gap = std::max(gap, std::abs(overlap(bra, ket, Summation::LogConformal) - ref));
        plain = std::max(plain, std::abs(overlap(bra, ket, Summation::Truncated) - ref));
      }
    }
  }
  CheckRecord r = record(gap, 0.0, kTolOverlap, gap <= kTolOverlap, {{"plain_partial_sum_gap", plain}});
  r.note = "shell series summed by log-conformal Abel summation";
  return {r};
}

std::vector<CheckRecord> check_operator(const RunConfig& cfg) {
  const FockSpace sp(cfg.fock.operator_cutoff);
  const FockQuadrature q = cfg.fock.quadrature();
  const auto id = build_U_quadrature(TransformPoint::identity(), sp, q);
  const double id_dev =
      id.block_deviation(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(sp.dim()), static_cast<Eigen::Index>(sp.dim())), 3);
  Details d{{"identity_deviation", id_dev}};
  double worst = id_dev;
  const std::tuple<double, double, double> sets[] = {{0.3, 0.0, 1.5}, {0.5, kPi, 0.8}, {0.2, 0.0, 2.0}};
  std::size_t i = 0;
  for (const auto& [mu, theta, a] : sets) {
    const auto sym = symplectic_from_hyperbolic(mu, 0.0, theta);
    const TransformPoint tp{sym, DilationParams::make(a), {}};
    const double dev = build_U_quadrature(tp, sp, q).block_deviation(build_U_normal_ordered(sym.s(), sym.r(), a, sp).mat, 3);
    d.emplace_back(level_key("deviation_set_", i++), dev);
    worst = std::max(worst, dev);
  }
  return {record(worst, 0.0, kTolOperator, worst <= kTolOperator, d)};
}

std::vector<CheckRecord> check_quantum_classical(const RunConfig& cfg) {
  const FockSpace sp(6);
  const Grid3D grid{Axis::from_radius(6.0, 48), Axis::from_radius(6.0, 48), Axis::from_radius(8.0, 64)};
  QuadratureSpec q;
  q.r_alpha = grid.alpha1.radius();
  q.r_x = grid.x.radius();
  const FockQuadrature fq = cfg.fock.quadrature();

  auto classical = [&](const FockVector& psi, const FockVector& g, const TransformPoint& tp) {
    const SampledField gf = SampledField::tabulate(grid, [&](cplx a, double x) { return fock_wavefunction(g, a, x, false); });
    const MotherWavelet w("fock-state", [psi](cplx a, double x) { return fock_wavefunction(psi, a, x, false); });
    return sdwt_forward(gf, w, tp, q).value;
  };

  Details d;
  double worst = 0.0;
  // Trivial fixtures at the identity point.
  const FockVector vac = FockVector::basis(sp, 0, 0), one = FockVector::basis(sp, 1, 0);
  {
    const cplx qu = quantum_sdwt(vac, vac, TransformPoint::identity(), sp, fq);
    const cplx cl = classical(vac, vac, TransformPoint::identity());
    const double e = std::max(std::abs(qu - 1.0), std::abs(cl - 1.0));
    d.emplace_back("vacuum_identity_abs_err", e);
    worst = std::max(worst, e);
  }
  {
    const cplx qu = quantum_sdwt(vac, one, TransformPoint::identity(), sp, fq);
    const cplx cl = classical(vac, one, TransformPoint::identity());
    const double e = std::max(std::abs(qu), std::abs(cl));
    d.emplace_back("orthogonal_identity_abs", e);
    worst = std::max(worst, e);
  }
  // Random low-excitation pairs (n1 + n2 <= 2).
  Rng rng(cfg.seed, "A11");
  auto draw = [&] {
    FockVector v = FockVector::zeros(sp);
    for (std::size_t n1 = 0; n1 <= 2; ++n1) {
      for (std::size_t n2 = 0; n1 + n2 <= 2; ++n2) v.at(n1, n2) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    }
    v.amp /= v.norm();
    return v;
  };
  const std::tuple<double, double, double, double, cplx, double> tps[] = {
      {0.2, 0.0, 0.0, 1.25, {0, 0}, 0.0}, {0.2, 0.7, 0.3, 1.25, {0.3, -0.2}, 0.4}, {0.2, 0.0, kPi, 1.25, {-0.1, 0.1}, -0.3}};
  std::size_t i = 0;
  for (const auto& [mu, phi, theta, a, kappa, b] : tps) {
    const FockVector psi = draw(), g = draw();
    const TransformPoint tp{symplectic_from_hyperbolic(mu, phi, theta), DilationParams::make(a, b), {kappa}};
    const cplx qu = quantum_sdwt(psi, g, tp, sp, fq);
    const cplx cl = classical(psi, g, tp);
    const double e = std::abs(cl - qu) / std::abs(qu);
    d.emplace_back(level_key("rel_err_pair_", i++), e);
    worst = std::max(worst, e);
  }
  return {record(worst, 0.0, kTolQuantumClassical, worst <= kTolQuantumClassical, d)};
}

// ------------------------------------------------------------------- kernel

std::vector<CheckRecord> check_abcd(const RunConfig& cfg) {
  Rng rng(cfg.seed, "A12");
  double sr_err = 0.0, det_err = 0.0, abcd_err = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto sym = symplectic_from_hyperbolic(rng.uniform(0, 2), rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi));
    const ABCDMatrix m = abcd_from_sr(sym);
    det_err = std::max(det_err, std::abs(m.det() - 1.0));
    const auto back = sr_from_abcd(m);
    sr_err = std::max({sr_err, std::abs(back.s() - sym.s()), std::abs(back.r() - sym.r())});

    // Random unimodular matrix: A, B, C free with A away from zero.
    const double A = rng.uniform(0.3, 2.0) * (rng.coin(0.5) ? -1.0 : 1.0);
    const double B = rng.uniform(-2, 2), C = rng.uniform(-2, 2);
    const ABCDMatrix u{A, B, C, (1.0 + B * C) / A};
    if (std::abs(u.det() - 1.0) > kUnimodularTolerance) continue;
    const ABCDMatrix u2 = abcd_from_sr(sr_from_abcd(u));
    abcd_err = std::max({abcd_err, std::abs(u2.A - u.A), std::abs(u2.B - u.B), std::abs(u2.C - u.C), std::abs(u2.D - u.D)});
  }
  const double worst = std::max({sr_err, det_err, abcd_err});
  return {record(worst, 0.0, kTolAbcd, worst <= kTolAbcd,
                 {{"sr_round_trip", sr_err}, {"det_minus_one", det_err}, {"abcd_round_trip", abcd_err}})};
}

std::vector<CheckRecord> check_kernel_identity(const RunConfig& cfg) {
  Rng rng(cfg.seed, "A13");
  double worst = 0.0;
  std::size_t n = 0;
  while (n < 100) {
    const auto sym = symplectic_from_hyperbolic(rng.uniform(0.1, 1.5), rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi));
    const double a = rng.uniform(0.5, 2.0);
    const double e1 = rng.uniform(-2, 2), e1p = rng.uniform(-2, 2);
    const ABCDMatrix m = abcd_from_sr(sym);
    // Near-lens points (B -> 0) make both forms singular.
    if (std::abs(m.B) < 0.05) continue;
    const cplx k = kernel_eval(LensFresnelKernel{m, a}, e1, e1p);
    const cplx e = eq42_matrix_element(sym.s(), sym.r(), a, e1, e1p);
    worst = std::max(worst, std::abs(k - e) / std::abs(e));
    ++n;
  }
  CheckRecord first = record(worst, 0.0, kTolKernelIdentity, worst <= kTolKernelIdentity);
  first.name = "kernel identity at 100 random points";

  const SymplecticParams sym = sr_from_abcd(ABCDMatrix{1.0, 1.5, 0.0, 1.0});
  const SmearedKernelElement el =
      smeared_kernel_element(sym.s(), sym.r(), 1.3, EtaLabel{0.3, 0.2}, -0.2, GaussianProfile{0.0, 1.0}, {});
  const double rel = std::abs(el.fock - el.closed) / std::abs(el.closed);
  CheckRecord second = record(rel, 0.0, kTolSmearedKernel, rel <= kTolSmearedKernel,
                              {{"fock_re", el.fock.real()}, {"fock_im", el.fock.imag()},
                               {"closed_re", el.closed.real()}, {"closed_im", el.closed.imag()}});
  second.name = "Fock-smeared kernel element at N=20";
  return {first, second};
}

std::vector<CheckRecord> check_composition(const RunConfig& cfg) {
  const LensFresnelKernel k1{cfg.kernel.abcd, cfg.kernel.a};
  const LensFresnelKernel k2{{1.0, 0.5, -0.4, 0.8}, 1.0};
  const auto c = kernel_compose_check(k1, k2, [](double t) { return cplx{std::exp(-0.5 * t * t), 0.0}; },
                                      Axis::from_radius(3.0, 64), Axis::from_radius(20.0, 4001));
  const double rel = c.max_modulus_gap / c.max_modulus;
  return {record(rel, 0.0, kTolComposition, rel <= kTolComposition)};
}

// ------------------------------------------------------------------ registry

struct CheckDef {
  std::string id;
  std::string suite;
  std::string name;
  std::string anchor;
  std::function<std::vector<CheckRecord>(const RunConfig&)> run;
};

std::vector<CheckRecord> check_determinism(const RunConfig& cfg);

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs{
      {"A3", "parseval", "Parseval ratio for Gaussian pairs", "Parseval identity", check_parseval},
      {"parseval-orthogonal", "parseval", "Parseval with an odd/even pair", "Parseval identity",
       check_parseval_orthogonal},
      {"A1", "inversion", "exponential signal closed form", "exponential-signal transform", check_exponential},
      {"A2", "inversion", "direct vs Fourier path", "transform in the Fourier domain", check_paths},
      {"A4", "inversion", "round-trip inversion of a Gaussian", "inversion formula", check_round_trip},
      {"A5", "inversion", "grid delta transform", "delta reproducing property", check_delta},
      {"A6", "admissibility", "admissibility normalization", "admissibility condition", check_admissibility},
      {"A7", "fock", "entangled-coherent eigen-relations", "entangled-coherent state eigen-relations", check_eigen},
      {"A8", "fock", "resolution of the identity", "entangled-coherent completeness", check_completeness},
      {"fock-smeared-orthogonality", "fock", "smeared delta orthogonality", "entangled-coherent orthogonality",
       check_smeared_orthogonality},
      {"A9", "fock", "EPR / entangled-coherent overlap", "EPR overlap closed form", check_overlap},
      {"A10", "fock", "quadrature vs normal-ordered operator", "normal-ordered squeezing operator", check_operator},
      {"A11", "fock", "quantum vs classical transform", "quantum matrix-element form", check_quantum_classical},
      {"A12", "kernel", "ABCD round trip and unimodularity", "ABCD parametrization", check_abcd},
      {"A13", "kernel", "lens-Fresnel kernel identity", "lens-Fresnel kernel", check_kernel_identity},
      {"kernel-composition", "kernel", "Fresnel factor composition", "lens-Fresnel kernel", check_composition},
      {"A14", "", "reports identical across thread counts", "deterministic reductions", check_determinism},
  };
  return defs;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& d : registry()) {
    if (d.id == id) return d;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown check '" + id + "'");
}

std::vector<CheckRecord> check_determinism(const RunConfig& cfg) {
  const std::size_t saved = thread_count();
  std::vector<std::string> reports;
  Details d;
  bool same = true;
  for (std::size_t t : kDeterminismThreads) {
    set_thread_count(t);
    std::string text;
    for (const auto& s : kDeterminismSuites) text += run_suite(s, cfg).to_json();
    if (!reports.empty() && text != reports.front()) same = false;
    d.emplace_back(level_key("bytes_threads_", t), static_cast<double>(text.size()));
    reports.push_back(std::move(text));
  }
  set_thread_count(saved);
  return {record(same ? 0.0 : 1.0, 0.0, 0.0, same, d)};
}

}  // namespace


const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"parseval", "inversion", "admissibility", "fock", "kernel", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<std::string> suite_checks(const std::string& suite) {
  if (!is_suite(suite)) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  std::vector<std::string> ids;
  for (const auto& s : suite_names()) {
    if (s == "all" || (suite != "all" && s != suite)) continue;
    for (const auto& d : registry()) {
      if (d.suite == s) ids.push_back(d.id);
    }
  }
  return ids;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

std::vector<CheckRecord> run_check(const std::string& id, const RunConfig& config) {
  const CheckDef& def = find_check(id);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  try {
    out = def.run(config);
  } catch (const Error& e) {
    CheckRecord r = record(NAN, 0.0, 0.0, false);
    r.note = std::string(to_string(e.code())) + ": " + e.what();
    out = {r};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (auto& r : out) {
    r.id = def.id;
    if (r.name.empty()) r.name = def.name;
    r.anchor = def.anchor;
  }
  out.front().runtime_s = elapsed;
  return out;
}

VerificationReport run_suite(const std::string& suite, const RunConfig& config) {
  VerificationReport rep;
  rep.suite = suite;
  rep.seed = config.seed;
  rep.config_json = config.to_json();
  for (const auto& id : suite_checks(suite)) {
    auto recs = run_check(id, config);
    for (auto& r : recs) rep.checks.push_back(std::move(r));
  }
  return rep;
}

}  // namespace sdwt
