#include "sdwt/fock.hpp"

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"
#include "sdwt/quadrature.hpp"

namespace sdwt {
namespace {

// z^k with 0^0 = 1.
cplx ipow(cplx z, std::size_t k) {
  cplx out{1.0, 0.0};
  for (std::size_t i = 0; i < k; ++i) out *= z;
  return out;
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// exp(X) for a nilpotent (strictly raising or lowering) X.
Eigen::MatrixXcd nilpotent_exp(const Eigen::MatrixXcd& x, std::size_t max_terms) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(x.rows(), x.cols());
  Eigen::MatrixXcd term = out;
  for (std::size_t k = 1; k <= max_terms; ++k) {
    term = (term * x) / static_cast<double>(k);
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
    out += term;
  }
  return out;
}

Rule1D axis_rule(const FockQuadrature& q, double sigma) {
  if (q.kind == FockQuadrature::Kind::Trapezoid) return trapezoid(q.nodes, q.radius);
  if (sigma > 0.0) return gauss_hermite(q.nodes, sigma);
  return gauss_hermite_to_radius(q.nodes, q.radius);
}

// Coherent test states of the weak eigen-residual.
const std::array<std::array<cplx, 2>, 9>& residual_panel() {
  static const std::array<std::array<cplx, 2>, 9> panel = {{
      {cplx{0.0, 0.0}, cplx{0.0, 0.0}},
      {cplx{0.5, 0.0}, cplx{0.0, 0.0}},
      {cplx{0.0, 0.0}, cplx{0.0, 0.5}},
      {cplx{-0.5, 0.5}, cplx{0.5, 0.0}},
      {cplx{1.0, 0.0}, cplx{-1.0, 0.0}},
      {cplx{0.0, 1.0}, cplx{0.0, 1.0}},
      {cplx{0.7, -0.7}, cplx{-0.3, 0.4}},
      {cplx{-1.0, 0.0}, cplx{0.0, -1.0}},
      {cplx{0.3, 0.9}, cplx{0.8, -0.5}},
  }};
  return panel;
}

double weak_residual(const Eigen::VectorXcd& residual, const FockSpace& space) {
  double worst = 0.0;
  for (const auto& z : residual_panel()) {
    const FockVector test = coherent_vector(z[0], z[1], space);
    worst = std::max(worst, std::abs(test.amp.dot(residual)));
  }
  return worst;
}

}  // namespace

FockSpace::FockSpace(std::size_t cutoff) : n_(cutoff) {
  if (cutoff < 1) throw Error(ErrorCode::InvalidArgument, "Fock cutoff must be at least 1");
}

FockVector::FockVector(FockSpace sp, Eigen::VectorXcd a) : space(sp), amp(std::move(a)) {
  if (static_cast<std::size_t>(amp.size()) != space.dim()) {
    throw Error(ErrorCode::InvalidArgument, "Fock vector length does not match the space");
  }
  if (!amp.allFinite()) throw Error(ErrorCode::InvalidArgument, "Fock vector has non-finite entries");
}

FockVector FockVector::zeros(const FockSpace& sp) { return FockVector(sp, Eigen::VectorXcd::Zero(sp.dim())); }

FockVector FockVector::basis(const FockSpace& sp, std::size_t n1, std::size_t n2) {
  if (n1 > sp.cutoff() || n2 > sp.cutoff()) throw Error(ErrorCode::InvalidArgument, "basis state outside the space");
  FockVector v = zeros(sp);
  v.at(n1, n2) = 1.0;
  return v;
}

FockOperator::FockOperator(FockSpace sp, Eigen::MatrixXcd m) : space(sp), mat(std::move(m)) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  if (mat.rows() != d || mat.cols() != d) throw Error(ErrorCode::InvalidArgument, "operator shape does not match the space");
}

FockOperator FockOperator::identity(const FockSpace& sp) {
  const auto d = static_cast<Eigen::Index>(sp.dim());
  return FockOperator(sp, Eigen::MatrixXcd::Identity(d, d));
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (!(v.space == space)) throw Error(ErrorCode::InvalidArgument, "vector and operator live in different spaces");
  return FockVector(space, mat * v.amp);
}

double FockOperator::block_deviation(const Eigen::MatrixXcd& other, std::size_t max_total) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (space.n1(i) + space.n2(i) > max_total) continue;
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (space.n1(j) + space.n2(j) > max_total) continue;
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      worst = std::max(worst, std::abs(mat(ii, jj) - other(ii, jj)));
    }
  }
  return worst;
}

LadderOps ladder_ops(const FockSpace& space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(d, d), a2 = Eigen::MatrixXcd::Zero(d, d);
  const std::size_t n = space.cutoff();
  for (std::size_t n1 = 0; n1 <= n; ++n1) {
    for (std::size_t n2 = 0; n2 <= n; ++n2) {
      const auto col = static_cast<Eigen::Index>(space.index(n1, n2));
      if (n1 > 0) a1(static_cast<Eigen::Index>(space.index(n1 - 1, n2)), col) = std::sqrt(static_cast<double>(n1));
      if (n2 > 0) a2(static_cast<Eigen::Index>(space.index(n1, n2 - 1)), col) = std::sqrt(static_cast<double>(n2));
    }
  }
  Eigen::MatrixXcd a1d = a1.adjoint(), a2d = a2.adjoint();
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd x1 = r * (a1 + a1d), x2 = r * (a2 + a2d);
  return LadderOps{FockOperator(space, a1), FockOperator(space, a2),   FockOperator(space, a1d),
                   FockOperator(space, a2d), FockOperator(space, x1), FockOperator(space, x2)};
}

double poisson_tail(double lambda, std::size_t cutoff) {
  if (lambda == 0.0) return 0.0;
  return gsl_sf_gamma_inc_P(static_cast<double>(cutoff) + 1.0, lambda);
}

// The cutoff is per mode, so the two per-mode tails are added.
double ecs_tail_estimate(cplx alpha, double x, std::size_t cutoff) {
  return poisson_tail(std::norm(x + 0.5 * alpha), cutoff) + poisson_tail(std::norm(x - 0.5 * alpha), cutoff);
}

double eta_tail_estimate(const EtaLabel& eta, std::size_t cutoff) {
  return 2.0 * poisson_tail(std::norm(eta.value()), cutoff);
}

FockVector ecs_vector(cplx alpha, double x, const FockSpace& space, bool check_truncation) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) || !std::isfinite(x)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite state label");
  }
  if (check_truncation) {
    const double tail = ecs_tail_estimate(alpha, x, space.cutoff());
    if (tail > kTruncationTailLimit) {
      throw Error(ErrorCode::TruncationOverflow, "state label too large for the Fock cutoff", tail);
    }
  }
  const std::size_t n = space.cutoff();
  const cplx A = x + 0.5 * alpha;
  const cplx B = x - 0.5 * alpha;
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  auto at = [&](std::size_t i, std::size_t j) -> cplx& { return d[static_cast<Eigen::Index>(space.index(i, j))]; };
  at(0, 0) = std::exp(-0.5 * x * x - 0.25 * std::norm(alpha));
  // Column n2 = 0 by raising n1, then every row by raising n2.
  for (std::size_t i = 0; i < n; ++i) {
    cplx v = A * at(i, 0);
    if (i > 0) v -= 0.5 * std::sqrt(static_cast<double>(i)) * at(i - 1, 0);
    at(i + 1, 0) = v / std::sqrt(static_cast<double>(i + 1));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx v = B * at(i, j);
      if (j > 0) v -= 0.5 * std::sqrt(static_cast<double>(j)) * at(i, j - 1);
      if (i > 0) v -= 0.5 * std::sqrt(static_cast<double>(i)) * at(i - 1, j);
      at(i, j + 1) = v / std::sqrt(static_cast<double>(j + 1));
    }
  }
  return FockVector(space, std::move(d));
}

FockVector eta_vector(const EtaLabel& eta, const FockSpace& space, bool check_truncation) {
  if (!std::isfinite(eta.eta1) || !std::isfinite(eta.eta2)) throw Error(ErrorCode::InvalidArgument, "non-finite eta label");
  if (check_truncation) {
    const double tail = eta_tail_estimate(eta, space.cutoff());
    if (tail > kTruncationTailLimit) {
      throw Error(ErrorCode::TruncationOverflow, "eta label too large for the Fock cutoff", tail);
    }
  }
  const std::size_t n = space.cutoff();
  const cplx e = eta.value();
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  auto at = [&](std::size_t i, std::size_t j) -> cplx& { return d[static_cast<Eigen::Index>(space.index(i, j))]; };
  at(0, 0) = std::exp(-0.5 * std::norm(e));
  for (std::size_t i = 0; i < n; ++i) at(i + 1, 0) = e * at(i, 0) / std::sqrt(static_cast<double>(i + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx v = -std::conj(e) * at(i, j);
      if (i > 0) v += std::sqrt(static_cast<double>(i)) * at(i - 1, j);
      at(i, j + 1) = v / std::sqrt(static_cast<double>(j + 1));
    }
  }
  return FockVector(space, std::move(d));
}

FockVector coherent_vector(cplx z1, cplx z2, const FockSpace& space) {
  const std::size_t n = space.cutoff();
  std::vector<cplx> c1(n + 1), c2(n + 1);
  c1[0] = std::exp(-0.5 * std::norm(z1));
  c2[0] = std::exp(-0.5 * std::norm(z2));
  for (std::size_t k = 1; k <= n; ++k) {
    c1[k] = c1[k - 1] * z1 / std::sqrt(static_cast<double>(k));
    c2[k] = c2[k - 1] * z2 / std::sqrt(static_cast<double>(k));
  }
  FockVector v = FockVector::zeros(space);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) v.at(i, j) = c1[i] * c2[j];
  return v;
}

cplx overlap(const FockVector& bra, const FockVector& ket, Summation method) {
  if (!(bra.space == ket.space)) throw Error(ErrorCode::InvalidArgument, "overlap of vectors in different spaces");
  const std::size_t n = bra.space.cutoff();
  std::vector<cplx> shell(n + 1, cplx{});
  for (std::size_t t = 0; t <= n; ++t) {
    for (std::size_t i = 0; i <= t; ++i) shell[t] += std::conj(bra.at(i, t - i)) * ket.at(i, t - i);
  }
  if (method == Summation::Truncated) return pairwise_sum(shell);

  // t = 2w/(1-w^2): [w^k] t^m = 2^m C(m+j-1, j) for k = m + 2j.
  std::vector<cplx> c(n + 1, cplx{});
  for (std::size_t m = 0; m <= n; ++m) {
    const double two_m = std::ldexp(1.0, static_cast<int>(m));
    for (std::size_t k = m; k <= n; k += 2) {
      const std::size_t j = (k - m) / 2;
      const double coef = (m == 0) ? (j == 0 ? 1.0 : 0.0) : two_m * binom(m + j - 1, j);
      c[k] += coef * shell[m];
    }
  }
  const double w = std::sqrt(2.0) - 1.0;
  if (method == Summation::LogConformal && std::abs(c[0]) > 0.0) {
    std::vector<cplx> L(n + 1, cplx{});
    L[0] = std::log(c[0]);
    for (std::size_t k = 1; k <= n; ++k) {
      cplx acc = static_cast<double>(k) * c[k];
      for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * L[j] * c[k - j];
      L[k] = acc / (static_cast<double>(k) * c[0]);
    }
    cplx sum = L[0];
    double wk = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      wk *= w;
      sum += L[k] * wk;
    }
    const cplx out = std::exp(sum);
    // The log series is unreliable when c0 underflows far outside the
    // reach of the cutoff; fall back to the plain conformal sum there.
    if (std::isfinite(out.real()) && std::isfinite(out.imag())) return out;
  }
  cplx sum{};
  double wk = 1.0;
  for (std::size_t k = 0; k <= n; ++k) {
    sum += c[k] * wk;
    wk *= w;
  }
  return sum;
}

cplx eta_ecs_closed_form(const EtaLabel& eta, cplx alpha, double x) {
  return std::exp(-0.25 * (alpha * alpha + std::norm(alpha)) - 0.5 * eta.eta1 * eta.eta1 + eta.eta1 * alpha -
                  cplx{0.0, eta.eta2 * x}) /
         std::sqrt(2.0);
}

cplx fock_wavefunction(const FockVector& state, cplx alpha, double x, bool check_truncation) {
  return overlap(ecs_vector(alpha, x, state.space, check_truncation), state);
}

CompletenessResult resolution_identity_check(const FockSpace& space, const FockQuadrature& quad,
                                             std::size_t block_total) {
  // Default scales match the Gaussian envelopes e^{-|alpha|^2/2} and e^{-x^2}.
  const Rule1D ra = axis_rule(quad, quad.sigma_alpha > 0.0 ? quad.sigma_alpha : std::sqrt(2.0));
  const Rule1D rx = axis_rule(quad, quad.sigma_x > 0.0 ? quad.sigma_x : 1.0);
  if (std::min(ra.max_abs_node(), rx.max_abs_node()) < 5.0) {
    throw Error(ErrorCode::CutoffTooSmall, "completeness quadrature must reach radius 5",
                std::min(ra.max_abs_node(), rx.max_abs_node()));
  }
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (space.n1(i) + space.n2(i) <= block_total) block.push_back(i);
  const auto nb = static_cast<Eigen::Index>(block.size());
  const double norm = 1.0 / (std::sqrt(kPi) * 2.0 * kPi);

  // Low amplitudes do not depend on the cutoff, so a small box suffices.
  const FockSpace small(std::max<std::size_t>(block_total, 1));
  const std::size_t nx = rx.size(), na = ra.size();
  const Eigen::MatrixXcd M = chunked_reduce(
      na, 1, Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(nb, nb)), [&](Eigen::MatrixXcd& acc, std::size_t i1) {
        Eigen::MatrixXcd kets(nb, static_cast<Eigen::Index>(na * nx));
        Eigen::VectorXd w(static_cast<Eigen::Index>(na * nx));
        for (std::size_t i2 = 0; i2 < na; ++i2) {
          for (std::size_t ix = 0; ix < nx; ++ix) {
            const auto col = static_cast<Eigen::Index>(i2 * nx + ix);
            const FockVector v = ecs_vector({ra.nodes[i1], ra.nodes[i2]}, rx.nodes[ix], small, false);
            for (Eigen::Index b = 0; b < nb; ++b) {
              const std::size_t flat = block[static_cast<std::size_t>(b)];
              kets(b, col) = v.at(space.n1(flat), space.n2(flat));
            }
            w[col] = ra.weights[i1] * ra.weights[i2] * rx.weights[ix] * norm;
          }
        }
        acc.noalias() += kets * w.asDiagonal() * kets.adjoint();
      });

  CompletenessResult res;
  res.block_total = block_total;
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) {
      const double dev = std::abs(M(i, j) - (i == j ? 1.0 : 0.0));
      res.max_deviation = std::max(res.max_deviation, dev);
      if (i == j) res.max_diag_deviation = std::max(res.max_diag_deviation, dev);
    }
  }
  // Flat order within the block keeps (0,0) first; locate (1,0).
  for (Eigen::Index j = 0; j < nb; ++j) {
    const std::size_t flat = block[static_cast<std::size_t>(j)];
    if (space.n1(flat) == 1 && space.n2(flat) == 0) res.offdiag_00_10 = M(0, j);
  }
  return res;
}

SmearedOrthogonality smeared_orthogonality_check(cplx alpha, double x, cplx alpha_prime,
                                                 const std::function<double(double)>& f,
                                                 const Axis& x_axis, const FockSpace& space) {
  x_axis.validate();
  const FockVector ket = ecs_vector(alpha, x, space);
  std::vector<cplx> terms(x_axis.count);
  parallel_for(x_axis.count, [&](std::size_t j) {
    const double xp = x_axis.node(j);
    const double fx = f(xp);
    if (fx == 0.0) return;
    double w = x_axis.step;
    if (j == 0 || j + 1 == x_axis.count) w *= 0.5;
    terms[j] = w * fx * overlap(ecs_vector(alpha_prime, xp, space, false), ket);
  });
  SmearedOrthogonality out;
  out.lhs = pairwise_sum(terms);
  out.rhs = std::sqrt(kPi) *
            std::exp(-0.25 * (std::norm(alpha) + std::norm(alpha_prime)) + 0.5 * alpha * std::conj(alpha_prime)) * f(x);
  return out;
}

FockOperator build_U_quadrature(const TransformPoint& tp, const FockSpace& space, const FockQuadrature& quad) {
  const cplx s = tp.sym.s(), r = tp.sym.r(), kappa = tp.tr.kappa;
  const double a = tp.dil.a(), b = tp.dil.b();
  const Rule1D ra = axis_rule(quad, quad.sigma_alpha);
  const Rule1D rx = axis_rule(quad, quad.sigma_x);
  if (std::min(ra.max_abs_node(), rx.max_abs_node()) < 5.0) {
    throw Error(ErrorCode::CutoffTooSmall, "operator quadrature must reach radius 5",
                std::min(ra.max_abs_node(), rx.max_abs_node()));
  }
  const cplx pref = std::sqrt(s / std::abs(a)) / (std::sqrt(kPi) * 2.0 * kPi);
  const auto d = static_cast<Eigen::Index>(space.dim());
  const std::size_t na = ra.size(), nx = rx.size();

  // Amplitudes are exact for every box entry, so no tail check here.
  const Eigen::MatrixXcd U = chunked_reduce(
      na, 1, Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(d, d)), [&](Eigen::MatrixXcd& acc, std::size_t i1) {
        const auto m = static_cast<Eigen::Index>(na * nx);
        Eigen::MatrixXcd kets(d, m), bras(d, m);
        Eigen::VectorXcd w(m);
        for (std::size_t i2 = 0; i2 < na; ++i2) {
          const cplx al{ra.nodes[i1], ra.nodes[i2]};
          const cplx image = s * al - r * std::conj(al);
          for (std::size_t ix = 0; ix < nx; ++ix) {
            const auto col = static_cast<Eigen::Index>(i2 * nx + ix);
            const double xv = rx.nodes[ix];
            kets.col(col) = ecs_vector(image, (xv - b) / a, space, false).amp;
            bras.col(col) = ecs_vector(al + kappa, xv, space, false).amp;
            w[col] = pref * ra.weights[i1] * ra.weights[i2] * rx.weights[ix];
          }
        }
        acc.noalias() += kets * w.asDiagonal() * bras.adjoint();
      });
  return FockOperator(space, U);
}

NormalOrderedGaussian normal_ordered_form(cplx s, cplx r, double a) {
  validate_symplectic(s, r);
  const DilationParams dil = DilationParams::make(a);
  NormalOrderedGaussian g;
  g.sech = dil.sech_lambda();
  g.tanh = dil.tanh_lambda();
  const cplx sc = std::conj(s);
  g.lambda(0, 0) = g.lambda(1, 1) = 0.5 * (g.sech + 1.0 / sc);
  g.lambda(0, 1) = g.lambda(1, 0) = 0.5 * (g.sech - 1.0 / sc);
  g.c_plus = -0.25 * g.tanh;
  g.c_minus = -r / (4.0 * sc);
  g.d_plus = 0.25 * g.tanh;
  g.d_minus = std::conj(r) / (4.0 * sc);
  g.prefactor = std::sqrt(g.sech) / std::sqrt(sc);
  return g;
}

Eigen::MatrixXcd normal_ordered_v(const Eigen::Matrix2cd& lambda, const FockSpace& space) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  const std::size_t n = space.cutoff();
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(d, d);
  std::vector<double> lf(2 * n + 2);
  for (std::size_t k = 0; k < lf.size(); ++k) lf[k] = std::lgamma(static_cast<double>(k) + 1.0);
  for (std::size_t n1 = 0; n1 <= n; ++n1) {
    for (std::size_t n2 = 0; n2 <= n; ++n2) {
      const std::size_t total = n1 + n2;
      const auto col = static_cast<Eigen::Index>(space.index(n1, n2));
      for (std::size_t m1 = 0; m1 <= std::min(total, n); ++m1) {
        const std::size_t m2 = total - m1;
        if (m2 > n) continue;
        cplx sum{};
        for (std::size_t j = 0; j <= std::min(n1, m1); ++j) {
          if (m1 - j > n2) continue;
          const std::size_t k = m1 - j;
          sum += binom(n1, j) * binom(n2, k) * ipow(lambda(0, 0), j) * ipow(lambda(1, 0), n1 - j) *
                 ipow(lambda(0, 1), k) * ipow(lambda(1, 1), n2 - k);
        }
        const double norm = std::exp(0.5 * ((lf[m1] - lf[n1]) + (lf[m2] - lf[n2])));
        V(static_cast<Eigen::Index>(space.index(m1, m2)), col) = sum * norm;
      }
    }
  }
  return V;
}

FockOperator build_U_normal_ordered(cplx s, cplx r, double a, const FockSpace& space) {
  const NormalOrderedGaussian g = normal_ordered_form(s, r, a);
  const LadderOps ops = ladder_ops(space);
  const Eigen::MatrixXcd plus_d = ops.a1d.mat + ops.a2d.mat, minus_d = ops.a1d.mat - ops.a2d.mat;
  const Eigen::MatrixXcd plus = ops.a1.mat + ops.a2.mat, minus = ops.a1.mat - ops.a2.mat;
  const std::size_t terms = 2 * space.cutoff() + 1;
  const Eigen::MatrixXcd Ec = nilpotent_exp(g.c_plus * plus_d * plus_d + g.c_minus * minus_d * minus_d, terms);
  const Eigen::MatrixXcd Ea = nilpotent_exp(g.d_plus * plus * plus + g.d_minus * minus * minus, terms);
  const Eigen::MatrixXcd V = normal_ordered_v(g.lambda, space);
  return FockOperator(space, g.prefactor * (Ec * V * Ea));
}

cplx quantum_sdwt(const FockVector& psi_state, const FockVector& g_state, const TransformPoint& tp,
                  const FockSpace& space, const FockQuadrature& quad) {
  const FockOperator U = build_U_quadrature(tp, space, quad);
  return psi_state.amp.dot(U.mat * g_state.amp);
}

EcsEigenResidual ecs_eigen_residual(cplx alpha, double x, const FockSpace& space) {
  const FockVector v = ecs_vector(alpha, x, space);
  const LadderOps ops = ladder_ops(space);
  const Eigen::VectorXcd ann = (ops.a1.mat - ops.a2.mat) * v.amp - alpha * v.amp;
  const Eigen::VectorXcd coord = 0.5 * (ops.x1.mat + ops.x2.mat) * v.amp - (x / std::sqrt(2.0)) * v.amp;
  return EcsEigenResidual{weak_residual(ann, space), weak_residual(coord, space)};
}

double eta_eigen_residual(const EtaLabel& eta, const FockSpace& space) {
  const FockVector v = eta_vector(eta, space);
  const LadderOps ops = ladder_ops(space);
  const Eigen::VectorXcd res = (ops.a1.mat - ops.a2d.mat) * v.amp - eta.value() * v.amp;
  return weak_residual(res, space);
}

}  // namespace sdwt
