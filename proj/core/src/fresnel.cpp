#include "sdwt/fresnel.hpp"

#include <algorithm>
#include <cmath>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"
#include "sdwt/quadrature.hpp"

namespace sdwt {
namespace {

// Fresnel factor (2 i pi B)^{-1/2} exp[(i/2B)(A t'^2 - 2 t t' + D t^2)].
cplx fresnel_factor(const ABCDMatrix& m, double t, double tp) {
  const cplx root = std::sqrt(kPi) * std::sqrt(cplx{0.0, 2.0 * m.B});
  const double phase = (m.A * tp * tp - 2.0 * t * tp + m.D * t * t) / (2.0 * m.B);
  return std::polar(1.0, phase) / root;
}

void require_nonzero_b(const ABCDMatrix& m) {
  if (m.B == 0.0) throw Error(ErrorCode::ZeroB, "B = 0: pure lens, no Fresnel factor", 0.0);
}

// Trapezoid action of a Fresnel factor: out(t) = \int L(t, t') in(t') dt'.
std::vector<cplx> fresnel_apply(const ABCDMatrix& m, const std::vector<cplx>& in, const Axis& in_axis,
                                const Axis& out_axis) {
  std::vector<cplx> out(out_axis.count);
  parallel_for(out_axis.count, [&](std::size_t i) {
    std::vector<cplx> terms(in_axis.count);
    const double t = out_axis.node(i);
    for (std::size_t j = 0; j < in_axis.count; ++j) {
      double w = in_axis.step;
      if (j == 0 || j + 1 == in_axis.count) w *= 0.5;
      terms[j] = w * fresnel_factor(m, t, in_axis.node(j)) * in[j];
    }
    out[i] = pairwise_sum(terms);
  });
  return out;
}

}  // namespace

ABCDMatrix abcd_from_sr(cplx s, cplx r) {
  validate_symplectic(s, r);
  const cplx sum = s + r, diff = s - r;
  return ABCDMatrix{diff.real(), -sum.imag(), diff.imag(), sum.real()};
}

ABCDMatrix abcd_from_sr(const SymplecticParams& sym) { return abcd_from_sr(sym.s(), sym.r()); }

SymplecticParams sr_from_abcd(const ABCDMatrix& m) {
  const double gap = m.det() - 1.0;
  if (!std::isfinite(gap) || std::abs(gap) > kUnimodularTolerance) {
    throw Error(ErrorCode::NotUnimodular, "AD - BC differs from 1", gap);
  }
  const cplx s = 0.5 * cplx{m.A + m.D, -(m.B - m.C)};
  const cplx r = -0.5 * cplx{m.A - m.D, m.B + m.C};
  return validate_symplectic(s, r);
}

void LensFresnelKernel::validate() const {
  const double gap = abcd.det() - 1.0;
  if (!std::isfinite(gap) || std::abs(gap) > kUnimodularTolerance) {
    throw Error(ErrorCode::NotUnimodular, "kernel matrix is not unimodular", gap);
  }
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "lens scale a must be positive", a);
}

cplx kernel_eval(const LensFresnelKernel& k, double eta1, double eta1p) {
  k.validate();
  require_nonzero_b(k.abcd);
  return (kPi / std::sqrt(k.a)) * fresnel_factor(k.abcd, eta1, eta1p);
}

cplx eq42_matrix_element(cplx s, cplx r, double a, double eta1, double eta1p) {
  validate_symplectic(s, r);
  if (!(a > 0.0)) throw Error(ErrorCode::NonPositiveDilation, "a must be positive", a);
  const cplx den{0.0, -2.0 * (s + r).imag()};
  if (den == cplx{}) throw Error(ErrorCode::DegenerateDenominator, "s + r is real", 0.0);
  const cplx expo = -0.5 * (eta1 * eta1 + eta1p * eta1p) +
                    ((std::conj(r) - s) * eta1p * eta1p - (s + r) * eta1 * eta1 + 2.0 * eta1 * eta1p) / den;
  return std::sqrt(kPi / a) / std::sqrt(den) * std::exp(expo);
}

LensFresnelKernel kernel_compose(const LensFresnelKernel& k1, const LensFresnelKernel& k2) {
  k1.validate();
  k2.validate();
  LensFresnelKernel out;
  out.abcd = k1.abcd * k2.abcd;
  out.a = k1.a * k2.a;
  out.branch = k1.branch;
  // Products of unimodular matrices are unimodular up to rounding.
  const double gap = out.abcd.det() - 1.0;
  if (std::abs(gap) > 1e-10) throw Error(ErrorCode::NotUnimodular, "composition lost unimodularity", gap);
  return out;
}

EtaField kernel_apply(const LensFresnelKernel& k, const EtaField& f) {
  k.validate();
  require_nonzero_b(k.abcd);
  f.eta1.validate();
  f.eta2.validate();
  if (f.values.size() != f.eta1.count * f.eta2.count) throw Error(ErrorCode::InvalidGrid, "eta field size mismatch");

  // Column of f at eta2/a by linear interpolation.
  const std::size_t n1 = f.eta1.count, n2 = f.eta2.count;
  std::vector<cplx> scaled(n1 * n2);
  for (std::size_t j = 0; j < n2; ++j) {
    const double u = (f.eta2.node(j) / k.a - f.eta2.lo()) / f.eta2.step;
    if (u < 0.0 || u > static_cast<double>(n2 - 1)) continue;
    const auto lo = std::min(static_cast<std::size_t>(u), n2 - 2);
    const double t = u - static_cast<double>(lo);
    for (std::size_t i = 0; i < n1; ++i) scaled[i * n2 + j] = (1.0 - t) * f.at(i, lo) + t * f.at(i, lo + 1);
  }
  EtaField out{f.eta1, f.eta2, std::vector<cplx>(n1 * n2)};
  const double w = 1.0 / std::sqrt(k.a);
  for (std::size_t j = 0; j < n2; ++j) {
    std::vector<cplx> col(n1);
    for (std::size_t i = 0; i < n1; ++i) col[i] = scaled[i * n2 + j];
    const std::vector<cplx> res = fresnel_apply(k.abcd, col, f.eta1, f.eta1);
    for (std::size_t i = 0; i < n1; ++i) out.values[i * n2 + j] = w * res[i];
  }
  return out;
}

CompositionCheck kernel_compose_check(const LensFresnelKernel& k1, const LensFresnelKernel& k2,
                                      const std::function<cplx(double)>& f, const Axis& out,
                                      const Axis& inner) {
  const LensFresnelKernel k12 = kernel_compose(k1, k2);
  require_nonzero_b(k1.abcd);
  require_nonzero_b(k2.abcd);
  require_nonzero_b(k12.abcd);
  std::vector<cplx> f_in(inner.count);
  for (std::size_t j = 0; j < inner.count; ++j) f_in[j] = f(inner.node(j));
  const std::vector<cplx> mid = fresnel_apply(k2.abcd, f_in, inner, inner);
  const std::vector<cplx> two_step = fresnel_apply(k1.abcd, mid, inner, out);
  const std::vector<cplx> direct = fresnel_apply(k12.abcd, f_in, inner, out);
  CompositionCheck res;
  for (std::size_t i = 0; i < out.count; ++i) {
    res.max_modulus_gap = std::max(res.max_modulus_gap, std::abs(std::abs(two_step[i]) - std::abs(direct[i])));
    res.max_modulus = std::max(res.max_modulus, std::abs(direct[i]));
  }
  return res;
}

SmearedKernelElement smeared_kernel_element(cplx s, cplx r, double a, const EtaLabel& eta, double eta1p,
                                            const GaussianProfile& f, const SmearedKernelOptions& opt) {
  validate_symplectic(s, r);
  if (!(a > 0.0)) throw Error(ErrorCode::NonPositiveDilation, "a must be positive", a);
  const FockSpace space(opt.cutoff);

  // |F> = \int d eta2' f(eta2') |eta1' + i eta2'>.
  const Rule1D r2 = trapezoid(opt.eta2_nodes, f.center - 7.0 * f.width, f.center + 7.0 * f.width);
  FockVector smeared = FockVector::zeros(space);
  for (std::size_t j = 0; j < r2.size(); ++j) {
    smeared.amp += (r2.weights[j] * f(r2.nodes[j])) * eta_vector(EtaLabel{eta1p, r2.nodes[j]}, space, false).amp;
  }
  const FockVector bra = eta_vector(eta, space, false);

  const Rule1D ra = trapezoid(opt.alpha_nodes, opt.alpha_radius);
  const Rule1D rx = trapezoid(opt.x_nodes, opt.x_radius);
  const std::size_t na = ra.size(), nx = rx.size();
  std::vector<cplx> partial(na);
  parallel_for(na, [&](std::size_t i1) {
    std::vector<cplx> terms(na * nx);
    for (std::size_t i2 = 0; i2 < na; ++i2) {
      const cplx al{ra.nodes[i1], ra.nodes[i2]};
      const cplx image = s * al - r * std::conj(al);
      for (std::size_t ix = 0; ix < nx; ++ix) {
        const double xv = rx.nodes[ix];
        const cplx left = overlap(bra, ecs_vector(image, xv / a, space, false), Summation::LogConformal);
        const cplx right = overlap(ecs_vector(al, xv, space, false), smeared, Summation::LogConformal);
        terms[i2 * nx + ix] = ra.weights[i1] * ra.weights[i2] * rx.weights[ix] * left * right;
      }
    }
    partial[i1] = pairwise_sum(terms);
  });
  SmearedKernelElement out;
  out.fock = std::sqrt(s / a) / (std::sqrt(kPi) * 2.0 * kPi) * pairwise_sum(partial);
  out.closed = eq42_matrix_element(s, r, a, eta.eta1, eta1p) * f(eta.eta2 / a);
  return out;
}

}  // namespace sdwt
