#include "sdwt/wavelet.hpp"

#include <cmath>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"
#include "sdwt/quadrature.hpp"

namespace sdwt {

MotherWavelet::MotherWavelet(std::string name, EvalFn eval, SpectrumFn closed_form,
                             double decay_radius, double width)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      closed_form_(std::move(closed_form)),
      decay_radius_(decay_radius),
      width_(width) {
  if (!eval_) throw Error(ErrorCode::InvalidArgument, "wavelet needs an evaluation function");
  if (!(decay_radius_ > 0.0) || !(width_ > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "wavelet decay radius and width must be positive");
  }
}

cplx MotherWavelet::spectrum(cplx xi, double q) const {
  if (closed_form_) return scale_ * closed_form_(xi, q);
  return spectrum_quadrature(xi, q);
}

cplx MotherWavelet::spectrum_quadrature(cplx xi, double q, std::size_t nodes) const {
  if (nodes < 5 || nodes % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "spectrum quadrature needs an odd node count >= 5");
  }
  const double R = decay_radius_;
  const double h = 2.0 * R / static_cast<double>(nodes - 1);
  std::vector<double> t(nodes), wt(nodes), wc(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    t[i] = -R + h * static_cast<double>(i);
    const bool end = i == 0 || i + 1 == nodes;
    wt[i] = end ? 0.5 * h : h;
    // Weights of the half-resolution rule on the even-indexed nodes.
    wc[i] = (i % 2 != 0) ? 0.0 : (end ? h : 2.0 * h);
  }
  std::vector<cplx> xphase(nodes);
  for (std::size_t k = 0; k < nodes; ++k) xphase[k] = std::polar(1.0, q * t[k]);

  struct Pair {
    cplx fine, coarse;
    Pair& operator+=(const Pair& o) {
      fine += o.fine;
      coarse += o.coarse;
      return *this;
    }
  };
  const Pair total = chunked_reduce(nodes, 1, Pair{}, [&](Pair& acc, std::size_t i) {
    for (std::size_t j = 0; j < nodes; ++j) {
      const cplx w{t[i], t[j]};
      // w xi - w* xi* = 2 i Im(w xi)
      const cplx wphase = std::polar(1.0, 2.0 * std::imag(w * xi));
      cplx row_f{}, row_c{};
      for (std::size_t k = 0; k < nodes; ++k) {
        const cplx v = eval_(w, t[k]) * wphase * xphase[k];
        row_f += wt[k] * v;
        row_c += wc[k] * v;
      }
      acc.fine += wt[i] * wt[j] * row_f;
      acc.coarse += wc[i] * wc[j] * row_c;
    }
  });
  const double norm = 1.0 / (std::sqrt(kPi) * 2.0 * kPi);
  const cplx fine = total.fine * norm * scale_;
  const cplx coarse = total.coarse * norm * scale_;
  const double err = std::abs(fine - coarse);
  if (err > 1e-6) {
    throw Error(ErrorCode::QuadratureDivergence,
                "spectrum quadrature estimate " + std::to_string(err) + " exceeds 1e-6", err);
  }
  return fine;
}

MotherWavelet MotherWavelet::scaled(double factor) const {
  MotherWavelet copy = *this;
  copy.scale_ *= factor;
  return copy;
}

MotherWavelet default_wavelet() {
  auto eval = [](cplx w, double xp) {
    return w * std::exp(-0.5 * std::norm(w)) * xp * std::exp(-0.5 * xp * xp);
  };
  auto spectrum = [](cplx xi, double q) {
    return cplx(0.0, -2.0 * std::sqrt(2.0)) * std::conj(xi) * q *
           std::exp(-2.0 * std::norm(xi) - 0.5 * q * q);
  };
  return MotherWavelet("gauss-hermite-default", eval, spectrum, 6.0, 1.0);
}

MotherWavelet make_wavelet(const std::string& name, double scale) {
  if (name == "gauss-hermite-default") return default_wavelet().scaled(scale);
  throw Error(ErrorCode::InvalidArgument, "unknown wavelet '" + name + "'");
}

cplx family_prefactor(const TransformPoint& tp) {
  return std::sqrt(std::conj(tp.sym.s())) / std::sqrt(std::abs(tp.dil.a()));
}

cplx eval_family(const MotherWavelet& psi, const TransformPoint& tp, cplx alpha, double x) {
  const cplx d = alpha - tp.tr.kappa;
  const cplx w = tp.sym.s() * d - tp.sym.r() * std::conj(d);
  return family_prefactor(tp) * psi.eval(w, (x - tp.dil.b()) / tp.dil.a());
}

cplx spectrum_argument(const SymplecticParams& sym, cplx beta) {
  return std::conj(sym.s()) * std::conj(beta) - std::conj(sym.r()) * beta;
}

namespace {

struct AdmissibilitySums {
  double value = 0.0;
  double mu_edge = 0.0;  // integrand at mu = mu_max, integrated over phi and a
  double a_edge = 0.0;   // max of the integrand at the two |a| cutoffs
};

AdmissibilitySums admissibility_sums(const MotherWavelet& psi, cplx beta, double p,
                                     const AdmissibilityOptions& o, std::size_t n_mu,
                                     std::size_t n_phi, std::size_t n_a) {
  const Rule1D mu_rule = gauss_legendre(n_mu, 0.0, o.mu_max);
  const Rule1D phi_rule = periodic(n_phi, 2.0 * kPi);
  const Rule1D u_rule = gauss_legendre(n_a, std::log(o.a_min), std::log(o.a_max));

  // |Phi|^2 integrated over phi and log|a| at fixed mu (both signs of a).
  auto mu_slice = [&](double mu, double* u_lo_edge, double* u_hi_edge) {
    double slice = 0.0, lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < phi_rule.size(); ++k) {
      const SymplecticParams sym = symplectic_from_hyperbolic(mu, phi_rule.nodes[k], o.theta);
      const cplx xi = spectrum_argument(sym, beta);
      double acc = 0.0;
      for (std::size_t l = 0; l < u_rule.size(); ++l) {
        const double a = std::exp(u_rule.nodes[l]);
        double v = std::norm(psi.spectrum(xi, a * p));
        if (o.negative_a) v += std::norm(psi.spectrum(xi, -a * p));
        acc += u_rule.weights[l] * v;
      }
      slice += phi_rule.weights[k] * acc;
      if (u_lo_edge != nullptr) {
        double vl = std::norm(psi.spectrum(xi, o.a_min * p));
        double vh = std::norm(psi.spectrum(xi, o.a_max * p));
        if (o.negative_a) {
          vl += std::norm(psi.spectrum(xi, -o.a_min * p));
          vh += std::norm(psi.spectrum(xi, -o.a_max * p));
        }
        lo += phi_rule.weights[k] * vl;
        hi += phi_rule.weights[k] * vh;
      }
    }
    if (u_lo_edge != nullptr) {
      *u_lo_edge = lo;
      *u_hi_edge = hi;
    }
    return slice;
  };

  struct Acc {
    double value = 0.0, lo = 0.0, hi = 0.0;
    Acc& operator+=(const Acc& o2) {
      value += o2.value;
      lo += o2.lo;
      hi += o2.hi;
      return *this;
    }
  };
  const Acc acc = chunked_reduce(mu_rule.size(), 1, Acc{}, [&](Acc& a, std::size_t i) {
    const double mu = mu_rule.nodes[i];
    double lo = 0.0, hi = 0.0;
    const double slice = mu_slice(mu, &lo, &hi);
    const double jac = std::sinh(mu) * mu_rule.weights[i];
    a.value += jac * slice;
    a.lo += jac * lo;
    a.hi += jac * hi;
  });

  AdmissibilitySums out;
  out.value = acc.value;
  out.mu_edge = std::sinh(o.mu_max) * mu_slice(o.mu_max, nullptr, nullptr);
  out.a_edge = std::max(acc.lo, acc.hi);
  return out;
}

}  // namespace

AdmissibilityResult admissibility_integral(const MotherWavelet& psi, cplx beta, double p,
                                           const AdmissibilityOptions& o) {
  if (!(o.mu_max > 0.0) || !(o.a_min > 0.0) || !(o.a_max > o.a_min)) {
    throw Error(ErrorCode::InvalidArgument, "admissibility cutoffs must satisfy 0 < a_min < a_max, mu_max > 0");
  }
  if (o.mu_nodes < 2 || o.phi_nodes < 2 || o.a_nodes < 2) {
    throw Error(ErrorCode::InvalidArgument, "admissibility rules need at least two nodes per axis");
  }
  const AdmissibilitySums fine =
      admissibility_sums(psi, beta, p, o, o.mu_nodes, o.phi_nodes, o.a_nodes);
  const AdmissibilitySums coarse =
      admissibility_sums(psi, beta, p, o, o.mu_nodes / 2, o.phi_nodes / 2, o.a_nodes / 2);

  AdmissibilityResult r;
  r.value = fine.value;
  r.discretization_error = std::abs(fine.value - coarse.value);
  if (fine.value > 0.0) {
    r.mu_boundary_ratio = fine.mu_edge / fine.value;
    r.a_boundary_ratio = fine.a_edge / fine.value;
  }
  if (o.require_converged) {
    const double worst = std::max(r.mu_boundary_ratio, r.a_boundary_ratio);
    if (worst > kBoundaryRatioLimit) {
      throw Error(ErrorCode::CutoffTooSmall,
                  "admissibility integrand at the cutoff is " + std::to_string(worst) +
                      " of the accumulated value",
                  worst);
    }
  }
  return r;
}

MotherWavelet normalize_admissible(const MotherWavelet& psi, cplx beta, double p,
                                   const AdmissibilityOptions& opts) {
  const double c = admissibility_integral(psi, beta, p, opts).value;
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::ZeroAdmissibility, "admissibility integral is not positive", c);
  }
  return psi.scaled(1.0 / std::sqrt(c));
}

Wavelet1D mexican_hat() {
  return Wavelet1D{"mexican-hat", [](double x) {
                     return cplx((1.0 - x * x) * std::exp(-0.5 * x * x), 0.0);
                   }};
}

ComplexWavelet default_complex_wavelet() {
  return [](cplx z) { return z * std::exp(-0.5 * std::norm(z)); };
}

}  // namespace sdwt
