#include "sdwt/transform.hpp"

#include <cmath>
#include <limits>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"

namespace sdwt {
namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kAdjointNorm = 1.0 / (std::sqrt(kPi) * 2.0 * kPi);
const double kFourierNorm = 1.0 / (kPi * std::sqrt(2.0 * kPi));

// Elementwise-summable vector for chunked_reduce.
template <class T>
struct VecSum {
  std::vector<T> v;
  VecSum& operator+=(const VecSum& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
};

// Scale blocks folded per chunk: at least kBlockChunk, and never more than
// kMaxChunks partial vectors. Depends only on the block count.
constexpr std::size_t kBlockChunk = 64;
constexpr std::size_t kMaxChunks = 32;
std::size_t block_chunk(std::size_t blocks) {
  return std::max(kBlockChunk, (blocks + kMaxChunks - 1) / kMaxChunks);
}

// sqrt(s) |a|^{1/2} realized as conj(sqrt(s*)) so that both transform paths
// agree on the branch cut as well.
cplx coefficient_prefactor(const TransformPoint& tp) {
  return std::conj(std::sqrt(std::conj(tp.sym.s()))) * std::sqrt(std::abs(tp.dil.a()));
}

// Index range of an axis restricted to |node - center| <= radius.
std::pair<std::size_t, std::size_t> index_window(const Axis& ax, double radius) {
  std::size_t lo = ax.count, hi = 0;
  for (std::size_t i = 0; i < ax.count; ++i) {
    if (std::abs(ax.node(i) - ax.center) <= radius + 1e-12 * ax.step) {
      lo = std::min(lo, i);
      hi = i + 1;
    }
  }
  if (lo >= hi) throw Error(ErrorCode::InvalidArgument, "quadrature radius excludes every grid node");
  return {lo, hi};
}

bool same_axis_nodes(const Axis& a, const Axis& b) {
  if (a.count != b.count) return false;
  const double tol = 1e-9 * std::max(a.step, b.step);
  return std::abs(a.step - b.step) <= tol && std::abs(a.center - b.center) <= tol * a.count;
}

// |s| |a| |Phi(xi, a p)|^2 summed over the scale blocks with their weights,
// evaluated on every (beta, p) node of F.
std::vector<double> admissibility_on_grid(const FourierField& F, const MotherWavelet& psi,
                                          const ParameterSampling& sampling) {
  const std::size_t nb = F.beta1.count * F.beta2.count;
  return chunked_reduce(
      sampling.scale_count(), block_chunk(sampling.scale_count()), VecSum<double>{std::vector<double>(F.size(), 0.0)},
      [&](VecSum<double>& sum, std::size_t k) {
        auto& acc = sum.v;
        const TransformPoint tp = sampling.scale_point(k);
        const double w = sampling.scale_weight(k) * std::abs(tp.sym.s()) * std::abs(tp.dil.a());
        if (w == 0.0) return;
        for (std::size_t ib = 0; ib < nb; ++ib) {
          const std::size_t i1 = ib / F.beta2.count, i2 = ib % F.beta2.count;
          const cplx xi = spectrum_argument(tp.sym, {F.beta1.node(i1), F.beta2.node(i2)});
          for (std::size_t ip = 0; ip < F.p.count; ++ip) {
            acc[ib * F.p.count + ip] += w * std::norm(psi.spectrum(xi, tp.dil.a() * F.p.node(ip)));
          }
        }
      }).v;
}

// F(beta, p) conj(Phi(xi, a p)) for one (s, a) block.
FourierField block_spectrum(const FourierField& F, const MotherWavelet& psi, const TransformPoint& tp) {
  FourierField H = F;
  for (std::size_t i1 = 0; i1 < H.beta1.count; ++i1) {
    for (std::size_t i2 = 0; i2 < H.beta2.count; ++i2) {
      const cplx xi = spectrum_argument(tp.sym, {H.beta1.node(i1), H.beta2.node(i2)});
      for (std::size_t ip = 0; ip < H.p.count; ++ip) {
        cplx& h = H.values[H.index(i1, i2, ip)];
        if (h != cplx{}) h *= std::conj(psi.spectrum(xi, tp.dil.a() * H.p.node(ip)));
      }
    }
  }
  return H;
}

// Adjoint of one (s, a) block whose (kappa, b) lattice is the target grid:
// inverse_ft(forward_ft(W) conj(P) Phi), without the scale weight.
SampledField block_adjoint(std::vector<cplx> values, const MotherWavelet& psi, const TransformPoint& tp,
                           const Grid3D& target) {
  FourierField Wh = forward_ft(SampledField(target, std::move(values)));
  const cplx pref = std::conj(coefficient_prefactor(tp));
  for (std::size_t i1 = 0; i1 < Wh.beta1.count; ++i1) {
    for (std::size_t i2 = 0; i2 < Wh.beta2.count; ++i2) {
      const cplx xi = spectrum_argument(tp.sym, {Wh.beta1.node(i1), Wh.beta2.node(i2)});
      for (std::size_t ip = 0; ip < Wh.p.count; ++ip) {
        Wh.values[Wh.index(i1, i2, ip)] *= pref * psi.spectrum(xi, tp.dil.a() * Wh.p.node(ip));
      }
    }
  }
  return inverse_ft(Wh);
}

}  // namespace

ParameterSampling ParameterSampling::make(std::size_t n_mu, double mu_max, std::size_t n_phi,
                                          double theta, std::size_t n_a, double a_lo, double a_hi,
                                          bool mirror_negative, Axis kappa1, Axis kappa2, Axis b,
                                          double a_min) {
  if (n_mu < 2 || n_phi < 1 || n_a < 2 || !(mu_max > 0.0) || !(a_lo > 0.0) || !(a_hi > a_lo)) {
    throw Error(ErrorCode::InvalidArgument, "bad parameter sampling ranges");
  }
  ParameterSampling s;
  const double hmu = mu_max / static_cast<double>(n_mu - 1);
  for (std::size_t i = 0; i < n_mu; ++i) {
    s.mu.push_back(hmu * static_cast<double>(i));
    s.mu_weights.push_back((i == 0 || i + 1 == n_mu) ? 0.5 * hmu : hmu);
  }
  const double hphi = 2.0 * kPi / static_cast<double>(n_phi);
  for (std::size_t i = 0; i < n_phi; ++i) {
    s.phi.push_back(hphi * static_cast<double>(i));
    s.phi_weights.push_back(hphi);
  }
  s.theta = theta;
  const double u0 = std::log(a_lo);
  const double hu = (std::log(a_hi) - u0) / static_cast<double>(n_a - 1);
  std::vector<double> mag, w;
  for (std::size_t i = 0; i < n_a; ++i) {
    mag.push_back(std::exp(u0 + hu * static_cast<double>(i)));
    w.push_back((i == 0 || i + 1 == n_a) ? 0.5 * hu : hu);
  }
  if (mirror_negative) {
    for (std::size_t i = n_a; i-- > 0;) {
      s.a.push_back(-mag[i]);
      s.a_weights.push_back(w[i]);
    }
  }
  for (std::size_t i = 0; i < n_a; ++i) {
    s.a.push_back(mag[i]);
    s.a_weights.push_back(w[i]);
  }
  s.a_min = a_min;
  s.kappa1 = kappa1;
  s.kappa2 = kappa2;
  s.b = b;
  s.validate();
  return s;
}

void ParameterSampling::validate() const {
  if (mu.empty() || phi.empty() || a.empty()) throw Error(ErrorCode::InvalidArgument, "empty parameter sampling");
  if (mu.size() != mu_weights.size() || phi.size() != phi_weights.size() || a.size() != a_weights.size()) {
    throw Error(ErrorCode::InvalidArgument, "sampling weights do not match nodes");
  }
  if (!(a_min > 0.0)) throw Error(ErrorCode::InvalidArgument, "a_min must be positive");
  for (double m : mu) {
    if (m < 0.0 || !std::isfinite(m)) throw Error(ErrorCode::NegativeModulus, "mu nodes must be >= 0", m);
  }
  for (double v : a) {
    if (!std::isfinite(v) || std::abs(v) < a_min) {
      throw Error(ErrorCode::InvalidArgument, "dilation inside the excluded band |a| < a_min", v);
    }
  }
  kappa1.validate();
  kappa2.validate();
  b.validate();
}

TransformPoint ParameterSampling::scale_point(std::size_t k) const {
  const std::size_t na = a.size(), nphi = phi.size();
  const std::size_t ia = k % na, iphi = (k / na) % nphi, imu = k / (na * nphi);
  TransformPoint tp;
  tp.sym = symplectic_from_hyperbolic(mu[imu], phi[iphi], theta);
  tp.dil = DilationParams::make(a[ia], 0.0);
  return tp;
}

double ParameterSampling::scale_weight(std::size_t k) const {
  const std::size_t na = a.size(), nphi = phi.size();
  const std::size_t ia = k % na, iphi = (k / na) % nphi, imu = k / (na * nphi);
  return a_weights[ia] / std::abs(a[ia]) * std::tanh(mu[imu]) * mu_weights[imu] * phi_weights[iphi];
}

TransformPoint ParameterSampling::point(std::size_t i) const {
  const std::size_t lat = lattice_count();
  TransformPoint tp = scale_point(i / lat);
  const std::size_t l = i % lat;
  const std::size_t ib = l % b.count, i2 = (l / b.count) % kappa2.count, i1 = l / (b.count * kappa2.count);
  tp.tr.kappa = {kappa1.node(i1), kappa2.node(i2)};
  tp.dil = DilationParams::make(tp.dil.a(), b.node(ib));
  return tp;
}

ParameterSampling ParameterSampling::on_lattice(const Grid3D& grid) const {
  ParameterSampling s = *this;
  s.kappa1 = grid.alpha1;
  s.kappa2 = grid.alpha2;
  s.b = grid.x;
  return s;
}

void QuadratureSpec::validate(double envelope_width) const {
  if (stride < 1) throw Error(ErrorCode::InvalidArgument, "quadrature stride must be >= 1");
  if (r_alpha < 4.0 * envelope_width || r_x < 4.0 * envelope_width) {
    throw Error(ErrorCode::InvalidArgument, "quadrature radii must be at least 4x the signal envelope width");
  }
}

ForwardResult sdwt_forward(const SampledField& g, const MotherWavelet& psi, const TransformPoint& tp,
                           const QuadratureSpec& q) {
  if (q.stride < 1) throw Error(ErrorCode::InvalidArgument, "quadrature stride must be >= 1");
  const Grid3D& grid = g.grid();
  const auto [lo1, hi1] = index_window(grid.alpha1, q.r_alpha);
  const auto [lo2, hi2] = index_window(grid.alpha2, q.r_alpha);
  const auto [lox, hix] = index_window(grid.x, q.r_x);
  const std::size_t st = q.stride;

  const cplx pref = std::conj(family_prefactor(tp));
  const cplx s = tp.sym.s(), r = tp.sym.r(), kappa = tp.tr.kappa;
  const double a = tp.dil.a(), b = tp.dil.b();

  std::vector<double> xp;
  std::vector<std::size_t> xi;
  for (std::size_t ix = lox; ix < hix; ix += st) {
    xi.push_back(ix);
    xp.push_back((grid.x.node(ix) - b) / a);
  }

  cplx fine{}, coarse{};
  std::size_t c1 = 0;
  for (std::size_t i1 = lo1; i1 < hi1; i1 += st, ++c1) {
    std::size_t c2 = 0;
    for (std::size_t i2 = lo2; i2 < hi2; i2 += st, ++c2) {
      const cplx d = grid.alpha(i1, i2) - kappa;
      const cplx w = s * d - r * std::conj(d);
      cplx row_f{}, row_c{};
      for (std::size_t k = 0; k < xi.size(); ++k) {
        const cplx gv = g.at(i1, i2, xi[k]);
        if (gv == cplx{}) continue;
        const cplx term = gv * std::conj(psi.eval(w, xp[k]));
        row_f += term;
        if (k % 2 == 0) row_c += term;
      }
      fine += row_f;
      if (c1 % 2 == 0 && c2 % 2 == 0) coarse += row_c;
    }
  }
  const double cell = grid.cell_volume() * static_cast<double>(st * st * st);
  ForwardResult res;
  res.value = fine * cell * kAdjointNorm * pref;
  if (q.error_mode == ErrorMode::Doubling) {
    const cplx coarse_value = coarse * (8.0 * cell) * kAdjointNorm * pref;
    const double err = std::abs(res.value - coarse_value);
    res.error_estimate = err;
    if (err > kForwardRelTol * std::abs(res.value) + kForwardAbsTol) {
      throw Error(ErrorCode::QuadratureDivergence,
                  "doubling estimate " + std::to_string(err) + " exceeds tolerance", err);
    }
  }
  return res;
}

cplx sdwt_forward_fourier(const FourierField& F, const MotherWavelet& psi, const TransformPoint& tp) {
  const cplx kappa = tp.tr.kappa;
  const double a = tp.dil.a(), b = tp.dil.b();
  std::vector<cplx> pphase(F.p.count);
  for (std::size_t ip = 0; ip < F.p.count; ++ip) pphase[ip] = std::polar(1.0, -F.p.node(ip) * b);
  const cplx total = chunked_reduce(F.beta1.count, 1, cplx{}, [&](cplx& acc, std::size_t i1) {
    for (std::size_t i2 = 0; i2 < F.beta2.count; ++i2) {
      const cplx beta{F.beta1.node(i1), F.beta2.node(i2)};
      const cplx xi = spectrum_argument(tp.sym, beta);
      // kappa* beta - kappa beta* = 2i Im(kappa* beta)
      const cplx kphase = std::polar(1.0, 2.0 * std::imag(std::conj(kappa) * beta));
      cplx row{};
      for (std::size_t ip = 0; ip < F.p.count; ++ip) {
        const cplx f = F.at(i1, i2, ip);
        if (f == cplx{}) continue;
        row += f * std::conj(psi.spectrum(xi, a * F.p.node(ip))) * pphase[ip];
      }
      acc += row * kphase;
    }
  });
  return coefficient_prefactor(tp) * total * F.cell_volume() * kFourierNorm;
}

CoefficientField sdwt_batch(const SampledField& g, const MotherWavelet& psi,
                            const std::vector<TransformPoint>& points, const QuadratureSpec& q) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "empty point list");
  CoefficientField out;
  out.points = points;
  out.values.resize(points.size());
  out.error_estimates.assign(points.size(), kNaN);
  out.meta.grid = g.grid();
  out.meta.tolerance = kForwardRelTol;
  out.meta.method = "direct";
  parallel_for(points.size(), [&](std::size_t i) {
    try {
      const ForwardResult r = sdwt_forward(g, psi, points[i], q);
      out.values[i] = r.value;
      if (r.error_estimate) out.error_estimates[i] = *r.error_estimate;
    } catch (const Error& e) {
      throw e.with_point_index(i);
    }
  });
  return out;
}

CoefficientField sdwt_batch(const SampledField& g, const MotherWavelet& psi,
                            const ParameterSampling& sampling, const QuadratureSpec& q,
                            BatchMethod method) {
  sampling.validate();
  const std::size_t lat = sampling.lattice_count();
  CoefficientField out;
  if (method == BatchMethod::Direct) {
    std::vector<TransformPoint> pts(sampling.size());
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = sampling.point(i);
    out = sdwt_batch(g, psi, pts, q);
  } else {
    out.points.resize(sampling.size());
    for (std::size_t i = 0; i < out.points.size(); ++i) out.points[i] = sampling.point(i);
    out.values.resize(sampling.size());
    out.error_estimates.assign(sampling.size(), kNaN);
    out.meta.grid = g.grid();
    out.meta.tolerance = 0.0;
    out.meta.method = "fourier";

    const FourierField F = forward_ft(g);
    const Grid3D lattice{sampling.kappa1, sampling.kappa2, sampling.b};
    const bool fft_lattice = same_axis_nodes(lattice.alpha1, g.grid().alpha1) &&
                             same_axis_nodes(lattice.alpha2, g.grid().alpha2) &&
                             same_axis_nodes(lattice.x, g.grid().x);
    const std::vector<double> k1 = sampling.kappa1.nodes(), k2 = sampling.kappa2.nodes(),
                              bn = sampling.b.nodes();
    parallel_for(sampling.scale_count(), [&](std::size_t k) {
      try {
        const TransformPoint tp = sampling.scale_point(k);
        const FourierField H = block_spectrum(F, psi, tp);
        const cplx pref = coefficient_prefactor(tp);
        std::vector<cplx> block = fft_lattice ? inverse_ft(H).values() : inverse_ft_at(H, k1, k2, bn);
        for (std::size_t l = 0; l < lat; ++l) out.values[k * lat + l] = pref * block[l];
      } catch (const Error& e) {
        throw e.with_point_index(k * lat);
      }
    });
  }
  out.meta.theta = sampling.theta;
  out.meta.lattice_steps = {sampling.kappa1.step, sampling.kappa2.step, sampling.b.step};
  out.cell_weights.assign(out.size(), sampling.cell_weight());
  out.scale_weights.resize(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) out.scale_weights[i] = sampling.scale_weight(i / lat);
  return out;
}

cplx adjoint_transform(const CoefficientField& W, const MotherWavelet& psi, cplx alpha, double x,
                       std::optional<double> kappa_step, std::optional<double> b_step) {
  W.validate();
  if (!kappa_step && W.meta.lattice_steps.size() == 3) {
    kappa_step = std::max(W.meta.lattice_steps[0], W.meta.lattice_steps[1]);
  }
  if (!b_step && W.meta.lattice_steps.size() == 3) b_step = W.meta.lattice_steps[2];
  const bool weighted = !W.cell_weights.empty();
  std::vector<cplx> terms(W.size());
  for (std::size_t i = 0; i < W.size(); ++i) {
    const TransformPoint& tp = W.points[i];
    const double spread = std::abs(tp.sym.s()) + std::abs(tp.sym.r());
    if (kappa_step && *kappa_step * spread > kMaxLatticeStepPerWidth * psi.width()) {
      throw Error(ErrorCode::SamplingTooSparse,
                  "kappa step is coarse relative to the wavelet width at this point",
                  *kappa_step * spread);
    }
    if (b_step && *b_step / std::abs(tp.dil.a()) > kMaxLatticeStepPerWidth * psi.width()) {
      throw Error(ErrorCode::SamplingTooSparse, "b step is coarse relative to the dilated wavelet",
                  *b_step / std::abs(tp.dil.a()));
    }
    const double w = weighted ? W.cell_weights[i] * kAdjointNorm : 1.0;
    terms[i] = w * W.values[i] * eval_family(psi, tp, alpha, x);
  }
  return pairwise_sum(terms);
}

SampledField reproduce(const SampledField& g, const MotherWavelet& psi, const ParameterSampling& sampling,
                       const QuadratureSpec& q) {
  (void)q;
  sampling.validate();
  FourierField F = forward_ft(g);
  const std::vector<double> K = admissibility_on_grid(F, psi, sampling);
  for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= K[i];
  return inverse_ft(F);
}

std::vector<double> admissibility_field(const Grid3D& grid, const MotherWavelet& psi,
                                       const ParameterSampling& sampling) {
  sampling.validate();
  return admissibility_on_grid(conjugate_field(grid), psi, sampling);
}

ParsevalResult parseval_check(const SampledField& g, const SampledField& g_prime, const std::vector<double>& K) {
  if (!(g.grid() == g_prime.grid())) throw Error(ErrorCode::InvalidGrid, "Parseval pair lives on different grids");
  const FourierField F = forward_ft(g);
  const FourierField Fp = forward_ft(g_prime);
  if (K.size() != F.values.size()) throw Error(ErrorCode::InvalidGrid, "admissibility field does not match the grid");
  std::vector<cplx> terms(F.values.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = F.values[i] * std::conj(Fp.values[i]) * K[i];
  ParsevalResult res;
  res.lhs = pairwise_sum(terms) * F.cell_volume();
  res.rhs = g.inner(g_prime);
  const double scale = std::sqrt(g.norm2() * g_prime.norm2());
  res.rel_gap = scale > 0.0 ? std::abs(res.lhs - res.rhs) / scale : 0.0;
  return res;
}

ParsevalResult parseval_check(const SampledField& g, const SampledField& g_prime, const MotherWavelet& psi,
                              const ParameterSampling& sampling, const QuadratureSpec& q) {
  (void)q;
  return parseval_check(g, g_prime, admissibility_field(g.grid(), psi, sampling));
}

double central_rel_l2(const SampledField& approx, const SampledField& reference) {
  const Grid3D& g = reference.grid();
  if (!(approx.grid() == g)) throw Error(ErrorCode::InvalidGrid, "fields live on different grids");
  auto inside = [](const Axis& ax, std::size_t i) {
    return std::abs(ax.node(i) - ax.center) <= 0.5 * ax.radius() + 1e-12;
  };
  std::vector<double> num, den;
  for (std::size_t i1 = 0; i1 < g.alpha1.count; ++i1) {
    if (!inside(g.alpha1, i1)) continue;
    for (std::size_t i2 = 0; i2 < g.alpha2.count; ++i2) {
      if (!inside(g.alpha2, i2)) continue;
      for (std::size_t ix = 0; ix < g.x.count; ++ix) {
        if (!inside(g.x, ix)) continue;
        num.push_back(std::norm(approx.at(i1, i2, ix) - reference.at(i1, i2, ix)));
        den.push_back(std::norm(reference.at(i1, i2, ix)));
      }
    }
  }
  const double d = pairwise_sum(den);
  return d > 0.0 ? std::sqrt(pairwise_sum(num) / d) : std::sqrt(pairwise_sum(num));
}

namespace {

// Splits W into maximal runs of points sharing (s, r, a).
std::vector<std::pair<std::size_t, std::size_t>> scale_blocks(const CoefficientField& W) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= W.size(); ++i) {
    const bool split = i == W.size() || W.points[i].sym.s() != W.points[start].sym.s() ||
                       W.points[i].sym.r() != W.points[start].sym.r() ||
                       W.points[i].dil.a() != W.points[start].dil.a();
    if (split) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }
  return blocks;
}

bool block_is_lattice(const CoefficientField& W, std::size_t lo, std::size_t hi, const Grid3D& grid) {
  if (hi - lo != grid.size()) return false;
  const double tol = 1e-9 * std::min({grid.alpha1.step, grid.alpha2.step, grid.x.step});
  for (std::size_t i1 = 0, l = lo; i1 < grid.alpha1.count; ++i1) {
    for (std::size_t i2 = 0; i2 < grid.alpha2.count; ++i2) {
      for (std::size_t ix = 0; ix < grid.x.count; ++ix, ++l) {
        const TransformPoint& tp = W.points[l];
        if (std::abs(tp.tr.kappa - grid.alpha(i1, i2)) > tol || std::abs(tp.dil.b() - grid.x.node(ix)) > tol) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

InversionResult invert(const CoefficientField& W, const MotherWavelet& psi, const Grid3D& target,
                       const SampledField* reference, InvertMethod method) {
  W.validate();
  target.validate();
  if (W.cell_weights.empty() || W.scale_weights.empty()) {
    throw Error(ErrorCode::InvalidArgument, "inversion needs coefficient measure weights");
  }
  const auto blocks = scale_blocks(W);
  bool lattice = true;
  for (const auto& [lo, hi] : blocks) lattice = lattice && block_is_lattice(W, lo, hi, target);
  if (method == InvertMethod::Fourier && !lattice) {
    throw Error(ErrorCode::SamplingTooSparse, "Fourier inversion needs a (kappa, b) lattice equal to the target grid");
  }
  const bool fourier = method == InvertMethod::Fourier || (method == InvertMethod::Auto && lattice);

  std::vector<cplx> acc;
  if (fourier) {
    acc = chunked_reduce(blocks.size(), block_chunk(blocks.size()), VecSum<cplx>{std::vector<cplx>(target.size())},
                         [&](VecSum<cplx>& total, std::size_t kb) {
                           auto& sum = total.v;
                           const auto [lo, hi] = blocks[kb];
                           const double sw = W.scale_weights[lo];
                           if (sw == 0.0) return;
                           const TransformPoint& tp = W.points[lo];
                           std::vector<cplx> vals(W.values.begin() + static_cast<std::ptrdiff_t>(lo),
                                                  W.values.begin() + static_cast<std::ptrdiff_t>(hi));
                           const SampledField A = block_adjoint(std::move(vals), psi, tp, target);
                           for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += sw * A.values()[i];
                         }).v;
  } else {
    if (W.meta.lattice_steps.size() == 3) {
      const double ks = std::max(W.meta.lattice_steps[0], W.meta.lattice_steps[1]);
      for (const TransformPoint& tp : W.points) {
        if (ks * (std::abs(tp.sym.s()) + std::abs(tp.sym.r())) > kMaxLatticeStepPerWidth * psi.width() ||
            W.meta.lattice_steps[2] / std::abs(tp.dil.a()) > kMaxLatticeStepPerWidth * psi.width()) {
          throw Error(ErrorCode::SamplingTooSparse, "coefficient lattice is coarse relative to the wavelet");
        }
      }
    }
    acc.assign(target.size(), cplx{});
    parallel_for(target.alpha1.count, [&](std::size_t i1) {
      std::vector<cplx> terms(W.size());
      for (std::size_t i2 = 0; i2 < target.alpha2.count; ++i2) {
        const cplx alpha = target.alpha(i1, i2);
        for (std::size_t ix = 0; ix < target.x.count; ++ix) {
          const double x = target.x.node(ix);
          for (std::size_t i = 0; i < W.size(); ++i) {
            const double w = W.scale_weights[i] * W.cell_weights[i] * kAdjointNorm;
            terms[i] = w == 0.0 ? cplx{} : w * W.values[i] * eval_family(psi, W.points[i], alpha, x);
          }
          acc[target.index(i1, i2, ix)] = pairwise_sum(terms);
        }
      }
    });
  }
  InversionResult res{SampledField(target, std::move(acc)), std::nullopt};
  if (reference != nullptr) res.rel_l2_error = central_rel_l2(res.field, *reference);
  return res;
}

InversionResult round_trip(const SampledField& g, const MotherWavelet& psi, const ParameterSampling& sampling) {
  sampling.validate();
  const Grid3D& grid = g.grid();
  const ParameterSampling lat = sampling.on_lattice(grid);
  const FourierField F = forward_ft(g);
  const std::size_t blocks = lat.scale_count();
  std::vector<cplx> acc =
      chunked_reduce(blocks, block_chunk(blocks), VecSum<cplx>{std::vector<cplx>(grid.size())},
                     [&](VecSum<cplx>& total, std::size_t k) {
                       const double sw = lat.scale_weight(k);
                       if (sw == 0.0) return;
                       const TransformPoint tp = lat.scale_point(k);
                       // Coefficient lattice of this block, then its adjoint.
                       std::vector<cplx> w = inverse_ft(block_spectrum(F, psi, tp)).values();
                       const cplx pref = coefficient_prefactor(tp);
                       for (cplx& v : w) v *= pref;
                       const SampledField A = block_adjoint(std::move(w), psi, tp, grid);
                       for (std::size_t i = 0; i < total.v.size(); ++i) total.v[i] += sw * A.values()[i];
                     }).v;
  InversionResult res{SampledField(grid, std::move(acc)), std::nullopt};
  res.rel_l2_error = central_rel_l2(res.field, g);
  return res;
}

cplx classic_wt_1d(const Signal1D& f, const Wavelet1D& phi, double a, double b) {
  if (a == 0.0) throw Error(ErrorCode::InvalidArgument, "classic transform needs a != 0");
  f.axis.validate();
  if (f.values.size() != f.axis.count) throw Error(ErrorCode::InvalidGrid, "signal length mismatch");
  std::vector<cplx> terms(f.values.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = f.values[i] * std::conj(phi.eval((f.axis.node(i) - b) / a));
  }
  return pairwise_sum(terms) * f.axis.step / std::sqrt(std::abs(a));
}

cplx swt_complex(const PlaneField& f, const ComplexWavelet& phi, cplx s, cplx r, cplx kappa) {
  validate_symplectic(s, r);
  f.alpha1.validate();
  f.alpha2.validate();
  if (f.values.size() != f.alpha1.count * f.alpha2.count) throw Error(ErrorCode::InvalidGrid, "plane field size mismatch");
  const cplx pref = std::sqrt(std::conj(s));
  std::vector<cplx> terms(f.values.size());
  for (std::size_t i1 = 0; i1 < f.alpha1.count; ++i1) {
    for (std::size_t i2 = 0; i2 < f.alpha2.count; ++i2) {
      const cplx d = cplx{f.alpha1.node(i1), f.alpha2.node(i2)} - kappa;
      const std::size_t idx = i1 * f.alpha2.count + i2;
      terms[idx] = f.values[idx] * std::conj(pref * phi(s * d - r * std::conj(d)));
    }
  }
  return pairwise_sum(terms) * f.alpha1.step * f.alpha2.step / kPi;
}

}  // namespace sdwt
