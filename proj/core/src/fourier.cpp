#include "sdwt/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"

namespace sdwt {
namespace {

std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

// In-place 3D plans, one per (shape, sign). FFTW planning is not thread-safe;
// execution with fftw_execute_dft on other arrays is.
fftw_plan cached_plan(int n0, int n1, int n2, int sign) {
  static std::map<std::tuple<int, int, int, int>, fftw_plan> cache;
  std::lock_guard lock(plan_mutex());
  const auto key = std::make_tuple(n0, n1, n2, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::size_t total = static_cast<std::size_t>(n0) * n1 * n2;
  fftw_complex* buf = fftw_alloc_complex(total);
  fftw_plan plan = fftw_plan_dft_3d(n0, n1, n2, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (plan == nullptr) throw Error(ErrorCode::InvalidGrid, "FFTW could not plan the transform");
  cache.emplace(key, plan);
  return plan;
}

// Phases turning a plain DFT into a sum over centered indices:
//   sum_j f_j e^{s i w_k t_j},  t_j = c_t + (j - m) h_t,  w_k = c_w + (k - m) dw
// with dw h_t = 2 pi / n. `pre` multiplies the input index j, `post` the
// output index k.
struct CenteredPhases {
  std::vector<cplx> pre;
  std::vector<cplx> post;
};

CenteredPhases centered_phases(std::size_t n, int sign, double in_center, double in_step,
                               double out_center, double out_step) {
  const double m = 0.5 * static_cast<double>(n - 1);
  const double s = sign;
  const double two_pi_n = 2.0 * kPi / static_cast<double>(n);
  CenteredPhases ph;
  ph.pre.resize(n);
  ph.post.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double jm = static_cast<double>(j) - m;
    // out_center * t_j part
    ph.pre[j] = std::polar(1.0, -s * two_pi_n * m * static_cast<double>(j) +
                                    s * out_center * (in_center + jm * in_step));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double km = static_cast<double>(k) - m;
    ph.post[k] = std::polar(1.0, -s * two_pi_n * m * static_cast<double>(k) +
                                     s * two_pi_n * m * m + s * in_center * km * out_step);
  }
  return ph;
}

void centered_dft_3d(std::vector<cplx>& data, const std::size_t n[3], int sign,
                     const CenteredPhases ph[3]) {
  const std::size_t n12 = n[1] * n[2];
  parallel_for(n[0], [&](std::size_t i) {
    for (std::size_t j = 0; j < n[1]; ++j) {
      const cplx pij = ph[0].pre[i] * ph[1].pre[j];
      cplx* row = data.data() + i * n12 + j * n[2];
      for (std::size_t k = 0; k < n[2]; ++k) row[k] *= pij * ph[2].pre[k];
    }
  });
  fftw_plan plan = cached_plan(static_cast<int>(n[0]), static_cast<int>(n[1]),
                               static_cast<int>(n[2]), sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD);
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, ptr, ptr);
  parallel_for(n[0], [&](std::size_t i) {
    for (std::size_t j = 0; j < n[1]; ++j) {
      const cplx pij = ph[0].post[i] * ph[1].post[j];
      cplx* row = data.data() + i * n12 + j * n[2];
      for (std::size_t k = 0; k < n[2]; ++k) row[k] *= pij * ph[2].post[k];
    }
  });
}

const double kNorm = 1.0 / (kPi * std::sqrt(2.0 * kPi));

}  // namespace

double FourierField::norm2() const {
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) terms[i] = std::norm(values[i]);
  return pairwise_sum(terms) * cell_volume();
}

FourierField conjugate_field(const Grid3D& g) {
  g.validate();
  FourierField F;
  const auto n1 = static_cast<double>(g.alpha1.count);
  const auto n2 = static_cast<double>(g.alpha2.count);
  const auto nx = static_cast<double>(g.x.count);
  F.beta1 = Axis{0.0, kPi / (n2 * g.alpha2.step), g.alpha2.count};
  F.beta2 = Axis{0.0, kPi / (n1 * g.alpha1.step), g.alpha1.count};
  F.p = Axis{0.0, 2.0 * kPi / (nx * g.x.step), g.x.count};
  F.values.assign(F.size(), cplx{});
  F.source = g;
  return F;
}

FourierField forward_ft(const SampledField& g) {
  const Grid3D& grid = g.grid();
  FourierField F = conjugate_field(grid);
  const std::size_t n[3] = {grid.alpha1.count, grid.alpha2.count, grid.x.count};

  // Angular frequencies: w1 = -2 beta2 on alpha1, w2 = 2 beta1 on alpha2, p on x.
  const CenteredPhases ph[3] = {
      centered_phases(n[0], +1, grid.alpha1.center, grid.alpha1.step, 0.0, 2.0 * F.beta2.step),
      centered_phases(n[1], +1, grid.alpha2.center, grid.alpha2.step, 0.0, 2.0 * F.beta1.step),
      centered_phases(n[2], +1, grid.x.center, grid.x.step, 0.0, F.p.step)};

  std::vector<cplx> G = g.values();
  centered_dft_3d(G, n, +1, ph);

  const double scale = grid.cell_volume() * kNorm;
  parallel_for(F.beta1.count, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < F.beta2.count; ++i2) {
      const std::size_t k1 = n[0] - 1 - i2;
      for (std::size_t ip = 0; ip < F.p.count; ++ip) {
        F.values[F.index(i1, i2, ip)] = scale * G[(k1 * n[1] + i1) * n[2] + ip];
      }
    }
  });
  return F;
}

FourierField forward_ft(const SampledField& g, const FourierExtent& requested) {
  FourierField F = forward_ft(g);
  const double beta_limit = std::min(F.beta1.radius(), F.beta2.radius());
  if (requested.beta_radius > beta_limit) {
    throw Error(ErrorCode::GridTooCoarse,
                "requested beta extent exceeds the Nyquist extent " + std::to_string(beta_limit),
                requested.beta_radius);
  }
  if (requested.p_radius > F.p.radius()) {
    throw Error(ErrorCode::GridTooCoarse,
                "requested p extent exceeds the Nyquist extent " + std::to_string(F.p.radius()),
                requested.p_radius);
  }
  return F;
}

SampledField inverse_ft(const FourierField& F) {
  const Grid3D& grid = F.source;
  grid.validate();
  if (F.beta2.count != grid.alpha1.count || F.beta1.count != grid.alpha2.count ||
      F.p.count != grid.x.count || F.values.size() != F.size()) {
    throw Error(ErrorCode::InvalidGrid, "Fourier field does not match its source grid");
  }
  const std::size_t n[3] = {grid.alpha1.count, grid.alpha2.count, grid.x.count};

  // Frequency index k1 on w1 = -2 beta2 runs opposite to beta2.
  std::vector<cplx> G(F.size());
  parallel_for(n[0], [&](std::size_t k1) {
    const std::size_t i2 = n[0] - 1 - k1;
    for (std::size_t k2 = 0; k2 < n[1]; ++k2) {
      for (std::size_t kp = 0; kp < n[2]; ++kp) {
        G[(k1 * n[1] + k2) * n[2] + kp] = F.values[F.index(k2, i2, kp)];
      }
    }
  });

  // Sum over centered frequencies (center 0) onto centered space nodes.
  const CenteredPhases ph[3] = {
      centered_phases(n[0], -1, 0.0, 2.0 * F.beta2.step, grid.alpha1.center, grid.alpha1.step),
      centered_phases(n[1], -1, 0.0, 2.0 * F.beta1.step, grid.alpha2.center, grid.alpha2.step),
      centered_phases(n[2], -1, 0.0, F.p.step, grid.x.center, grid.x.step)};
  centered_dft_3d(G, n, -1, ph);

  const double scale = F.cell_volume() * kNorm;
  for (cplx& v : G) v *= scale;
  return SampledField(grid, std::move(G));
}

std::vector<cplx> inverse_ft_at(const FourierField& F, const std::vector<double>& alpha1,
                                const std::vector<double>& alpha2, const std::vector<double>& x) {
  const std::size_t nb1 = F.beta1.count, nb2 = F.beta2.count, np = F.p.count;
  const std::size_t na1 = alpha1.size(), na2 = alpha2.size(), nx = x.size();
  if (F.values.size() != F.size()) throw Error(ErrorCode::InvalidGrid, "Fourier field size mismatch");

  // e^{-i p x}, e^{2i beta2 alpha1}, e^{-2i beta1 alpha2}
  std::vector<cplx> ex(np * nx), e1(nb2 * na1), e2(nb1 * na2);
  for (std::size_t k = 0; k < np; ++k)
    for (std::size_t j = 0; j < nx; ++j) ex[k * nx + j] = std::polar(1.0, -F.p.node(k) * x[j]);
  for (std::size_t k = 0; k < nb2; ++k)
    for (std::size_t j = 0; j < na1; ++j) e1[k * na1 + j] = std::polar(1.0, 2.0 * F.beta2.node(k) * alpha1[j]);
  for (std::size_t k = 0; k < nb1; ++k)
    for (std::size_t j = 0; j < na2; ++j) e2[k * na2 + j] = std::polar(1.0, -2.0 * F.beta1.node(k) * alpha2[j]);

  // T1[b1][b2][jx] = sum_p F e^{-i p x}
  std::vector<cplx> T1(nb1 * nb2 * nx);
  parallel_for(nb1, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < nb2; ++i2) {
      const cplx* f = F.values.data() + F.index(i1, i2, 0);
      cplx* out = T1.data() + (i1 * nb2 + i2) * nx;
      for (std::size_t k = 0; k < np; ++k) {
        if (f[k] == cplx{}) continue;
        const cplx* e = ex.data() + k * nx;
        for (std::size_t j = 0; j < nx; ++j) out[j] += f[k] * e[j];
      }
    }
  });
  // T2[b1][ja1][jx] = sum_b2 T1 e^{2i beta2 alpha1}
  std::vector<cplx> T2(nb1 * na1 * nx);
  parallel_for(nb1, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < nb2; ++i2) {
      const cplx* t = T1.data() + (i1 * nb2 + i2) * nx;
      for (std::size_t j1 = 0; j1 < na1; ++j1) {
        const cplx e = e1[i2 * na1 + j1];
        cplx* out = T2.data() + (i1 * na1 + j1) * nx;
        for (std::size_t j = 0; j < nx; ++j) out[j] += e * t[j];
      }
    }
  });
  // out[ja1][ja2][jx] = sum_b1 T2 e^{-2i beta1 alpha2}
  std::vector<cplx> out(na1 * na2 * nx);
  const double scale = F.cell_volume() * kNorm;
  parallel_for(na1, [&](std::size_t j1) {
    for (std::size_t j2 = 0; j2 < na2; ++j2) {
      cplx* o = out.data() + (j1 * na2 + j2) * nx;
      for (std::size_t i1 = 0; i1 < nb1; ++i1) {
        const cplx e = e2[i1 * na2 + j2];
        const cplx* t = T2.data() + (i1 * na1 + j1) * nx;
        for (std::size_t j = 0; j < nx; ++j) o[j] += e * t[j];
      }
      for (std::size_t j = 0; j < nx; ++j) o[j] *= scale;
    }
  });
  return out;
}

}  // namespace sdwt
