#pragma once

// Truncated two-mode Fock space: entangled-coherent states |alpha,x>, EPR
// states |eta>, the transform operator U by quadrature and in normal-ordered
// closed form, and the quantum form of the transform.

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "sdwt/types.hpp"

namespace sdwt {

// At most N photons per mode; flat index n1 * (N+1) + n2.
class FockSpace {
 public:
  explicit FockSpace(std::size_t cutoff);

  std::size_t cutoff() const noexcept { return n_; }
  std::size_t dim() const noexcept { return (n_ + 1) * (n_ + 1); }
  std::size_t index(std::size_t n1, std::size_t n2) const { return n1 * (n_ + 1) + n2; }
  std::size_t n1(std::size_t flat) const { return flat / (n_ + 1); }
  std::size_t n2(std::size_t flat) const { return flat % (n_ + 1); }

  bool operator==(const FockSpace&) const = default;

 private:
  std::size_t n_;
};

struct FockVector {
  FockSpace space;
  Eigen::VectorXcd amp;

  FockVector(FockSpace sp, Eigen::VectorXcd a);
  static FockVector zeros(const FockSpace& sp);
  static FockVector basis(const FockSpace& sp, std::size_t n1, std::size_t n2);

  cplx& at(std::size_t n1, std::size_t n2) { return amp[space.index(n1, n2)]; }
  cplx at(std::size_t n1, std::size_t n2) const { return amp[space.index(n1, n2)]; }
  double norm() const { return amp.norm(); }
};

struct FockOperator {
  FockSpace space;
  Eigen::MatrixXcd mat;

  FockOperator(FockSpace sp, Eigen::MatrixXcd m);
  static FockOperator identity(const FockSpace& sp);
  FockVector apply(const FockVector& v) const;
  // Max |entry| of (this - other) over basis states with n1 + n2 <= max_total.
  double block_deviation(const Eigen::MatrixXcd& other, std::size_t max_total) const;
};

struct LadderOps {
  FockOperator a1, a2, a1d, a2d, x1, x2;
};

// Truncated a_i, a_i^dagger and X_i = (a_i + a_i^dagger)/sqrt 2.
LadderOps ladder_ops(const FockSpace& space);

struct EtaLabel {
  double eta1 = 0.0;
  double eta2 = 0.0;
  cplx value() const { return {eta1, eta2}; }
};

inline constexpr double kTruncationTailLimit = 1e-6;

// Poisson tail P(n > N) of the displacement carried by the state label.
double ecs_tail_estimate(cplx alpha, double x, std::size_t cutoff);
double eta_tail_estimate(const EtaLabel& eta, std::size_t cutoff);

// Amplitudes <n1,n2|alpha,x> by the three-term recursion of the generating
// exponential. Amplitudes are exact for every (n1, n2) in the box; the tail
// check guards inner products that rely on the truncated sum.
FockVector ecs_vector(cplx alpha, double x, const FockSpace& space, bool check_truncation = true);

// Amplitudes <n1,n2|eta>.
FockVector eta_vector(const EtaLabel& eta, const FockSpace& space, bool check_truncation = true);

// Normalized two-mode coherent state |z1> (x) |z2>.
FockVector coherent_vector(cplx z1, cplx z2, const FockSpace& space);

// How the excitation-shell series sum_n S_n of an inner product is summed.
// Truncated: plain partial sum. Conformal: Abel summation after the map
// t = 2w/(1-w^2), evaluated at t = 1. LogConformal: the same applied to the
// logarithm of the series (for Gaussian-type overlaps).
enum class Summation { Truncated, Conformal, LogConformal };

// <bra|ket> summed over the complete shells n1 + n2 <= N.
cplx overlap(const FockVector& bra, const FockVector& ket, Summation method = Summation::Truncated);

// (1/sqrt 2) exp[-(alpha^2 + |alpha|^2)/4 - eta1^2/2 + eta1 alpha - i eta2 x].
cplx eta_ecs_closed_form(const EtaLabel& eta, cplx alpha, double x);

// <alpha,x|state>. The sum is exact for states confined to the box; the
// tail check matters only when `state` truncates an unbounded state.
cplx fock_wavefunction(const FockVector& state, cplx alpha, double x, bool check_truncation = true);

// Tensor quadrature over (alpha1, alpha2, x).
struct FockQuadrature {
  enum class Kind { GaussHermite, Trapezoid };
  Kind kind = Kind::GaussHermite;
  std::size_t nodes = 32;
  double radius = 6.0;
  // Gauss-Hermite scales; 0 maps the outermost node to `radius`.
  double sigma_alpha = 0.0;
  double sigma_x = 0.0;
};

struct CompletenessResult {
  double max_deviation = 0.0;     // max |M - I| on the block
  double max_diag_deviation = 0.0;
  cplx offdiag_00_10{};           // <0,0|M|1,0>
  std::size_t block_total = 4;
};

// \int dx/sqrt(pi) \int d^2alpha/(2 pi) |alpha,x><alpha,x| on n1 + n2 <= block_total.
// Throws CutoffTooSmall when the quadrature radius is below 5.
CompletenessResult resolution_identity_check(const FockSpace& space, const FockQuadrature& quad,
                                             std::size_t block_total = 4);

struct SmearedOrthogonality {
  cplx lhs{};  // \int dx' f(x') <alpha',x'|alpha,x>
  cplx rhs{};  // sqrt(pi) exp[-(|alpha|^2+|alpha'|^2)/4 + alpha alpha'*/2] f(x)
};

// f is sampled on `x_axis` (trapezoid in x'); x must be a point of interest.
SmearedOrthogonality smeared_orthogonality_check(cplx alpha, double x, cplx alpha_prime,
                                                 const std::function<double(double)>& f,
                                                 const Axis& x_axis, const FockSpace& space);

// sqrt(s/|a|) \int dx/sqrt(pi) \int d^2alpha/(2 pi) |s alpha - r alpha*, (x-b)/a><alpha+kappa, x|.
FockOperator build_U_quadrature(const TransformPoint& tp, const FockSpace& space,
                                const FockQuadrature& quad = {});

// Coefficients of the normal-ordered product
//   U = prefactor * exp[c_plus (a1d+a2d)^2 + c_minus (a1d-a2d)^2] * V
//       * exp[d_plus (a1+a2)^2 + d_minus (a1-a2)^2].
struct NormalOrderedGaussian {
  Eigen::Matrix2cd lambda;  // Lambda of V = :exp[a^dagger (Lambda - I) a]:
  cplx c_plus, c_minus;     // creation quadratics
  cplx d_plus, d_minus;     // annihilation quadratics
  cplx prefactor;           // sech^{1/2}(lambda) / sqrt(s*)
  double sech = 1.0;
  double tanh = 0.0;
};

NormalOrderedGaussian normal_ordered_form(cplx s, cplx r, double a);

// Matrix of V = :exp[a^dagger (Lambda - I) a]: on the truncated space.
Eigen::MatrixXcd normal_ordered_v(const Eigen::Matrix2cd& lambda, const FockSpace& space);

FockOperator build_U_normal_ordered(cplx s, cplx r, double a, const FockSpace& space);

// <psi|U|g> with U by quadrature.
cplx quantum_sdwt(const FockVector& psi_state, const FockVector& g_state, const TransformPoint& tp,
                  const FockSpace& space, const FockQuadrature& quad = {});

// Weak eigen-residuals: max over a fixed panel of coherent test states |z>
// of |<z|(L - lambda)|state>|.
struct EcsEigenResidual {
  double annihilation = 0.0;  // L = a1 - a2, lambda = alpha
  double coordinate = 0.0;    // L = (X1 + X2)/2, lambda = x / sqrt 2
};
EcsEigenResidual ecs_eigen_residual(cplx alpha, double x, const FockSpace& space);
// L = a1 - a2^dagger, lambda = eta.
double eta_eigen_residual(const EtaLabel& eta, const FockSpace& space);

}  // namespace sdwt
