#include "sdwt/types.hpp"

#include <cmath>

#include "sdwt/errors.hpp"
#include "sdwt/parallel.hpp"

namespace sdwt {

double SymplecticParams::mu() const {
  return std::acosh(std::max(1.0, std::abs(s_)));
}

std::optional<double> SymplecticParams::theta() const {
  if (r_ == cplx{0.0, 0.0}) return std::nullopt;
  return std::arg(r_);
}

SymplecticParams validate_symplectic(cplx s, cplx r) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || !std::isfinite(r.real()) ||
      !std::isfinite(r.imag())) {
    throw Error(ErrorCode::ConstraintViolation, "non-finite symplectic parameters");
  }
  const double residual = std::norm(s) - std::norm(r) - 1.0;
  if (std::abs(residual) > kConstraintTolerance) {
    throw Error(ErrorCode::ConstraintViolation,
                "|s|^2 - |r|^2 - 1 = " + std::to_string(residual), residual);
  }
  return SymplecticParams(s, r);
}

SymplecticParams symplectic_from_hyperbolic(double mu, double phi, double theta) {
  if (mu < 0.0) throw Error(ErrorCode::NegativeModulus, "mu must be >= 0", mu);
  if (!std::isfinite(mu) || !std::isfinite(phi) || !std::isfinite(theta)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite hyperbolic coordinates");
  }
  return SymplecticParams(std::polar(std::cosh(mu), phi), std::polar(std::sinh(mu), theta));
}

DilationParams DilationParams::make(double a, double b) {
  if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "dilation requires finite a != 0 and finite b", a);
  }
  return DilationParams(a, b);
}

std::optional<double> DilationParams::lambda() const {
  if (a_ <= 0.0) return std::nullopt;
  return std::log(a_);
}

double DilationParams::sech_lambda() const {
  if (a_ <= 0.0) throw Error(ErrorCode::NonPositiveDilation, "sech(lambda) needs a > 0", a_);
  return 2.0 * a_ / (1.0 + a_ * a_);
}

double DilationParams::tanh_lambda() const {
  if (a_ <= 0.0) throw Error(ErrorCode::NonPositiveDilation, "tanh(lambda) needs a > 0", a_);
  return (a_ * a_ - 1.0) / (1.0 + a_ * a_);
}

Axis Axis::from_radius(double radius, std::size_t count, double center) {
  if (count < 2 || !(radius > 0.0)) {
    throw Error(ErrorCode::InvalidGrid, "axis needs count >= 2 and radius > 0");
  }
  return Axis{center, 2.0 * radius / static_cast<double>(count - 1), count};
}

std::vector<double> Axis::nodes() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = node(i);
  return out;
}

void Axis::validate() const {
  if (count < 2) throw Error(ErrorCode::InvalidGrid, "axis count must be >= 2");
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidGrid, "axis step must be positive and finite");
  }
  if (!std::isfinite(center)) throw Error(ErrorCode::InvalidGrid, "axis center not finite");
}

void Grid3D::validate() const {
  alpha1.validate();
  alpha2.validate();
  x.validate();
}

SampledField::SampledField(Grid3D grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidGrid, "value count does not match grid cardinality");
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "sampled field contains non-finite values");
    }
  }
}

SampledField SampledField::zeros(const Grid3D& grid) {
  return SampledField(grid, std::vector<cplx>(grid.size()));
}

SampledField SampledField::tabulate(const Grid3D& grid,
                                    const std::function<cplx(cplx, double)>& f) {
  grid.validate();
  std::vector<cplx> values(grid.size());
  parallel_for(grid.alpha1.count, [&](std::size_t i1) {
    for (std::size_t i2 = 0; i2 < grid.alpha2.count; ++i2) {
      const cplx alpha = grid.alpha(i1, i2);
      for (std::size_t ix = 0; ix < grid.x.count; ++ix) {
        values[grid.index(i1, i2, ix)] = f(alpha, grid.x.node(ix));
      }
    }
  });
  return SampledField(grid, std::move(values));
}

double SampledField::norm2() const {
  std::vector<double> terms(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) terms[i] = std::norm(values_[i]);
  return pairwise_sum(terms) * grid_.cell_volume();
}

cplx SampledField::inner(const SampledField& other) const {
  if (!(grid_ == other.grid_)) throw Error(ErrorCode::InvalidGrid, "inner product on mismatched grids");
  std::vector<cplx> terms(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) terms[i] = values_[i] * std::conj(other.values_[i]);
  return pairwise_sum(terms) * grid_.cell_volume();
}

SampledField& SampledField::operator+=(const SampledField& other) {
  if (!(grid_ == other.grid_)) throw Error(ErrorCode::InvalidGrid, "sum of fields on mismatched grids");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

SampledField& SampledField::operator*=(cplx factor) {
  for (cplx& v : values_) v *= factor;
  return *this;
}

SampledField operator+(SampledField lhs, const SampledField& rhs) {
  lhs += rhs;
  return lhs;
}

SurfaceCoords surface_coords(const SymplecticParams& sym, double theta_hint) {
  return SurfaceCoords{sym.mu(), sym.phi(), sym.theta().value_or(theta_hint)};
}

void CoefficientField::validate() const {
  const std::size_t n = points.size();
  if (values.size() != n || error_estimates.size() != n ||
      (!cell_weights.empty() && cell_weights.size() != n) ||
      (!scale_weights.empty() && scale_weights.size() != n)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient field vectors differ in length");
  }
}

}  // namespace sdwt
