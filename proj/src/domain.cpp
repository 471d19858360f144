#include "lab/domain.hpp"

#include "lab/errors.hpp"

#include <cmath>

namespace lab {

Scalar smoothstep5(Scalar u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

Domain Domain::interval(Scalar x_lo, Scalar x_hi) {
  if (!(x_lo < x_hi)) throw ParameterError("Domain::interval: x_lo must be < x_hi");
  Domain d;
  d.kind_ = Kind::Interval;
  d.lo_ = x_lo;
  d.hi_ = x_hi;
  return d;
}

Domain Domain::disk(const Vector& center, Scalar radius) {
  if (center.size() != 2) throw ParameterError("Domain::disk: center must be 2D");
  if (!(radius > 0.0)) throw ParameterError("Domain::disk: radius must be > 0");
  Domain d;
  d.kind_ = Kind::Disk;
  d.center_ = center;
  d.radius_ = radius;
  return d;
}

Scalar Domain::signed_distance(const Vector& x) const {
  if (kind_ == Kind::Interval) {
    if (x.size() != 1) throw ParameterError("Domain: point dimension mismatch");
    return std::min(x[0] - lo_, hi_ - x[0]);
  }
  if (x.size() != 2) throw ParameterError("Domain: point dimension mismatch");
  return radius_ - (x - center_).norm();
}

Scalar Domain::boundary_distance(const Vector& x) const {
  return std::abs(signed_distance(x));
}

Scalar Domain::diameter() const {
  return kind_ == Kind::Interval ? hi_ - lo_ : 2.0 * radius_;
}

Scalar Domain::x_lo() const {
  if (kind_ != Kind::Interval) throw ParameterError("Domain: not an interval");
  return lo_;
}

Scalar Domain::x_hi() const {
  if (kind_ != Kind::Interval) throw ParameterError("Domain: not an interval");
  return hi_;
}

const Vector& Domain::center() const {
  if (kind_ != Kind::Disk) throw ParameterError("Domain: not a disk");
  return center_;
}

Scalar Domain::radius() const {
  if (kind_ != Kind::Disk) throw ParameterError("Domain: not a disk");
  return radius_;
}

Scalar Domain::smooth_cutoff(const Vector& x) const {
  const Scalar s = signed_distance(x);
  if (s >= 0.0) return 1.0;
  return smoothstep5(1.0 + s / extension_radius_);
}

std::vector<Scalar> uniform_grid(Scalar lo, Scalar hi, Index n_cells) {
  if (n_cells < 1) throw ParameterError("uniform_grid: need at least one cell");
  std::vector<Scalar> g(static_cast<std::size_t>(n_cells) + 1);
  const Scalar h = (hi - lo) / static_cast<Scalar>(n_cells);
  for (Index i = 0; i <= n_cells; ++i)
    g[static_cast<std::size_t>(i)] = lo + h * static_cast<Scalar>(i);
  g.back() = hi;
  return g;
}

} // namespace lab
