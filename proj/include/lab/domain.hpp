#pragma once

#include "lab/types.hpp"

#include <vector>

namespace lab {

/// Spatial domain G: an interval (x_lo, x_hi) in 1D or a disk in 2D.
/// boundary_distance is the exact distance to the boundary (1-Lipschitz,
/// positive exactly on the interior). The extended domain G+ adds a collar
/// of width extension_radius; coefficients are supported there.
class Domain {
public:
  enum class Kind { Interval, Disk };

  static Domain interval(Scalar x_lo, Scalar x_hi);
  static Domain disk(const Vector& center, Scalar radius);

  Kind kind() const { return kind_; }
  Index dim() const { return kind_ == Kind::Interval ? 1 : 2; }

  Scalar boundary_distance(const Vector& x) const;
  /// Signed version: positive inside, negative outside.
  Scalar signed_distance(const Vector& x) const;
  bool inside(const Vector& x) const { return signed_distance(x) > 0.0; }

  /// x inside the extended domain G+ = G + B(extension_radius).
  bool inside_extended(const Vector& x) const {
    return signed_distance(x) > -extension_radius_;
  }

  Scalar extension_radius() const { return extension_radius_; }
  void set_extension_radius(Scalar r) { extension_radius_ = r; }

  Scalar diameter() const;

  // Interval accessors (throw for disks).
  Scalar x_lo() const;
  Scalar x_hi() const;

  // Disk accessors (throw for intervals).
  const Vector& center() const;
  Scalar radius() const;

  /// C^2 cutoff: 1 on G, 0 outside G+, quintic-smoothstep blend across the
  /// collar. Used to build coefficients that vanish outside G+ smoothly.
  Scalar smooth_cutoff(const Vector& x) const;

private:
  Kind kind_;
  Scalar lo_ = 0.0, hi_ = 0.0; // interval
  Vector center_;              // disk
  Scalar radius_ = 0.0;        // disk
  Scalar extension_radius_ = 1.0;
};

/// Quintic smoothstep: 0 at u<=0, 1 at u>=1, C^2 at both ends.
Scalar smoothstep5(Scalar u);

/// Uniform 1D lattice x_i = lo + i*h covering [lo, hi] with n+1 nodes.
std::vector<Scalar> uniform_grid(Scalar lo, Scalar hi, Index n_cells);

} // namespace lab
