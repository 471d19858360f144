#pragma once

#include "lab/rng.hpp"
#include "lab/types.hpp"

#include <iosfwd>
#include <vector>

namespace lab {

/// Multi-component Brownian path on the dyadic grid t_i = i * T * 2^-L,
/// i = 0 .. 2^L, built by the Lévy (conditional midpoint) construction.
/// Each midpoint variate is keyed by (master_seed, stream_id, component,
/// level, index), so refining never perturbs existing values and
/// regeneration is bit-identical.
class WienerPath {
public:
  WienerPath(u64 master_seed, u64 stream_id, Index d1, Index level, Scalar horizon);

  Index components() const { return d1_; }
  Index level() const { return level_; }
  Scalar horizon() const { return horizon_; }
  u64 master_seed() const { return master_seed_; }
  u64 stream_id() const { return stream_id_; }

  /// Number of grid points, 2^L + 1.
  Index size() const { return static_cast<Index>(values_[0].size()); }
  Scalar dt() const { return horizon_ / static_cast<Scalar>(size() - 1); }
  Scalar time_at(Index i) const { return dt() * static_cast<Scalar>(i); }

  const std::vector<Scalar>& component(Index k) const { return values_[static_cast<std::size_t>(k)]; }
  Scalar value(Index k, Index i) const { return values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]; }

  /// W(t) with t snapped to the nearest grid point; t < 0 clamps to 0
  /// (paths are flat before time zero).
  Scalar value_at_time(Index k, Scalar t) const;

  /// Increment W(t_{i+1}) - W(t_i) of component k.
  Scalar increment(Index k, Index i) const {
    const auto& v = values_[static_cast<std::size_t>(k)];
    return v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)];
  }

  /// All d1 increments over grid step i as a vector.
  Vector increments(Index i) const;

  /// Grid index of time t; throws if t is not a grid point (tolerance
  /// 1e-9 grid steps). Negative t clamps to 0.
  Index index_of_time(Scalar t) const;

private:
  u64 master_seed_;
  u64 stream_id_;
  Index d1_;
  Index level_;
  Scalar horizon_;
  std::vector<std::vector<Scalar>> values_; // [component][grid point]

  void build_levels(Index from_level);
  friend WienerPath refine_path(const WienerPath& path, Index extra_levels);
  friend WienerPath read_path_binary(std::istream& is);
};

/// Fresh path; validates L >= 0, d1 >= 1, T > 0.
WienerPath generate_path(u64 seed, u64 stream, Index d1, Index level, Scalar horizon);

/// Path at level L + extra_levels sharing all existing values bit-exactly.
WienerPath refine_path(const WienerPath& path, Index extra_levels);

/// Scalar path sampled on a uniform grid starting at time 0; queries below
/// 0 follow the flat pre-0 convention.
struct SampledPath {
  Scalar dt = 0.0;
  std::vector<Scalar> values;

  Scalar end_time() const { return dt * static_cast<Scalar>(values.size() - 1); }
};

/// max - min over the grid points of [s, t] (both ends included, s and t
/// clamped to [0, end]). Throws if the interval misses the grid entirely.
Scalar oscillation(const SampledPath& path, Scalar s, Scalar t);

/// Same for one component of a Wiener path.
Scalar oscillation(const WienerPath& path, Index k, Scalar s, Scalar t);

/// Binary dump: header (T, L, d1, seed, stream; 64-bit little-endian each)
/// followed by IEEE-754 doubles, component-major.
void write_path_binary(const WienerPath& path, std::ostream& os);
WienerPath read_path_binary(std::istream& is);

} // namespace lab
