#pragma once

#include "lab/types.hpp"

namespace lab {

// Counter-based Gaussian generator. Every variate is a pure function of a
// 256-bit key (seed, stream, hi, lo), so refinement order, replica
// scheduling and thread count never change the numbers drawn.

namespace rng {

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr u64 splitmix64(u64 x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Mixes the four key words into one 64-bit state.
constexpr u64 mix_key(u64 seed, u64 stream, u64 hi, u64 lo) noexcept {
  u64 h = splitmix64(seed);
  h = splitmix64(h ^ (stream + 0xA0761D6478BD642FULL));
  h = splitmix64(h ^ (hi + 0xE7037ED1A0B428DBULL));
  h = splitmix64(h ^ (lo + 0x8EBC6AF09C88C6E3ULL));
  return h;
}

/// Uniform in the open interval (0,1) from a 64-bit word.
inline Scalar to_unit(u64 h) noexcept {
  return static_cast<Scalar>(h >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

/// Inverse of the standard normal CDF (Wichura's AS 241, double precision).
Scalar inverse_normal_cdf(Scalar p) noexcept;

/// One standard normal per key.
inline Scalar normal(u64 seed, u64 stream, u64 hi, u64 lo) noexcept {
  return inverse_normal_cdf(to_unit(mix_key(seed, stream, hi, lo)));
}

/// One uniform (0,1) per key.
inline Scalar uniform(u64 seed, u64 stream, u64 hi, u64 lo) noexcept {
  return to_unit(mix_key(seed, stream, hi, lo));
}

/// Derives a child stream id; used to hand independent streams to
/// replicas and to separate unrelated consumers of one master seed.
constexpr u64 substream(u64 stream, u64 salt) noexcept {
  return splitmix64(stream ^ (salt * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
}

} // namespace rng

/// Sequential view over the counter generator: draws normal(k), k = 0,1,...
/// with a fixed (seed, stream, tag). Cheap to copy; no hidden state beyond
/// the running counter.
class GaussianSequence {
public:
  GaussianSequence(u64 seed, u64 stream, u64 tag = 0)
      : seed_(seed), stream_(stream), tag_(tag) {}

  Scalar next() { return rng::normal(seed_, stream_, tag_, counter_++); }
  Scalar at(u64 k) const { return rng::normal(seed_, stream_, tag_, k); }

  /// Vector of d independent normals for step k (component folded into hi).
  Vector vector_at(u64 k, Index d) const {
    Vector z(d);
    for (Index j = 0; j < d; ++j)
      z[j] = rng::normal(seed_, stream_, tag_ ^ (0x100000000ULL * (u64(j) + 1)), k);
    return z;
  }

private:
  u64 seed_, stream_, tag_;
  u64 counter_ = 0;
};

} // namespace lab
