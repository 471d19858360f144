#include "lab/noise.hpp"

#include "lab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

namespace lab {

namespace {

// Key layout: hi word carries (component, level), lo word the midpoint
// index within the level. Level 0 is the terminal value W(T).
u64 key_hi(Index component, Index level) {
  return (static_cast<u64>(component) << 32) | static_cast<u64>(level);
}

} // namespace

WienerPath::WienerPath(u64 master_seed, u64 stream_id, Index d1, Index level,
                       Scalar horizon)
    : master_seed_(master_seed), stream_id_(stream_id), d1_(d1), level_(level),
      horizon_(horizon) {
  if (level < 0) throw ParameterError("WienerPath: level must be >= 0");
  if (d1 < 1) throw ParameterError("WienerPath: d1 must be >= 1");
  if (!(horizon > 0.0)) throw ParameterError("WienerPath: horizon must be > 0");
  if (level > 30) throw ParameterError("WienerPath: level too deep (> 30)");

  const std::size_t n = (std::size_t(1) << level) + 1;
  values_.assign(static_cast<std::size_t>(d1), std::vector<Scalar>(n, 0.0));
  for (Index k = 0; k < d1; ++k) {
    values_[static_cast<std::size_t>(k)].back() =
        std::sqrt(horizon_) * rng::normal(master_seed_, stream_id_, key_hi(k, 0), 0);
  }
  build_levels(1);
}

void WienerPath::build_levels(Index from_level) {
  // Level l inserts midpoints of intervals of length T * 2^{-(l-1)};
  // conditional standard deviation is sqrt(len) / 2.
  for (Index l = from_level; l <= level_; ++l) {
    const Index stride = Index(1) << (level_ - l);       // midpoint spacing/2
    const Index n_mid = Index(1) << (l - 1);
    const Scalar len = horizon_ * std::pow(2.0, -static_cast<Scalar>(l - 1));
    const Scalar sd = std::sqrt(len) / 2.0;
    for (Index k = 0; k < d1_; ++k) {
      auto& v = values_[static_cast<std::size_t>(k)];
      for (Index j = 0; j < n_mid; ++j) {
        const Index mid = (2 * j + 1) * stride;
        const Scalar avg = 0.5 * (v[static_cast<std::size_t>(mid - stride)] +
                                  v[static_cast<std::size_t>(mid + stride)]);
        v[static_cast<std::size_t>(mid)] =
            avg + sd * rng::normal(master_seed_, stream_id_, key_hi(k, l),
                                   static_cast<u64>(j));
      }
    }
  }
}

Scalar WienerPath::value_at_time(Index k, Scalar t) const {
  if (t <= 0.0) return values_[static_cast<std::size_t>(k)].front();
  const Index i = std::min<Index>(
      size() - 1, static_cast<Index>(std::llround(t / dt())));
  return values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
}

Vector WienerPath::increments(Index i) const {
  Vector dw(d1_);
  for (Index k = 0; k < d1_; ++k) dw[k] = increment(k, i);
  return dw;
}

Index WienerPath::index_of_time(Scalar t) const {
  if (t < 0.0) return 0;
  const Scalar x = t / dt();
  const Scalar r = std::round(x);
  if (std::abs(x - r) > 1e-9)
    throw ResolutionError("time " + std::to_string(t) +
                          " is not on the path grid; refine the path");
  return std::min<Index>(size() - 1, static_cast<Index>(r));
}

WienerPath generate_path(u64 seed, u64 stream, Index d1, Index level,
                         Scalar horizon) {
  return WienerPath(seed, stream, d1, level, horizon);
}

WienerPath refine_path(const WienerPath& path, Index extra_levels) {
  if (extra_levels < 0)
    throw ParameterError("refine_path: extra_levels must be >= 0");
  if (extra_levels == 0) return path;

  WienerPath out = path; // copies keys and metadata
  out.level_ = path.level_ + extra_levels;
  const std::size_t n = (std::size_t(1) << out.level_) + 1;
  const Index stride = Index(1) << extra_levels;
  for (Index k = 0; k < out.d1_; ++k) {
    std::vector<Scalar> v(n, 0.0);
    const auto& old = path.values_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < old.size(); ++i)
      v[i * static_cast<std::size_t>(stride)] = old[i];
    out.values_[static_cast<std::size_t>(k)] = std::move(v);
  }
  out.build_levels(path.level_ + 1);
  return out;
}

Scalar oscillation(const SampledPath& path, Scalar s, Scalar t) {
  if (path.values.empty()) throw ParameterError("oscillation: empty path");
  if (s > t) throw ParameterError("oscillation: interval has s > t");
  const Scalar end = path.end_time();
  // Flat continuation below 0; closed interval on the grid.
  const Scalar lo = std::max(s, 0.0);
  if (lo > end + 1e-12 * std::max(1.0, end))
    throw ParameterError("oscillation: interval beyond the path grid");
  if (t < 0.0) return 0.0; // entirely in the flat pre-0 region
  const Scalar hi = std::min(t, end);
  const Index n = static_cast<Index>(path.values.size());
  Index i_lo = static_cast<Index>(std::ceil(lo / path.dt - 1e-9));
  Index i_hi = static_cast<Index>(std::floor(hi / path.dt + 1e-9));
  i_lo = std::clamp<Index>(i_lo, 0, n - 1);
  i_hi = std::clamp<Index>(i_hi, 0, n - 1);
  if (i_lo > i_hi)
    throw ParameterError("oscillation: interval contains no grid point");
  Scalar mn = path.values[static_cast<std::size_t>(i_lo)];
  Scalar mx = mn;
  for (Index i = i_lo + 1; i <= i_hi; ++i) {
    const Scalar x = path.values[static_cast<std::size_t>(i)];
    mn = std::min(mn, x);
    mx = std::max(mx, x);
  }
  // Intervals dipping below 0 see the (flat) value at time 0 as well.
  if (s < 0.0) {
    mn = std::min(mn, path.values.front());
    mx = std::max(mx, path.values.front());
  }
  return mx - mn;
}

Scalar oscillation(const WienerPath& path, Index k, Scalar s, Scalar t) {
  SampledPath p{path.dt(), path.component(k)};
  return oscillation(p, s, t);
}

namespace {

void put_u64(std::ostream& os, u64 x) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((x >> (8 * i)) & 0xFF);
  os.write(reinterpret_cast<const char*>(b), 8);
}

u64 get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  u64 x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<u64>(b[i]) << (8 * i);
  return x;
}

} // namespace

void write_path_binary(const WienerPath& path, std::ostream& os) {
  put_u64(os, std::bit_cast<u64>(path.horizon()));
  put_u64(os, static_cast<u64>(path.level()));
  put_u64(os, static_cast<u64>(path.components()));
  put_u64(os, path.master_seed());
  put_u64(os, path.stream_id());
  for (Index k = 0; k < path.components(); ++k)
    for (Index i = 0; i < path.size(); ++i)
      put_u64(os, std::bit_cast<u64>(path.value(k, i)));
}

WienerPath read_path_binary(std::istream& is) {
  const Scalar horizon = std::bit_cast<Scalar>(get_u64(is));
  const auto level = static_cast<Index>(get_u64(is));
  const auto d1 = static_cast<Index>(get_u64(is));
  const u64 seed = get_u64(is);
  const u64 stream = get_u64(is);
  if (!is) throw ParameterError("read_path_binary: truncated header");
  WienerPath path(seed, stream, d1, level, horizon);
  // The payload is authoritative even though regeneration would match.
  for (Index k = 0; k < d1; ++k)
    for (Index i = 0; i < path.size(); ++i)
      path.values_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          std::bit_cast<Scalar>(get_u64(is));
  if (!is) throw ParameterError("read_path_binary: truncated payload");
  return path;
}

} // namespace lab
