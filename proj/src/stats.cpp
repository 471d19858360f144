#include "lab/stats.hpp"

#include "lab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace lab {

LineFit fit_line(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("fit_line: need two samples of equal length >= 2");
  const Index n = static_cast<Index>(x.size());
  Scalar sx = 0, sy = 0;
  for (Index i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const Scalar mx = sx / n, my = sy / n;
  Scalar sxx = 0, sxy = 0, syy = 0;
  for (Index i = 0; i < n; ++i) {
    const Scalar dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ParameterError("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  f.n = n;
  return f;
}

MeanSe mean_se(std::span<const Scalar> v) {
  if (v.empty()) throw ParameterError("mean_se: empty sample");
  MeanSe m;
  m.n = static_cast<Index>(v.size());
  Scalar s = 0;
  for (Scalar x : v) s += x;
  m.mean = s / m.n;
  if (m.n > 1) {
    Scalar ss = 0;
    for (Scalar x : v) ss += (x - m.mean) * (x - m.mean);
    m.se = std::sqrt(ss / (m.n - 1) / m.n);
  }
  return m;
}

Scalar quantile(std::vector<Scalar> v, Scalar q) {
  if (v.empty()) throw ParameterError("quantile: empty sample");
  if (q < 0.0 || q > 1.0) throw ParameterError("quantile: q outside [0,1]");
  std::sort(v.begin(), v.end());
  const Scalar pos = q * static_cast<Scalar>(v.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const Scalar w = pos - static_cast<Scalar>(i);
  return v[i] * (1.0 - w) + v[i + 1] * w;
}

Scalar median(std::vector<Scalar> v) { return quantile(std::move(v), 0.5); }

namespace {

Scalar resampled_median(std::span<const Scalar> v, u64 seed, u64 stream,
                        u64 tag) {
  std::vector<Scalar> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const u64 h = rng::mix_key(seed, stream, tag, i);
    r[i] = v[h % v.size()];
  }
  return median(std::move(r));
}

} // namespace

BootstrapCi bootstrap_median_diff(std::span<const Scalar> a,
                                  std::span<const Scalar> b,
                                  Scalar confidence, Index n_resamples,
                                  u64 seed, u64 stream) {
  if (a.empty() || b.empty())
    throw ParameterError("bootstrap_median_diff: empty sample");
  std::vector<Scalar> diffs(static_cast<std::size_t>(n_resamples));
  for (Index k = 0; k < n_resamples; ++k) {
    const u64 tag_a = 2 * static_cast<u64>(k);
    const u64 tag_b = 2 * static_cast<u64>(k) + 1;
    diffs[static_cast<std::size_t>(k)] =
        resampled_median(a, seed, stream, tag_a) -
        resampled_median(b, seed, rng::substream(stream, 1), tag_b);
  }
  const Scalar alpha = (1.0 - confidence) / 2.0;
  BootstrapCi ci;
  ci.lo = quantile(diffs, alpha);
  ci.hi = quantile(diffs, 1.0 - alpha);
  ci.point = median({a.begin(), a.end()}) - median({b.begin(), b.end()});
  return ci;
}

BootstrapCi bootstrap_median(std::span<const Scalar> a, Scalar confidence,
                             Index n_resamples, u64 seed, u64 stream) {
  if (a.empty()) throw ParameterError("bootstrap_median: empty sample");
  std::vector<Scalar> meds(static_cast<std::size_t>(n_resamples));
  for (Index k = 0; k < n_resamples; ++k)
    meds[static_cast<std::size_t>(k)] =
        resampled_median(a, seed, stream, static_cast<u64>(k));
  const Scalar alpha = (1.0 - confidence) / 2.0;
  BootstrapCi ci;
  ci.lo = quantile(meds, alpha);
  ci.hi = quantile(meds, 1.0 - alpha);
  ci.point = median({a.begin(), a.end()});
  return ci;
}

void sliding_oscillation(std::span<const Scalar> v, Index w,
                         std::span<Scalar> out) {
  if (w < 1) throw ParameterError("sliding_oscillation: window < 1");
  if (out.size() != v.size())
    throw ParameterError("sliding_oscillation: output size mismatch");
  std::deque<Index> maxq, minq; // indices, values monotone
  const Index n = static_cast<Index>(v.size());
  for (Index i = 0; i < n; ++i) {
    while (!maxq.empty() && v[maxq.back()] <= v[i]) maxq.pop_back();
    maxq.push_back(i);
    while (!minq.empty() && v[minq.back()] >= v[i]) minq.pop_back();
    minq.push_back(i);
    const Index lo = i - w + 1;
    if (maxq.front() < lo) maxq.pop_front();
    if (minq.front() < lo) minq.pop_front();
    out[i] = v[maxq.front()] - v[minq.front()];
  }
}

} // namespace lab
