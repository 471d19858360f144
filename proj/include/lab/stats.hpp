#pragma once

#include "lab/rng.hpp"
#include "lab/types.hpp"

#include <span>
#include <vector>

namespace lab {

struct LineFit {
  Scalar slope = 0.0;
  Scalar intercept = 0.0;
  Scalar r2 = 0.0;
  Index n = 0;
};

/// Ordinary least squares of y against x.
LineFit fit_line(std::span<const Scalar> x, std::span<const Scalar> y);

struct MeanSe {
  Scalar mean = 0.0;
  Scalar se = 0.0;
  Index n = 0;
};

/// Sample mean and standard error (fixed summation order).
MeanSe mean_se(std::span<const Scalar> v);

/// Linearly interpolated quantile of a sample, q in [0,1].
Scalar quantile(std::vector<Scalar> v, Scalar q);

Scalar median(std::vector<Scalar> v);

/// Percentile-bootstrap confidence interval for median(a) - median(b),
/// resampling each group independently. Deterministic given (seed, stream).
struct BootstrapCi {
  Scalar lo = 0.0;
  Scalar hi = 0.0;
  Scalar point = 0.0;
};
BootstrapCi bootstrap_median_diff(std::span<const Scalar> a,
                                  std::span<const Scalar> b,
                                  Scalar confidence, Index n_resamples,
                                  u64 seed, u64 stream);

/// Percentile-bootstrap CI for the median of one sample.
BootstrapCi bootstrap_median(std::span<const Scalar> a, Scalar confidence,
                             Index n_resamples, u64 seed, u64 stream);

/// Running max - min over a trailing window of w samples.
/// out[i] = max(v[max(0,i-w+1)..i]) - min(v[max(0,i-w+1)..i]).
void sliding_oscillation(std::span<const Scalar> v, Index w,
                         std::span<Scalar> out);

} // namespace lab
