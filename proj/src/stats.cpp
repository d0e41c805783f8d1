#include "distdyn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distdyn/errors.hpp"

namespace distdyn::stats {

std::vector<double> uniform_weights(std::size_t n) {
  return std::vector<double>(n, n ? 1.0 / static_cast<double>(n) : 0.0);
}

void validate_weights(std::span<const double> w, std::size_t n) {
  if (w.size() != n) throw InvalidWeights("weight vector length mismatch");
  double sum = 0.0;
  for (double wi : w) {
    if (wi < 0.0 || !std::isfinite(wi)) throw InvalidWeights("negative or non-finite weight");
    sum += wi;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidWeights("weights do not sum to 1");
}

double weighted_mean(std::span<const double> x, std::span<const double> w) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m += w[i] * x[i];
  return m;
}

double weighted_stddev(std::span<const double> x, std::span<const double> w) {
  const double mu = weighted_mean(x, w);
  double ss = 0.0, w2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - mu;
    ss += w[i] * d * d;
    w2 += w[i] * w[i];
  }
  const double denom = 1.0 - w2;
  if (denom <= 0.0) throw InsufficientData("fewer than two effective observations");
  return std::sqrt(ss / denom);
}

double weighted_quantile(std::span<const double> x, std::span<const double> w, double q) {
  const std::size_t n = x.size();
  if (n == 0) throw InsufficientData("empty sample");
  if (n == 1) return x[0];
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  // positions p_i = C_{i-1} / C_{n-1}, C_0 = 0
  std::vector<double> pos(n), xs(n);
  double cum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = cum;
    cum += w[idx[i]];
    xs[i] = x[idx[i]];
  }
  const double scale = pos[n - 1];
  if (scale <= 0.0) throw InvalidWeights("all weight on the largest observation");
  for (double& p : pos) p /= scale;

  q = std::clamp(q, 0.0, 1.0);
  auto it = std::lower_bound(pos.begin(), pos.end(), q);
  if (it == pos.begin()) return xs.front();
  if (it == pos.end()) return xs.back();
  const std::size_t hi = static_cast<std::size_t>(it - pos.begin());
  const std::size_t lo = hi - 1;
  const double span = pos[hi] - pos[lo];
  const double t = span > 0.0 ? (q - pos[lo]) / span : 0.0;
  return xs[lo] + t * (xs[hi] - xs[lo]);
}

double effective_sample_size(std::span<const double> w) {
  double w2 = 0.0;
  for (double wi : w) w2 += wi * wi;
  if (w2 <= 0.0) throw InvalidWeights("zero weight vector");
  return 1.0 / w2;
}

double silverman_bandwidth(std::span<const double> x, std::span<const double> w) {
  const std::size_t n = x.size();
  if (n < 2) throw InsufficientData("bandwidth needs at least two observations");
  std::vector<double> wu;
  if (w.empty()) {
    wu = uniform_weights(n);
    w = wu;
  }
  validate_weights(w, n);

  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  if (*mn == *mx) throw DegenerateSample("all sample values identical");

  const double s = weighted_stddev(x, w);
  const double iqr = weighted_quantile(x, w, 0.75) - weighted_quantile(x, w, 0.25);
  const double spread = iqr > 0.0 ? std::min(s, iqr / 1.34) : s;
  const double n_eff = effective_sample_size(w);
  return 0.9 * spread * std::pow(n_eff, -0.2);
}

}  // namespace distdyn::stats
