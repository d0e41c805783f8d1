#ifndef DISTDYN_STATS_HPP
#define DISTDYN_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace distdyn::stats {

// Normalized weight vector 1/n, ..., 1/n.
std::vector<double> uniform_weights(std::size_t n);

// Checks w >= 0 and sum(w) == 1 within tolerance; throws InvalidWeights.
void validate_weights(std::span<const double> w, std::size_t n);

double weighted_mean(std::span<const double> x, std::span<const double> w);

// Reliability-weighted standard deviation: variance divisor is 1 - sum(w^2).
// Reduces to the divisor-(n-1) sample standard deviation under uniform weights.
double weighted_stddev(std::span<const double> x, std::span<const double> w);

// Weighted quantile with linear interpolation between order statistics.
// Order statistic i (sorted by x, cumulative weight C_i) sits at position
// C_{i-1} / C_{n-1}; under uniform weights this is (i-1)/(n-1), the usual
// interpolated sample quantile.
double weighted_quantile(std::span<const double> x, std::span<const double> w, double q);

// 1 / sum(w^2) for normalized weights; equals n when weights are uniform.
double effective_sample_size(std::span<const double> w);

// Silverman rule of thumb: h = 0.9 * min(s, IQR/1.34) * n_eff^(-1/5).
// Falls back to s alone when the IQR is zero but the sample still has spread.
// Empty `w` means uniform weights.
double silverman_bandwidth(std::span<const double> x, std::span<const double> w = {});

}  // namespace distdyn::stats

#endif
