#pragma once

#include <vector>

#include "migraph/combinatorics.hpp"
#include "migraph/rng.hpp"

namespace migraph {

// Sampler for the block-count distribution prob(M = m) = m^n / (e m! B_n),
// m >= 1. Weights are accumulated in log space; the infinite support is
// truncated once the tail falls below 1e-12 relative to the mode, and the
// normalizer is checked against the exact Bell number whenever n is within
// the Bell bound.
class BlockCountSampler {
  public:
    explicit BlockCountSampler(int n);  // OutOfRange for n < 1

    int sample(Rng& rng) const;

    // pmf()[i] = prob(M = i + 1).
    const std::vector<double>& pmf() const { return pmf_; }

    // log B_n implied by the weight sum (diagnostic; matches bell() to ~1e-12).
    double log_bell_estimate() const { return log_bell_; }

  private:
    std::vector<double> pmf_;
    std::vector<double> cum_;
    double log_bell_ = 0.0;
};

// One draw of M for a fresh sampler; prefer a shared BlockCountSampler in loops.
int sample_block_count(int n, Rng& rng);

// Uniform random set partition of {1..n}: draw M, then throw n labeled items
// independently and uniformly into M boxes and keep the non-empty ones.
Partition sample_uniform_partition(int n, Rng& rng);
Partition sample_uniform_partition(const BlockCountSampler& sampler, int n, Rng& rng);

// Block count of a partition drawn exactly as above, without materializing it.
int sample_partition_block_count(const BlockCountSampler& sampler, int n, Rng& rng);

// Pearson statistic sum (o-e)^2/e; sizes must match, expected all positive.
double chi_square_statistic(const std::vector<long long>& observed,
                            const std::vector<double>& expected);

// Upper tail prob(X >= x) for chi-square with df degrees of freedom,
// via the regularized incomplete gamma function Q(df/2, x/2).
double chi_square_survival(double x, int df);

}  // namespace migraph
