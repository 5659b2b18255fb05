#include "migraph/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "migraph/errors.hpp"

namespace migraph {

BlockCountSampler::BlockCountSampler(int n) {
    if (n < 1) throw OutOfRange("block-count sampler requires n >= 1");

    // Unnormalized log weight of m boxes: n ln m - ln m!. Unimodal in m, so
    // scan past the running maximum until the tail drops below 1e-12 of it.
    std::vector<double> logw;
    double best = -HUGE_VAL;
    const double cutoff = std::log(1e-12);
    for (int m = 1;; ++m) {
        double lw = n * std::log(static_cast<double>(m)) - std::lgamma(static_cast<double>(m) + 1);
        if (lw > best) best = lw;
        if (lw - best < cutoff) break;
        logw.push_back(lw);
    }

    double sum = 0.0;
    for (double lw : logw) sum += std::exp(lw - best);
    const double log_sum = best + std::log(sum);  // log(e B_n) by Dobinski's formula
    log_bell_ = log_sum - 1.0;

    if (n <= static_cast<int>(kCombinatoricsBound)) {
        double exact = log_of(bell(static_cast<unsigned>(n)));
        if (std::abs(log_bell_ - exact) > 1e-9)
            throw NoConvergence("block-count weights normalize to log " +
                                std::to_string(log_bell_) + ", expected log B_n = " +
                                std::to_string(exact));
    }

    pmf_.reserve(logw.size());
    cum_.reserve(logw.size());
    double acc = 0.0;
    for (double lw : logw) {
        double p = std::exp(lw - log_sum);
        pmf_.push_back(p);
        acc += p;
        cum_.push_back(acc);
    }
    cum_.back() = 1.0;
}

int BlockCountSampler::sample(Rng& rng) const {
    double u = rng.next_unit();
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    if (it == cum_.end()) --it;
    return static_cast<int>(it - cum_.begin()) + 1;
}

int sample_block_count(int n, Rng& rng) {
    return BlockCountSampler(n).sample(rng);
}

Partition sample_uniform_partition(const BlockCountSampler& sampler, int n, Rng& rng) {
    int m = sampler.sample(rng);
    std::vector<std::vector<int>> boxes(m);
    for (int item = 1; item <= n; ++item)
        boxes[rng.below(static_cast<std::uint64_t>(m))].push_back(item);
    std::vector<std::vector<int>> blocks;
    for (auto& box : boxes)
        if (!box.empty()) blocks.push_back(std::move(box));
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return Partition{std::move(blocks), n};
}

Partition sample_uniform_partition(int n, Rng& rng) {
    if (n < 1) throw OutOfRange("partition sampling requires n >= 1");
    BlockCountSampler sampler(n);
    return sample_uniform_partition(sampler, n, rng);
}

int sample_partition_block_count(const BlockCountSampler& sampler, int n, Rng& rng) {
    int m = sampler.sample(rng);
    std::vector<char> used(m, 0);
    int distinct = 0;
    for (int item = 0; item < n; ++item) {
        auto box = rng.below(static_cast<std::uint64_t>(m));
        if (!used[box]) {
            used[box] = 1;
            ++distinct;
        }
    }
    return distinct;
}

double chi_square_statistic(const std::vector<long long>& observed,
                            const std::vector<double>& expected) {
    if (observed.size() != expected.size())
        throw OutOfRange("observed and expected cell counts differ in length");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw OutOfRange("expected cell count must be positive");
        double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

namespace {

// Regularized incomplete gamma: series for P(a,x) when x < a + 1, Lentz
// continued fraction for Q(a,x) otherwise.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NoConvergence("incomplete gamma series did not converge");
}

double gamma_q_fraction(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NoConvergence("incomplete gamma continued fraction did not converge");
}

}  // namespace

double chi_square_survival(double x, int df) {
    if (df < 1) throw OutOfRange("chi-square needs df >= 1");
    if (x <= 0.0) return 1.0;
    double a = df / 2.0;
    double half = x / 2.0;
    if (half < a + 1.0) return 1.0 - gamma_p_series(a, half);
    return gamma_q_fraction(a, half);
}

}  // namespace migraph
