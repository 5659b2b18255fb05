#include "migraph/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "migraph/errors.hpp"

namespace migraph {

double log_of(const BigInt& x) {
    if (x <= 0) throw OutOfRange("log_of requires a positive value");
    unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 1000) return std::log(x.convert_to<double>());
    unsigned shift = bits - 53;
    double top = (x >> shift).convert_to<double>();
    return std::log(top) + shift * 0.6931471805599453094;
}

namespace {

// Bell triangle; row i ends with B_{i+1}. Only the last row is kept, every
// B_n seen so far is cached.
struct BellCache {
    std::mutex mutex;
    std::vector<BigInt> bells{BigInt(1)};  // bells[n] = B_n
    std::vector<BigInt> row{BigInt(1)};    // triangle row for bells.size() - 1
};

BellCache& bell_cache() {
    static BellCache cache;
    return cache;
}

}  // namespace

BigInt bell(unsigned n, unsigned bound) {
    if (n > bound)
        throw BoundExceeded("bell(" + std::to_string(n) + ") exceeds bound " +
                            std::to_string(bound));
    BellCache& cache = bell_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    // invariant: row is triangle row bells.size() - 1, whose last entry is
    // B_{bells.size()}
    while (cache.bells.size() <= n) {
        cache.bells.push_back(cache.row.back());
        std::vector<BigInt> next(cache.row.size() + 1);
        next[0] = cache.row.back();
        for (std::size_t j = 0; j < cache.row.size(); ++j) next[j + 1] = next[j] + cache.row[j];
        cache.row = std::move(next);
    }
    return cache.bells[n];
}

std::vector<BigInt> stirling_row(unsigned n, unsigned bound) {
    if (n > bound)
        throw BoundExceeded("stirling2 row " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
    std::vector<BigInt> row{BigInt(1)};  // {0 0} = 1
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigInt> next(i + 1);
        next[0] = 0;
        for (unsigned k = 1; k <= i; ++k)
            next[k] = BigInt(k) * (k < row.size() ? row[k] : BigInt(0)) + row[k - 1];
        row = std::move(next);
    }
    return row;
}

BigInt stirling2(unsigned n, unsigned k, unsigned bound) {
    if (n > bound)
        throw BoundExceeded("stirling2(" + std::to_string(n) + ", " + std::to_string(k) +
                            ") exceeds bound " + std::to_string(bound));
    if (k > n) return 0;
    return stirling_row(n, bound)[k];
}

BigInt falling_factorial(const BigInt& m, unsigned k) {
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) result *= m - i;
    return result;
}

Partition canonical_partition(std::vector<std::vector<int>> blocks, int n) {
    if (n < 0) throw InvalidPartition("ground-set size must be non-negative");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::size_t total = 0;
    for (auto& block : blocks) {
        if (block.empty()) throw InvalidPartition("partition contains an empty block");
        std::sort(block.begin(), block.end());
        for (int item : block) {
            if (item < 1 || item > n)
                throw InvalidPartition("item " + std::to_string(item) + " outside 1.." +
                                       std::to_string(n));
            if (seen[item])
                throw InvalidPartition("item " + std::to_string(item) + " appears twice");
            seen[item] = 1;
        }
        total += block.size();
    }
    if (total != static_cast<std::size_t>(n))
        throw InvalidPartition("blocks cover " + std::to_string(total) + " of " +
                               std::to_string(n) + " items");
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return Partition{std::move(blocks), n};
}

BigRat partition_probability(int n, int m, const Partition& p) {
    if (n < 1 || m < 1) throw OutOfRange("partition_probability requires n >= 1 and m >= 1");
    Partition canonical = canonical_partition(p.blocks, n);
    int k = static_cast<int>(canonical.block_count());
    if (k > m)
        throw TooManyBlocks("partition has " + std::to_string(k) + " blocks but only " +
                            std::to_string(m) + " boxes");
    BigInt numerator = falling_factorial(BigInt(m), static_cast<unsigned>(k));
    BigInt denominator = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n));
    return BigRat(numerator, denominator);
}

BigRat block_count_probability(int n, int m, int k) {
    if (n < 1 || m < 1) throw OutOfRange("block_count_probability requires n >= 1 and m >= 1");
    if (k < 1 || k > std::min(n, m))
        throw OutOfRange("block count " + std::to_string(k) + " outside 1..min(" +
                         std::to_string(n) + ", " + std::to_string(m) + ")");
    BigInt numerator =
        stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
        falling_factorial(BigInt(m), static_cast<unsigned>(k));
    BigInt denominator = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n));
    return BigRat(numerator, denominator);
}

std::vector<int> rgs_of(const Partition& p) {
    std::vector<int> rgs(p.n);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int item : p.blocks[b]) rgs[item - 1] = static_cast<int>(b);
    return rgs;
}

Partition partition_from_rgs(const std::vector<int>& rgs) {
    int blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> result(blocks);
    for (std::size_t i = 0; i < rgs.size(); ++i) result[rgs[i]].push_back(static_cast<int>(i) + 1);
    return canonical_partition(std::move(result), static_cast<int>(rgs.size()));
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 0 || n > 13)
        throw BoundExceeded("partition enumeration capped at n = 13, got " + std::to_string(n));
    if (n == 0) {
        fn({});
        return;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);  // max of rgs[0..i]
    int i = n - 1;
    while (true) {
        fn(rgs);
        // advance to the next restricted growth string
        i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

std::vector<Partition> all_partitions(int n) {
    if (n < 0 || n > 10)
        throw BoundExceeded("materializing partitions capped at n = 10, got " +
                            std::to_string(n));
    std::vector<Partition> result;
    for_each_partition(n, [&](const std::vector<int>& rgs) {
        result.push_back(partition_from_rgs(rgs));
    });
    return result;
}

}  // namespace migraph
