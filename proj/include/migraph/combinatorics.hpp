#pragma once

#include <functional>
#include <vector>

#include "migraph/bigint.hpp"

namespace migraph {

inline constexpr unsigned kCombinatoricsBound = 2000;

// Exact Bell number B_n via the Bell triangle; results are cached.
BigInt bell(unsigned n, unsigned bound = kCombinatoricsBound);

// Exact Stirling number of the second kind {n k}.
BigInt stirling2(unsigned n, unsigned k, unsigned bound = kCombinatoricsBound);

// Full row {n 0}, {n 1}, ..., {n n}.
std::vector<BigInt> stirling_row(unsigned n, unsigned bound = kCombinatoricsBound);

// m (m-1) ... (m-k+1); 1 for k = 0.
BigInt falling_factorial(const BigInt& m, unsigned k);

// Set partition of {1..n} in canonical form: blocks ordered by smallest
// element, each block ascending.
struct Partition {
    std::vector<std::vector<int>> blocks;
    int n = 0;

    std::size_t block_count() const { return blocks.size(); }
    bool operator==(const Partition&) const = default;
};

// Validates block structure and returns the canonical form.
Partition canonical_partition(std::vector<std::vector<int>> blocks, int n);

// prob(uniform assignment of n items into m boxes realizes exactly p):
// m falling k / m^n.
BigRat partition_probability(int n, int m, const Partition& p);

// prob(that assignment has exactly k non-empty boxes): {n k} m falling k / m^n.
BigRat block_count_probability(int n, int m, int k);

// Restricted-growth-string view of a canonical partition: rgs[i] = index of
// the block containing item i+1.
std::vector<int> rgs_of(const Partition& p);
Partition partition_from_rgs(const std::vector<int>& rgs);

// Enumerates every partition of {1..n} as a restricted growth string, in
// lexicographic RGS order. Capped (BoundExceeded) because the count is B_n.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

// Materialized list of all B_n partitions in RGS order; tighter cap.
std::vector<Partition> all_partitions(int n);

}  // namespace migraph
