#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace migraph {

// splitmix64 finalizer over (base, stream). Used to derive per-trial and
// per-purpose sub-seeds so parallel runs are independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// mt19937_64 core (bit-identical everywhere by the standard) with hand-rolled
// bounded draws; std::uniform_*_distribution is implementation-defined and
// would break the same-seed-same-output contract across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53 significant bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n), unbiased via masked rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~0ull >> std::countl_zero(n - 1);
        while (true) {
            std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    Rng fork(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    // Fisher-Yates; std::shuffle is not reproducible across standard libraries.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace migraph
