#pragma once

// Deterministic cross-platform RNG (splitmix64) plus random matrix makers
// shared by the fuzz command and the property tests.  std::mt19937 is avoided
// because distribution outputs are not pinned across standard libraries.

#include <cstdint>

#include "acg/int_matrix.hpp"

namespace acg {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

  private:
    std::uint64_t state_;
};

inline IntMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                               long long entry_bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = BigInt(rng.in_range(-entry_bound, entry_bound));
    return m;
}

// Product of random shears, swaps and negations: determinant +/-1 always.
inline IntMatrix random_unimodular(SplitMix64& rng, std::size_t n, long long shear_bound,
                                   std::size_t steps = 8) {
    IntMatrix u = IntMatrix::identity(n);
    if (n == 1) {
        if (rng.below(2) == 1) u.negate_col(0);
        return u;
    }
    for (std::size_t s = 0; s < steps; ++s) {
        switch (rng.below(3)) {
            case 0: {
                std::size_t a = rng.below(n);
                std::size_t b = rng.below(n - 1);
                if (b >= a) ++b;
                u.add_col_multiple(a, b, BigInt(rng.in_range(-shear_bound, shear_bound)));
                break;
            }
            case 1: {
                std::size_t a = rng.below(n);
                std::size_t b = rng.below(n - 1);
                if (b >= a) ++b;
                u.swap_cols(a, b);
                break;
            }
            default:
                u.negate_col(rng.below(n));
        }
    }
    return u;
}

inline IntMatrix random_signed_permutation(SplitMix64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    IntMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        p.at(i, perm[i]) = rng.below(2) == 0 ? BigInt(1) : BigInt(-1);
    return p;
}

}  // namespace acg
