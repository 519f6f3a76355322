#pragma once

#include "projperm/perm.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace projperm::detail {

/// Unbiased draw from [0, n) by rejection; deterministic given the engine state.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

/// Fisher-Yates shuffle of 0..count-1.
inline std::vector<std::uint32_t> random_range_permutation(std::mt19937_64& rng,
                                                           std::uint32_t count) {
    std::vector<std::uint32_t> t(count);
    for (std::uint32_t i = 0; i < count; ++i) t[i] = i;
    for (std::uint32_t i = count; i > 1; --i) {
        auto j = static_cast<std::uint32_t>(uniform_below(rng, i));
        std::swap(t[i - 1], t[j]);
    }
    return t;
}

/// Uniform permutation of the projective line fixing infinity.
inline Permutation random_permutation_fixing_inf(std::mt19937_64& rng, std::uint32_t q) {
    auto t = random_range_permutation(rng, q);
    t.push_back(q);
    return Permutation(std::move(t));
}

/// Uniform permutation of all q+1 points.
inline Permutation random_full_permutation(std::mt19937_64& rng, std::uint32_t q) {
    return Permutation(random_range_permutation(rng, q + 1));
}

} // namespace projperm::detail
