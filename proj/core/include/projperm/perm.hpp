#pragma once

#include "projperm/gf.hpp"
#include "projperm/point.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projperm {

/**
 * A permutation of the q+1 points of the projective line over GF(q).
 *
 * Stored as an image table of length q+1: slots 0..q-1 are field elements
 * by index, slot q is infinity.  Values use the same encoding.
 */
class Permutation {
public:
    /// Validates that the table is a bijection on {0,...,q}.
    explicit Permutation(std::vector<std::uint32_t> table);

    static Permutation identity(std::uint32_t q);

    std::uint32_t q() const { return static_cast<std::uint32_t>(table_.size()) - 1; }
    std::uint32_t points() const { return static_cast<std::uint32_t>(table_.size()); }

    std::uint32_t image(std::uint32_t slot) const { return table_[slot]; }
    Point apply(Point x) const { return Point::from_slot(table_[x.slot(q())], q()); }

    bool is_identity() const;
    bool fixes_infinity() const { return table_.back() == q(); }

    const std::vector<std::uint32_t>& table() const { return table_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint32_t> table_;
};

/// Applies p2 first, then p1.
Permutation compose(const Permutation& p1, const Permutation& p2);
Permutation inverse(const Permutation& p);

/// The star transposition (b, infinity).
Permutation transposition(std::uint32_t q, Elem b);

/// Swap of two arbitrary slots (field index or q for infinity).
Permutation swap_points(std::uint32_t q, std::uint32_t u, std::uint32_t v);

/**
 * Disjoint-cycle structure.  Fixed points are omitted; each cycle is rotated
 * so its minimal slot comes first (infinity ordering last); cycles are sorted
 * by first slot.
 */
struct CycleDecomposition {
    std::uint32_t q = 0;
    std::vector<std::vector<std::uint32_t>> cycles;

    bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Composes the cycles (right-to-left) back into a permutation.
Permutation from_cycles(const CycleDecomposition& d);

/**
 * Word-length data for factorization into star transpositions (b, infinity):
 * moved_points counts points of GF(q) displaced (infinity excluded),
 * orbit_count the nontrivial orbits, and star_length the minimal number of
 * star transpositions: moved_points + orbit_count, less one when infinity
 * itself moves.
 */
struct StarStats {
    std::uint32_t moved_points = 0;
    std::uint32_t orbit_count = 0;
    bool moves_infinity = false;
    std::uint32_t star_length = 0;

    bool operator==(const StarStats&) const = default;
};

StarStats star_stats(const Permutation& p);

/**
 * A minimal factorization into star transpositions: returns (b_1,...,b_m)
 * with p = (b_1,inf) o (b_2,inf) o ... o (b_m,inf), rightmost applied first,
 * and m = star_stats(p).star_length.
 */
std::vector<Elem> star_factorize(const Permutation& p);

/// Composes a star-transposition word (rightmost applied first).
Permutation compose_star_word(std::uint32_t q, const std::vector<Elem>& word);

/// Cycle notation, e.g. "(0 3)(1 2 5)" with "inf" for infinity; identity is "()".
std::string cycle_text(const Permutation& p);

/// One-line notation "perm:s(0),s(1),...,s(q-1),s(inf)".
std::string oneline_text(const Permutation& p);

/// Accepts both notations.
Permutation permutation_from_text(const Field& field, std::string_view text);

} // namespace projperm
