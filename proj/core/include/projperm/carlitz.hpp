#pragma once

#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace projperm {

/**
 * Exact rank of a permutation of GF(q) (extended to fix infinity): the least
 * k admitting a combinatorial representation with k star transpositions,
 * equivalently the least number of inner x^{q-2} factors in a chain of
 * degree-one polynomials and x^{q-2} inducing it.
 */
struct RankResult {
    std::uint32_t rank = 0;
    CombinatorialRep witness;   // evaluates to the input; swap list has length rank
    std::string method;         // "pgl-scan" or "bfs-oracle"
};

/// Star-word bound for mu o sigma from the statistics of sigma alone.
struct CrankBound {
    StarStats stats;            // of sigma; stats.star_length is the bound
    bool exact = false;         // q >= star_length + moved_points + 2
};

/**
 * Rank by scanning all of PGL(2, q): minimizes the star length of
 * nu^{-1} o f over every degree-one nu, tie-broken to the canonically
 * smallest nu.  Requires f to fix infinity; guarded to q <= 64.
 */
RankResult carlitz_rank(const Field& field, const Permutation& f);

/**
 * Independent check: breadth-first search over permutations of GF(q),
 * level 0 the q(q-1) degree-one polynomial maps, each next level obtained
 * by one more x^{q-2} factor.  Shares no code path with the scan above.
 * Guarded to q <= 9; reusable across queries.
 */
class RankOracle {
public:
    explicit RankOracle(const Field& field);

    /// BFS level of f (which must fix infinity); grows the search on demand
    /// and refuses to pass max_depth.
    std::uint32_t rank(const Permutation& f, std::uint32_t max_depth);

private:
    void grow();

    std::uint32_t q_;
    std::vector<std::uint8_t> invstar_;
    std::vector<std::vector<std::uint8_t>> affine_;
    std::unordered_map<std::uint64_t, std::uint32_t> level_;
    std::vector<std::uint64_t> frontier_;
    std::uint32_t depth_ = 0;
    bool exhausted_ = false;
};

/// One-shot oracle query with the default depth guard q + 2.
std::uint32_t carlitz_rank_oracle(const Field& field, const Permutation& f);
std::uint32_t carlitz_rank_oracle(const Field& field, const Permutation& f,
                                  std::uint32_t max_depth);

/**
 * Rank bound for the composite mu o sigma (which must fix infinity), from
 * the star statistics of sigma; exact when q >= star_length + moved + 2.
 */
CrankBound crank_bound(const Field& field, const Mobius& mu, const Permutation& sigma);

/**
 * Constructive decomposition: star-factorizes f and rewrites the swap word
 * as an algebraic chain whose outer map is a degree-one polynomial.  The
 * chain length equals star_stats(f).star_length.
 */
AlgebraicRep carlitz_decompose(const Field& field, const Permutation& f);

/**
 * The classical expansions of the 2-cycle (0 a), a != 0, as algebraic
 * chains of length 3: swap word [a, 0, a] with outer map -a^2*x, and
 * swap word [0, a, 0] with outer map -a^2*x + a.  Each result is verified
 * against those closed forms and against the transposition itself.
 */
AlgebraicRep carlitz_identity(const Field& field, Elem a);
AlgebraicRep zieve_identity(const Field& field, Elem a);

/// Histogram of ranks over all q! permutations of GF(q); guarded to q <= 6.
std::map<std::uint32_t, std::uint64_t> rank_distribution_exhaustive(const Field& field);

/// Histogram over `count` seeded uniform samples (counts, not estimates).
std::map<std::uint32_t, std::uint64_t> rank_distribution_sampled(const Field& field,
                                                                 std::uint64_t count,
                                                                 std::uint64_t seed);

} // namespace projperm
