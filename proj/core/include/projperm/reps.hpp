#pragma once

#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace projperm {

/**
 * Algebraic chain representation:
 *   mu o invstar o (x - a_k) o invstar o ... o invstar o (x - a_1),
 * rightmost applied first; an empty shift list denotes mu alone.
 */
struct AlgebraicRep {
    Mobius mu;
    std::vector<Elem> shifts;   // a_1, ..., a_k

    bool operator==(const AlgebraicRep&) const = default;
};

/**
 * Combinatorial chain representation:
 *   nu o (b_1, inf) o (b_2, inf) o ... o (b_k, inf),
 * rightmost applied first; an empty swap list denotes nu alone.
 */
struct CombinatorialRep {
    Mobius nu;
    std::vector<Elem> swaps;    // b_1, ..., b_k

    bool operator==(const CombinatorialRep&) const = default;
};

Permutation eval_algebraic(const Field& field, const AlgebraicRep& r);
Permutation eval_combinatorial(const Field& field, const CombinatorialRep& r);

/**
 * Coefficient map from shift lists to swap lists:
 * b_i = c_{i,i} with c_{i,0} = 0 and c_{i,j} = inv0(c_{i,j-1}) + a_{i-j+1}.
 */
std::vector<Elem> shifts_to_swaps(const Field& field, const std::vector<Elem>& shifts);

/**
 * The inverse coefficient map: a_i is the first entry of the (i-1)-fold
 * difference-inverse iterate of the swap list.
 */
std::vector<Elem> swaps_to_shifts(const Field& field, const std::vector<Elem>& swaps);

/// (e_1,...,e_l) -> (inv0(e_2-e_1), ..., inv0(e_l-e_1)); requires l >= 2.
std::vector<Elem> diff_inverse_step(const Field& field, const std::vector<Elem>& e);

/**
 * Rewrites an algebraic chain as a combinatorial one inducing the same
 * permutation: swaps = shifts_to_swaps(shifts) and
 * nu = mu o 1/x o (x-a_k) o 1/x o (x-a_{k-1}) o ... o 1/x o (x-a_1).
 */
CombinatorialRep to_combinatorial(const Field& field, const AlgebraicRep& r);

/**
 * The inverse rewrite: shifts = swaps_to_shifts(swaps) and
 * mu = nu o (x+a_1) o 1/x o (x+a_2) o 1/x o ... o (x+a_k) o 1/x.
 */
AlgebraicRep to_algebraic(const Field& field, const CombinatorialRep& r);

/**
 * All length-k algebraic (resp. combinatorial) representations of sigma,
 * sorted by coefficient tuple.  Guards: 1 <= k <= 4 and q <= 9.
 */
std::vector<AlgebraicRep> enumerate_algebraic(const Field& field, const Permutation& sigma,
                                              std::uint32_t k);
std::vector<CombinatorialRep> enumerate_combinatorial(const Field& field,
                                                      const Permutation& sigma,
                                                      std::uint32_t k);

/// "alg: mu=<map>; a=[...]" / "comb: nu=<map>; b=[...]".
std::string algebraic_text(const AlgebraicRep& r);
std::string combinatorial_text(const CombinatorialRep& r);
AlgebraicRep algebraic_from_text(const Field& field, std::string_view text);
CombinatorialRep combinatorial_from_text(const Field& field, std::string_view text);

} // namespace projperm
