#include <doctest.h>

#include "projperm/carlitz.hpp"
#include "projperm/errors.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"

#include <stdexcept>

using namespace projperm;

TEST_CASE("rank of frozen examples") {
    Field f7(7, 1);
    RankResult r = carlitz_rank(f7, swap_points(7, 0, 1));
    CHECK(r.rank == 3);
    CHECK(r.method == "pgl-scan");
    CHECK(r.witness.swaps.size() == 3);
    CHECK(eval_combinatorial(f7, r.witness) == swap_points(7, 0, 1));

    Field f5(5, 1);
    RankResult inv = carlitz_rank(f5, invstar_permutation(f5));
    CHECK(inv.rank == 1);
    CHECK(eval_combinatorial(f5, inv.witness) == invstar_permutation(f5));

    Permutation affine = to_permutation(f7, Mobius::linear(f7, 3, 2));
    RankResult a = carlitz_rank(f7, affine);
    CHECK(a.rank == 0);
    CHECK(a.witness.swaps.empty());
    CHECK(a.witness.nu == Mobius::linear(f7, 3, 2));

    CHECK(carlitz_rank(f5, Permutation::identity(5)).rank == 0);
    CHECK_THROWS_AS(carlitz_rank(f5, swap_points(5, 0, 5)), std::invalid_argument);
}

TEST_CASE("independent breadth-first search agrees") {
    Field f7(7, 1);
    CHECK(carlitz_rank_oracle(f7, Permutation::identity(7)) == 0);
    CHECK(carlitz_rank_oracle(f7, to_permutation(f7, Mobius::linear(f7, 3, 2))) == 0);
    CHECK(carlitz_rank_oracle(f7, swap_points(7, 0, 1)) == 3);
    CHECK(carlitz_rank_oracle(f7, invstar_permutation(f7)) == 1);

    RankOracle oracle(f7);
    CHECK_THROWS_AS(oracle.rank(swap_points(7, 0, 1), 2), guard_error);
    // The same oracle instance keeps its explored levels usable.
    CHECK(oracle.rank(swap_points(7, 0, 1), 14) == 3);
    CHECK(oracle.rank(invstar_permutation(f7), 14) == 1);

    Field f16(2, 4);
    CHECK_THROWS_AS((void)RankOracle(f16), guard_error);
    CHECK_THROWS_AS(carlitz_rank_oracle(f7, swap_points(7, 0, 7)),
                    std::invalid_argument);
}

TEST_CASE("bound from star statistics") {
    Field f7(7, 1);
    CrankBound b = crank_bound(f7, Mobius::identity(f7), swap_points(7, 0, 1));
    CHECK(b.stats.moved_points == 2);
    CHECK(b.stats.orbit_count == 1);
    CHECK(b.stats.star_length == 3);
    CHECK(b.exact);

    Field f5(5, 1);
    CrankBound b5 = crank_bound(f5, Mobius::identity(f5), swap_points(5, 0, 1));
    CHECK(b5.stats.star_length == 3);
    CHECK_FALSE(b5.exact);

    CrankBound id = crank_bound(f5, Mobius::linear(f5, 2, 1), Permutation::identity(5));
    CHECK(id.stats.star_length == 0);
    CHECK(id.exact);

    // sigma may move infinity as long as mu moves it back.
    Permutation moving = swap_points(5, 0, 5);
    CrankBound mixed = crank_bound(f5, Mobius::reciprocal(f5), moving);
    CHECK(mixed.stats.star_length == 1);
    CHECK(carlitz_rank(f5, compose(to_permutation(f5, Mobius::reciprocal(f5)), moving))
              .rank <= mixed.stats.star_length);

    CHECK_THROWS_AS(crank_bound(f5, Mobius::reciprocal(f5), Permutation::identity(5)),
                    std::invalid_argument);
}

TEST_CASE("constructive decomposition") {
    Field f5(5, 1);
    AlgebraicRep id = carlitz_decompose(f5, Permutation::identity(5));
    CHECK(id.shifts.empty());
    CHECK(id.mu.is_identity());

    AlgebraicRep two = carlitz_decompose(f5, swap_points(5, 0, 2));
    CHECK(two.shifts.size() == 3);
    CHECK(two.mu.is_polynomial());
    CHECK(eval_algebraic(f5, two) == swap_points(5, 0, 2));
    CHECK(two == zieve_identity(f5, 2));

    Field f7(7, 1);
    Permutation p = from_cycles({7, {{0, 1, 2}, {3, 4}}});
    AlgebraicRep rep = carlitz_decompose(f7, p);
    CHECK(rep.shifts.size() == 7);
    CHECK(rep.mu.is_polynomial());
    CHECK(eval_algebraic(f7, rep) == p);

    CHECK_THROWS_AS(carlitz_decompose(f5, swap_points(5, 0, 5)), std::invalid_argument);
}

TEST_CASE("corrupting a chain is caught by re-evaluation") {
    Field f(7, 1);
    Permutation p = from_cycles({7, {{0, 1, 2}, {3, 4}}});
    AlgebraicRep rep = carlitz_decompose(f, p);
    AlgebraicRep bad = rep;
    bad.shifts[0] = f.add(bad.shifts[0], 1);
    CHECK(eval_algebraic(f, bad) != p);
    AlgebraicRep bad_mu = rep;
    bad_mu.mu = compose(f, Mobius::translation(f, 1), rep.mu);
    CHECK(eval_algebraic(f, bad_mu) != p);
    RankResult r = carlitz_rank(f, p);
    CombinatorialRep bad_witness = r.witness;
    bad_witness.swaps.push_back(0);
    CHECK(eval_combinatorial(f, bad_witness) != p);
}

TEST_CASE("classical two-cycle chains") {
    Field f(5, 1);
    AlgebraicRep c = carlitz_identity(f, 2);
    CHECK(algebraic_text(c) == "alg: mu=1*x+0; a=[2,2,2]");
    CHECK(eval_algebraic(f, c) == swap_points(5, 0, 2));
    AlgebraicRep z = zieve_identity(f, 2);
    CHECK(algebraic_text(z) == "alg: mu=1*x+2; a=[0,3,3]");
    CHECK(eval_algebraic(f, z) == swap_points(5, 0, 2));

    Field f9(3, 2);
    for (Elem a = 1; a < 9; ++a) {
        CHECK(eval_algebraic(f9, carlitz_identity(f9, a)) == swap_points(9, 0, a));
        CHECK(eval_algebraic(f9, zieve_identity(f9, a)) == swap_points(9, 0, a));
    }

    CHECK_THROWS_AS(carlitz_identity(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(zieve_identity(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(carlitz_identity(f, 7), std::invalid_argument);
}

TEST_CASE("rank distributions") {
    auto h3 = rank_distribution_exhaustive(Field(3, 1));
    CHECK(h3 == std::map<std::uint32_t, std::uint64_t>({{0, 6}}));

    auto h5 = rank_distribution_exhaustive(Field(5, 1));
    std::uint64_t total = 0;
    for (const auto& [rank, count] : h5) total += count;
    CHECK(total == 120);
    CHECK(h5[0] == 20);

    Field f7(7, 1);
    CHECK_THROWS_AS(rank_distribution_exhaustive(f7), guard_error);
    auto s1 = rank_distribution_sampled(f7, 150, 99);
    auto s2 = rank_distribution_sampled(f7, 150, 99);
    CHECK(s1 == s2);
    std::uint64_t n = 0;
    for (const auto& [rank, count] : s1) n += count;
    CHECK(n == 150);
    CHECK(rank_distribution_sampled(f7, 100, 1) != rank_distribution_sampled(f7, 100, 2));
}
