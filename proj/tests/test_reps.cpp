#include <doctest.h>

#include "projperm/errors.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"

#include <stdexcept>
#include <vector>

using namespace projperm;

TEST_CASE("coefficient maps on frozen tuples") {
    Field f3(3, 1), f5(5, 1), f7(7, 1);
    CHECK(shifts_to_swaps(f3, {1, 1}) == std::vector<Elem>({1, 2}));
    CHECK(shifts_to_swaps(f5, {1, 2}) == std::vector<Elem>({1, 4}));
    CHECK(swaps_to_shifts(f5, {1, 4}) == std::vector<Elem>({1, 2}));
    CHECK(shifts_to_swaps(f5, {2}) == std::vector<Elem>({2}));
    CHECK(swaps_to_shifts(f5, {2}) == std::vector<Elem>({2}));
    CHECK(shifts_to_swaps(f5, {}).empty());
    CHECK(swaps_to_shifts(f5, {}).empty());
    CHECK(diff_inverse_step(f5, {2, 2}) == std::vector<Elem>({0}));
    CHECK(diff_inverse_step(f5, {1, 4}) == std::vector<Elem>({2}));
    CHECK(diff_inverse_step(f7, {0, 1, 3}) == std::vector<Elem>({1, 5}));
    CHECK_THROWS_AS(diff_inverse_step(f5, {4}), std::invalid_argument);
    CHECK_THROWS_AS(diff_inverse_step(f5, {}), std::invalid_argument);
}

TEST_CASE("algebraic chain evaluation") {
    Field f(5, 1);
    AlgebraicRep r{Mobius::identity(f), {1}};
    // x -> inv0(x - 1): 0->4, 1->0, 2->1, 3->3, 4->2, inf fixed.
    CHECK(eval_algebraic(f, r) == Permutation({4, 0, 1, 3, 2, 5}));
    AlgebraicRep bare{Mobius::translation(f, 2), {}};
    CHECK(eval_algebraic(f, bare) == to_permutation(f, Mobius::translation(f, 2)));
    AlgebraicRep rat{Mobius::reciprocal(f), {}};
    CHECK(eval_algebraic(f, rat).apply(Point::finite(0)).is_infinity());
}

TEST_CASE("combinatorial chain evaluation") {
    Field f(5, 1);
    CombinatorialRep r{Mobius::identity(f), {2}};
    CHECK(eval_combinatorial(f, r) == transposition(5, 2));
    // b_k applies first: nu o (b_1,inf) o (b_2,inf).
    CombinatorialRep two{Mobius::identity(f), {1, 0}};
    CHECK(eval_combinatorial(f, two) ==
          compose(transposition(5, 1), transposition(5, 0)));
    CombinatorialRep shifted{Mobius::translation(f, 1), {3}};
    CHECK(eval_combinatorial(f, shifted) ==
          compose(to_permutation(f, Mobius::translation(f, 1)), transposition(5, 3)));
}

TEST_CASE("rewrites between the two chain forms") {
    Field f(5, 1);
    AlgebraicRep alg{Mobius::identity(f), {1}};
    CombinatorialRep comb = to_combinatorial(f, alg);
    CHECK(comb.nu == Mobius(f, 0, 1, 1, 4));
    CHECK(comb.swaps == std::vector<Elem>({1}));
    CHECK(eval_combinatorial(f, comb) == eval_algebraic(f, alg));
    CHECK(to_algebraic(f, comb) == alg);

    AlgebraicRep empty{Mobius::translation(f, 3), {}};
    CHECK(to_combinatorial(f, empty) ==
          CombinatorialRep{Mobius::translation(f, 3), {}});
    CHECK(to_algebraic(f, CombinatorialRep{Mobius::reciprocal(f), {}}) ==
          AlgebraicRep{Mobius::reciprocal(f), {}});

    Field f9(3, 2);
    AlgebraicRep deep{Mobius(f9, 2, 1, 1, 0), {3, 7, 4}};
    CombinatorialRep conv = to_combinatorial(f9, deep);
    CHECK(eval_combinatorial(f9, conv) == eval_algebraic(f9, deep));
    CHECK(to_algebraic(f9, conv) == deep);
}

TEST_CASE("enumeration of fixed-length representations") {
    Field f(5, 1);
    Permutation t2 = transposition(5, 2);
    auto combs = enumerate_combinatorial(f, t2, 1);
    REQUIRE(combs.size() == 1);
    CHECK(combs[0] == CombinatorialRep{Mobius::identity(f), {2}});
    auto algs = enumerate_algebraic(f, t2, 1);
    CHECK(algs.size() == 1);
    CHECK(to_combinatorial(f, algs[0]) == combs[0]);
    CHECK(eval_algebraic(f, algs[0]) == t2);

    // A swap needs at least one factor of x^{q-2}: no length-0 family,
    // and k = 0 is rejected outright.
    CHECK_THROWS_AS(enumerate_combinatorial(f, t2, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_algebraic(f, t2, 5), guard_error);
    Field f11(11, 1);
    CHECK_THROWS_AS(enumerate_algebraic(f11, Permutation::identity(11), 1), guard_error);

    // Identity at k = 2: chains whose two swaps cancel.
    auto id2 = enumerate_combinatorial(f, Permutation::identity(5), 2);
    CHECK(id2.size() == 5);
    for (const auto& r : id2) {
        CHECK(r.swaps[0] == r.swaps[1]);
        CHECK(eval_combinatorial(f, r) == Permutation::identity(5));
    }
}

TEST_CASE("representation text round-trips") {
    Field f(5, 1);
    AlgebraicRep alg{Mobius::identity(f), {1}};
    CHECK(algebraic_text(alg) == "alg: mu=1*x+0; a=[1]");
    CHECK(algebraic_from_text(f, "alg: mu=1*x+0; a=[1]") == alg);
    CombinatorialRep comb{Mobius(f, 0, 1, 1, 4), {1}};
    CHECK(combinatorial_text(comb) == "comb: nu=(0*x+1)/(1*x+4); b=[1]");
    CHECK(combinatorial_from_text(f, "comb: nu=(0*x+1)/(1*x+4); b=[1]") == comb);
    AlgebraicRep empty{Mobius::translation(f, 2), {}};
    CHECK(algebraic_text(empty) == "alg: mu=1*x+2; a=[]");
    CHECK(algebraic_from_text(f, algebraic_text(empty)) == empty);
    // 2x canonicalizes to (1*x+0)/(0*x+3): the leading coefficient is
    // scaled to 1, so the constant denominator 3 keeps the fraction form.
    AlgebraicRep multi{Mobius::linear(f, 2, 0), {0, 3, 3}};
    CHECK(algebraic_text(multi) == "alg: mu=(1*x+0)/(0*x+3); a=[0,3,3]");
    CHECK(algebraic_from_text(f, algebraic_text(multi)) == multi);

    CHECK_THROWS_AS(algebraic_from_text(f, ""), parse_error);
    CHECK_THROWS_AS(algebraic_from_text(f, "alg: mu=1*x+0"), parse_error);
    CHECK_THROWS_AS(algebraic_from_text(f, "alg: mu=1*x+0; b=[1]"), parse_error);
    CHECK_THROWS_AS(algebraic_from_text(f, "alg: mu=1*x+0; a=1"), parse_error);
    CHECK_THROWS_AS(algebraic_from_text(f, "alg: mu=1*x+0; a=[9]"), parse_error);
    CHECK_THROWS_AS(algebraic_from_text(f, "comb: nu=1*x+0; b=[1]"), parse_error);
    CHECK_THROWS_AS(combinatorial_from_text(f, "alg: mu=1*x+0; a=[1]"), parse_error);
}
