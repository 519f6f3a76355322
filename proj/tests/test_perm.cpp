#include <doctest.h>

#include "projperm/errors.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/point.hpp"

#include <stdexcept>
#include <vector>

using namespace projperm;

TEST_CASE("construction validates bijections") {
    CHECK_NOTHROW(Permutation({1, 0, 2, 3}));
    CHECK_THROWS_AS(Permutation({0, 0, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2, 9}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{}), std::invalid_argument);
    Permutation id = Permutation::identity(5);
    CHECK(id.q() == 5);
    CHECK(id.points() == 6);
    CHECK(id.is_identity());
    CHECK(id.fixes_infinity());
}

TEST_CASE("apply and compose") {
    Permutation t0 = transposition(5, 0);
    CHECK(t0.apply(Point::finite(0)).is_infinity());
    CHECK(t0.apply(Point::infinity()) == Point::finite(0));
    CHECK(t0.apply(Point::finite(3)) == Point::finite(3));
    CHECK_FALSE(t0.fixes_infinity());
    // compose(p1, p2) applies p2 first.
    Permutation t2 = transposition(5, 2);
    CHECK(compose(t0, t2).apply(Point::finite(2)) == Point::finite(0));
    CHECK(compose(t2, t0).apply(Point::finite(2)).is_infinity());
    CHECK(compose(t0, inverse(t0)).is_identity());
    CHECK(compose(inverse(t2), t2).is_identity());
    CHECK(inverse(t0) == t0);
}

TEST_CASE("swap of arbitrary points") {
    Permutation s = swap_points(5, 1, 3);
    CHECK(s.image(1) == 3);
    CHECK(s.image(3) == 1);
    CHECK(s.image(0) == 0);
    CHECK(s.fixes_infinity());
    CHECK(swap_points(5, 0, 5) == transposition(5, 0));
    CHECK_THROWS_AS(swap_points(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(swap_points(5, 1, 6), std::invalid_argument);
    CHECK_THROWS_AS(transposition(5, 5), std::invalid_argument);
}

TEST_CASE("cycle decomposition is canonical") {
    Permutation p = from_cycles({7, {{0, 3}, {1, 2, 5}}});
    auto d = cycle_decomposition(p);
    CHECK(d.q == 7);
    CHECK(d.cycles == std::vector<std::vector<std::uint32_t>>({{0, 3}, {1, 2, 5}}));
    CHECK(from_cycles(d) == p);
    CHECK(cycle_decomposition(Permutation::identity(7)).cycles.empty());
    // Cycles rotate their minimum to the front.
    Permutation r = from_cycles({5, {{3, 1, 4}}});
    CHECK(cycle_decomposition(r).cycles ==
          std::vector<std::vector<std::uint32_t>>({{1, 4, 3}}));
    CHECK_THROWS_AS(from_cycles({5, {{2}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({5, {{0, 1}, {1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(from_cycles({5, {{0, 9}}}), std::invalid_argument);
}

TEST_CASE("star statistics") {
    CHECK(star_stats(Permutation::identity(7)) == StarStats{0, 0, false, 0});
    CHECK(star_stats(transposition(7, 4)) == StarStats{1, 1, true, 1});
    CHECK(star_stats(swap_points(7, 0, 1)) == StarStats{2, 1, false, 3});
    CHECK(star_stats(from_cycles({7, {{0, 1, 2}}})) == StarStats{3, 1, false, 4});
    CHECK(star_stats(from_cycles({7, {{0, 1, 2}, {3, 4}}})) == StarStats{5, 2, false, 7});
    CHECK(star_stats(from_cycles({5, {{0, 5, 2}}})) == StarStats{2, 1, true, 2});
}

TEST_CASE("star factorization hits the minimal length and composes back") {
    CHECK(star_factorize(Permutation::identity(5)).empty());
    CHECK(star_factorize(transposition(5, 3)) == std::vector<Elem>{3});
    CHECK(star_factorize(from_cycles({7, {{0, 1, 2}}})) ==
          std::vector<Elem>({0, 2, 1, 0}));
    CHECK(star_factorize(from_cycles({5, {{0, 5, 2}}})) == std::vector<Elem>({0, 2}));
    for (std::uint32_t q : {5u, 7u}) {
        std::vector<Permutation> cases = {
            Permutation::identity(q), transposition(q, 1), swap_points(q, 0, 2),
            from_cycles({q, {{0, 1, 2}}}), from_cycles({q, {{1, q, 3}}}),
            from_cycles({q, {{0, 4}, {1, 2}}})};
        for (const auto& p : cases) {
            auto word = star_factorize(p);
            CHECK(word.size() == star_stats(p).star_length);
            CHECK(compose_star_word(q, word) == p);
        }
    }
}

TEST_CASE("star words compose right to left") {
    // (0,inf) then (1,inf): 0 -> inf -> 1.
    Permutation p = compose_star_word(5, {1, 0});
    CHECK(p.apply(Point::finite(0)) == Point::finite(1));
    CHECK(p.apply(Point::finite(1)).is_infinity());
    CHECK(p.apply(Point::infinity()) == Point::finite(0));
    CHECK(compose_star_word(5, {}) == Permutation::identity(5));
    CHECK(compose_star_word(5, {2, 2}) == Permutation::identity(5));
}

TEST_CASE("permutation text round-trips") {
    Field f7(7, 1);
    Permutation p = from_cycles({7, {{0, 3}, {1, 2, 5}}});
    CHECK(cycle_text(p) == "(0 3)(1 2 5)");
    CHECK(permutation_from_text(f7, "(0 3)(1 2 5)") == p);
    CHECK(cycle_text(Permutation::identity(7)) == "()");
    CHECK(permutation_from_text(f7, "()") == Permutation::identity(7));
    CHECK(cycle_text(transposition(7, 2)) == "(2 inf)");
    CHECK(permutation_from_text(f7, "(2 inf)") == transposition(7, 2));

    Field f3(3, 1);
    CHECK(oneline_text(swap_points(3, 0, 1)) == "perm:1,0,2,inf");
    CHECK(permutation_from_text(f3, "perm:1,0,2,inf") == swap_points(3, 0, 1));
    CHECK(oneline_text(transposition(3, 0)) == "perm:inf,1,2,0");
    CHECK(permutation_from_text(f3, "perm:inf,1,2,0") == transposition(3, 0));

    // Listed cycles need not be disjoint: rightmost applies first.
    CHECK(permutation_from_text(f3, "(0 1)(1 2)") ==
          compose(swap_points(3, 0, 1), swap_points(3, 1, 2)));

    CHECK_THROWS_AS(permutation_from_text(f3, ""), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "(0 1"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "(0 0)"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "(0 9)"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "(1)"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "perm:0,1"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "perm:0,0,2,inf"), parse_error);
    CHECK_THROWS_AS(permutation_from_text(f3, "0 1 2 inf"), parse_error);
}
