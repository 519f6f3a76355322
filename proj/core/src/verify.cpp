#include "projperm/verify.hpp"

#include "projperm/carlitz.hpp"
#include "projperm/errors.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/point.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"
#include "rng.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace projperm {

namespace {

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void expect(bool cond, const std::string& msg) {
        ++result.checks;
        if (!cond) {
            ++result.failed;
            if (result.failures.size() < 10) result.failures.push_back(msg);
        }
    }

    SuiteResult finish() {
        result.passed = result.failed == 0;
        return result;
    }
};

const std::vector<std::uint32_t> kSmallQ = {3, 4, 5, 7, 8, 9};

Field field_of_order(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        std::uint32_t n = 0, m = q;
        while (m % p == 0) { m /= p; ++n; }
        return Field(p, n);
    }
    throw std::invalid_argument("not a prime power");
}

std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 3; q <= limit; ++q) {
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        std::uint32_t m = q;
        while (m % p == 0) m /= p;
        if (m == 1) out.push_back(q);
    }
    return out;
}

/// Calls fn with every permutation table of {0,...,size-1}.
void for_each_table(std::uint32_t size,
                    const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> t(size);
    for (std::uint32_t i = 0; i < size; ++i) t[i] = i;
    do fn(t);
    while (std::next_permutation(t.begin(), t.end()));
}

Permutation extend_fixing_inf(std::vector<std::uint32_t> table, std::uint32_t q) {
    table.push_back(q);
    return Permutation(std::move(table));
}

std::uint64_t pack_table(const std::vector<std::uint32_t>& t) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        key |= static_cast<std::uint64_t>(t[i]) << (4 * i);
    return key;
}

/// A fixed panel of `count` distinct permutations of the projective line,
/// mixing structured maps with seeded random fill.
std::vector<Permutation> permutation_panel(const Field& field, std::size_t count,
                                           std::uint64_t seed) {
    const std::uint32_t q = field.q();
    std::vector<Permutation> panel;
    auto add = [&](const Permutation& p) {
        if (std::find(panel.begin(), panel.end(), p) == panel.end() &&
            panel.size() < count)
            panel.push_back(p);
    };
    add(Permutation::identity(q));
    add(swap_points(q, 0, q));
    add(swap_points(q, 0, 1));
    add(transposition(q, 0));
    add(transposition(q, 1));
    add(to_permutation(field, Mobius::translation(field, 1)));
    add(to_permutation(field, Mobius::reciprocal(field)));
    add(invstar_permutation(field));
    add(from_cycles({q, {{0, 1, 2}}}));
    add(from_cycles({q, {{0, q, 1}}}));
    std::mt19937_64 rng(seed);
    while (panel.size() < count) add(detail::random_full_permutation(rng, q));
    return panel;
}

// ---------------------------------------------------------------- field

SuiteResult suite_field() {
    Checker ck("field");

    Field f5(5, 1);
    ck.expect(f5.q() == 5 && f5.text() == "q=5", "GF(5) construction");
    ck.expect(f5.mul(2, 3) == 1, "GF(5): 2*3 = 1");
    ck.expect(f5.inv(4) == 4, "GF(5): inv(4) = 4");
    ck.expect(f5.inv0(0) == 0 && f5.inv0(2) == 3, "GF(5): inv0 values");
    bool threw = false;
    try { f5.inv(0); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "inv(0) rejected");
    threw = false;
    try { Field bad(2, 1); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "GF(2) rejected");
    threw = false;
    try { Field bad(4, 1); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "non-prime characteristic rejected");

    Field f9(3, 2, {1, 0, 1});
    ck.expect(f9.q() == 9, "GF(9) construction");
    ck.expect(f9.mul(3, 3) == 2, "GF(9): alpha^2 = -1");
    ck.expect(Field(3, 2).modulus() == std::vector<std::uint32_t>({1, 0, 1}),
              "GF(9) default modulus is x^2+1");
    ck.expect(Field(2, 2).modulus() == std::vector<std::uint32_t>({1, 1, 1}),
              "GF(4) default modulus is x^2+x+1");
    ck.expect(Field(2, 3).modulus() == std::vector<std::uint32_t>({1, 0, 1, 1}),
              "GF(8) default modulus is x^3+x+1");
    threw = false;
    try { Field bad(2, 2, {1, 0, 1}); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "reducible modulus rejected");
    threw = false;
    try { Field bad(3, 2, {2, 0, 1}); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "non-monic modulus rejected");
    threw = false;
    try { Field bad(3, 2, {1, 0, 3}); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "out-of-range coefficient rejected");

    for (std::uint32_t q : prime_powers_up_to(64)) {
        Field f = field_of_order(q);
        std::ostringstream tag;
        tag << "q=" << q;
        bool assoc_add = true, assoc_mul = true, distrib = true, comm = true;
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) comm = false;
                for (Elem c = 0; c < q; ++c) {
                    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) assoc_add = false;
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) assoc_mul = false;
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
                        distrib = false;
                }
            }
        ck.expect(comm, tag.str() + ": commutativity");
        ck.expect(assoc_add, tag.str() + ": additive associativity");
        ck.expect(assoc_mul, tag.str() + ": multiplicative associativity");
        ck.expect(distrib, tag.str() + ": distributivity");
        bool units = true, match = true, involution = true, subs = true;
        for (Elem a = 0; a < q; ++a) {
            if (a != 0 && f.mul(a, f.inv(a)) != 1) units = false;
            if (f.inv0(a) != f.pow(a, q - 2)) match = false;
            if (f.inv0(f.inv0(a)) != a) involution = false;
            if (f.add(f.sub(0, a), a) != 0 || f.add(f.neg(a), a) != 0) subs = false;
        }
        ck.expect(units, tag.str() + ": multiplicative inverses");
        ck.expect(match, tag.str() + ": inv0 equals the q-2 power map");
        ck.expect(involution, tag.str() + ": inv0 is an involution");
        ck.expect(subs, tag.str() + ": negation and subtraction");
        ck.expect(f.pow(0, 0) == 1 && f.pow(5 % q, 0) == 1, tag.str() + ": x^0 = 1");
        ck.expect(f.from_int(-1) == f.neg(1), tag.str() + ": from_int(-1)");

        Field g = field_of_order(q);
        bool same = g.modulus() == f.modulus();
        for (Elem a = 0; a < q && same; ++a) {
            if (g.inv0(a) != f.inv0(a)) same = false;
            for (Elem b = 0; b < q && same; ++b)
                if (g.mul(a, b) != f.mul(a, b) || g.add(a, b) != f.add(a, b)) same = false;
        }
        ck.expect(same, tag.str() + ": rebuilt field has identical tables");
    }
    return ck.finish();
}

// ---------------------------------------------------------------- mobius

SuiteResult suite_mobius() {
    Checker ck("mobius");

    Field f5(5, 1);
    Mobius rec5 = Mobius::reciprocal(f5);
    ck.expect(rec5.eval(f5, Point::finite(0)).is_infinity(), "1/x sends 0 to infinity");
    ck.expect(rec5.eval(f5, Point::infinity()) == Point::finite(0), "1/x sends infinity to 0");
    Mobius shift3 = Mobius::translation(f5, 3);
    ck.expect(shift3.eval(f5, Point::infinity()).is_infinity(), "x+3 fixes infinity");
    ck.expect(shift3.eval(f5, Point::finite(4)) == Point::finite(2), "x+3 sends 4 to 2");
    Mobius comp = compose(f5, Mobius::translation(f5, 1), rec5);
    ck.expect(comp.eval(f5, Point::finite(2)) == Point::finite(4),
              "(x+1) after 1/x sends 2 to 4");
    ck.expect(to_permutation(Field(3, 1), Mobius::reciprocal(Field(3, 1))) ==
                  swap_points(3, 0, 3),
              "GF(3): 1/x induces the swap of 0 and infinity");
    ck.expect(to_permutation(f5, Mobius::translation(f5, 1)) ==
                  from_cycles({5, {{0, 1, 2, 3, 4}}}),
              "GF(5): x+1 induces the 5-cycle");
    ck.expect(!mobius_from_permutation(f5, swap_points(5, 0, 5)).has_value(),
              "GF(5): the bare swap of 0 and infinity is not degree-one");
    Mobius m5(f5, 2, 1, 1, 4);
    ck.expect(mobius_from_permutation(f5, to_permutation(f5, m5)) == m5,
              "GF(5): permutation of (2x+1)/(x+4) recovers the map");
    bool threw = false;
    try { Mobius::linear(f5, 0, 1); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "degree-one polynomial with a = 0 rejected");
    threw = false;
    try { Mobius bad(f5, 1, 2, 2, 4); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "zero determinant rejected");

    Field f7(7, 1);
    Mobius m7(f7, 2, 1, 1, 3);
    ck.expect(compose(f7, m7, mobius_inverse(f7, m7)).is_identity() &&
                  compose(f7, mobius_inverse(f7, m7), m7).is_identity(),
              "GF(7): composing with the inverse gives the identity");
    for (Elem a = 0; a < 7; ++a)
        ck.expect(mobius_inverse(f7, Mobius::translation(f7, a)) ==
                      Mobius(f7, 1, f7.neg(a), 0, 1),
                  "GF(7): inverse of x+a is x-a");

    const std::vector<std::uint32_t> expected_order = {24, 60, 120, 336, 504, 720};
    for (std::size_t i = 0; i < kSmallQ.size(); ++i) {
        Field f = field_of_order(kSmallQ[i]);
        auto pgl = enumerate_mobius(f);
        std::ostringstream tag;
        tag << "q=" << kSmallQ[i];
        ck.expect(pgl.size() == expected_order[i], tag.str() + ": |PGL(2,q)| = q^3-q");
        bool ascending = true;
        for (std::size_t j = 1; j < pgl.size(); ++j)
            if (!(pgl[j - 1] < pgl[j])) ascending = false;
        ck.expect(ascending, tag.str() + ": enumeration strictly ascending");
        bool poly_ok = true;
        for (const auto& m : pgl)
            if (m.is_polynomial() != m.eval(f, Point::infinity()).is_infinity())
                poly_ok = false;
        ck.expect(poly_ok, tag.str() + ": is_polynomial matches fixing infinity");
        if (kSmallQ[i] > 3)
            ck.expect(!mobius_from_permutation(f, invstar_permutation(f)).has_value(),
                      tag.str() + ": the inverse-with-0 permutation is not degree-one");
    }
    Field f3(3, 1);
    ck.expect(mobius_from_permutation(f3, invstar_permutation(f3)) == Mobius::identity(f3),
              "GF(3): x^{q-2} is the identity map");

    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        Field f = field_of_order(q);
        auto pgl = enumerate_mobius(f);
        std::vector<Permutation> perms;
        perms.reserve(pgl.size());
        for (const auto& m : pgl) perms.push_back(to_permutation(f, m));
        bool homo = true, roundtrip = true;
        for (std::size_t i = 0; i < pgl.size(); ++i) {
            if (mobius_from_permutation(f, perms[i]) != pgl[i]) roundtrip = false;
            for (std::size_t j = 0; j < pgl.size(); ++j)
                if (to_permutation(f, compose(f, pgl[i], pgl[j])) !=
                    compose(perms[i], perms[j]))
                    homo = false;
        }
        std::ostringstream tag;
        tag << "q=" << q;
        ck.expect(homo, tag.str() + ": composition is a group homomorphism");
        ck.expect(roundtrip, tag.str() + ": map -> table -> map round-trip");
    }
    return ck.finish();
}

// ---------------------------------------------------------------- star

SuiteResult suite_star() {
    Checker ck("star");

    Field f7(7, 1);
    ck.expect(star_stats(Permutation::identity(7)) == StarStats{0, 0, false, 0},
              "identity stats");
    ck.expect(star_factorize(Permutation::identity(7)).empty(), "identity factorizes empty");
    for (Elem b = 0; b < 5; ++b) {
        ck.expect(star_stats(transposition(5, b)) == StarStats{1, 1, true, 1},
                  "star transposition stats");
        ck.expect(star_factorize(transposition(5, b)) == std::vector<Elem>{b},
                  "star transposition factorizes to itself");
    }
    Permutation cyc = from_cycles({7, {{0, 1, 2}}});
    ck.expect(star_stats(cyc) == StarStats{3, 1, false, 4}, "3-cycle stats");
    ck.expect(star_factorize(cyc) == std::vector<Elem>({0, 2, 1, 0}),
              "3-cycle bracket expansion");
    ck.expect(compose(transposition(5, 0), transposition(5, 2)).apply(Point::finite(2)) ==
                  Point::finite(0),
              "two swaps traced right to left");
    Permutation two = from_cycles({7, {{0, 3}, {1, 2, 5}}});
    ck.expect(cycle_decomposition(two).cycles ==
                  std::vector<std::vector<std::uint32_t>>({{0, 3}, {1, 2, 5}}),
              "canonical cycle order");
    ck.expect(from_cycles(cycle_decomposition(two)) == two, "cycle round-trip");
    Permutation inf_cycle = from_cycles({5, {{0, 5, 2}}});
    ck.expect(star_factorize(inf_cycle) == std::vector<Elem>({0, 2}),
              "infinity cycle expands with one factor fewer");
    ck.expect(star_stats(inf_cycle) == StarStats{2, 1, true, 2}, "infinity cycle stats");
    ck.expect(star_stats(swap_points(5, 0, 5)) == StarStats{1, 1, true, 1},
              "swap with infinity stats");

    for (std::uint32_t q : {3u, 4u, 5u}) {
        // Distances from the identity over the q star-transposition generators.
        std::vector<Permutation> gens;
        for (Elem b = 0; b < q; ++b) gens.push_back(transposition(q, b));
        std::unordered_map<std::uint64_t, std::uint32_t> dist;
        std::deque<Permutation> queue;
        Permutation id = Permutation::identity(q);
        dist[pack_table(id.table())] = 0;
        queue.push_back(id);
        while (!queue.empty()) {
            Permutation g = queue.front();
            queue.pop_front();
            std::uint32_t d = dist[pack_table(g.table())];
            for (const auto& t : gens) {
                Permutation h = compose(t, g);
                auto [it, fresh] = dist.emplace(pack_table(h.table()), d + 1);
                if (fresh) queue.push_back(h);
            }
        }
        std::ostringstream tag;
        tag << "q=" << q;
        bool min_ok = true, round_ok = true, canon_ok = true;
        std::uint64_t total = 0;
        for_each_table(q + 1, [&](const std::vector<std::uint32_t>& t) {
            ++total;
            Permutation p{std::vector<std::uint32_t>(t)};
            auto st = star_stats(p);
            auto word = star_factorize(p);
            if (word.size() != st.star_length) round_ok = false;
            if (compose_star_word(q, word) != p) round_ok = false;
            if (dist.at(pack_table(t)) != st.star_length) min_ok = false;
            auto d = cycle_decomposition(p);
            for (std::size_t i = 0; i < d.cycles.size(); ++i) {
                if (*std::min_element(d.cycles[i].begin(), d.cycles[i].end()) !=
                    d.cycles[i].front())
                    canon_ok = false;
                if (i && d.cycles[i - 1].front() >= d.cycles[i].front()) canon_ok = false;
            }
            if (cycle_decomposition(from_cycles(d)) != d) canon_ok = false;
        });
        ck.expect(dist.size() == total, tag.str() + ": star transpositions generate Sym");
        ck.expect(min_ok, tag.str() + ": star length is the exact minimal word length");
        ck.expect(round_ok, tag.str() + ": factorization reproduces every permutation");
        ck.expect(canon_ok, tag.str() + ": cycle decomposition is canonical");
    }

    for (std::uint32_t q : {7u, 8u, 9u}) {
        std::mt19937_64 rng(0x57a2 + q);
        bool ok = true;
        for (int i = 0; i < 10000; ++i) {
            Permutation p = detail::random_full_permutation(rng, q);
            auto st = star_stats(p);
            auto word = star_factorize(p);
            if (word.size() != st.star_length || compose_star_word(q, word) != p) ok = false;
        }
        std::ostringstream tag;
        tag << "q=" << q;
        ck.expect(ok, tag.str() + ": 10^4 random factorization round-trips");
    }
    return ck.finish();
}

// ------------------------------------------------------- swap-identities

SuiteResult suite_swap_identities() {
    Checker ck("swap-identities");
    for (std::uint32_t q : kSmallQ) {
        Field f = field_of_order(q);
        std::ostringstream tag;
        tag << "q=" << q;
        Permutation inv_star = invstar_permutation(f);
        Permutation rec = to_permutation(f, Mobius::reciprocal(f));

        ck.expect(compose(rec, inv_star) == swap_points(q, 0, q),
                  tag.str() + ": 1/x after the q-2 power map swaps 0 and infinity");

        // Conjugating a swap by any degree-one map, or by the q-2 power map.
        std::vector<Permutation> maps;
        for (const auto& m : enumerate_mobius(f)) maps.push_back(to_permutation(f, m));
        maps.push_back(inv_star);
        bool conj = true;
        for (const auto& p : maps)
            for (std::uint32_t u = 0; u <= q && conj; ++u)
                for (std::uint32_t v = 0; v <= q && conj; ++v) {
                    if (u == v) continue;
                    if (compose(p, swap_points(q, u, v)) !=
                        compose(swap_points(q, p.image(u), p.image(v)), p))
                        conj = false;
                }
        ck.expect(conj, tag.str() + ": maps conjugate swaps onto image swaps");

        bool commute = true;
        for (Elem a = 0; a < q && commute; ++a) {
            Permutation shift = to_permutation(f, Mobius(f, 1, f.neg(a), 0, 1));
            for (Elem b = 0; b < q && commute; ++b) {
                if (compose(shift, transposition(q, b)) !=
                    compose(transposition(q, f.sub(b, a)), shift))
                    commute = false;
                if (compose(inv_star, transposition(q, b)) !=
                    compose(transposition(q, f.inv0(b)), inv_star))
                    commute = false;
            }
        }
        ck.expect(commute, tag.str() + ": swaps move through shifts and the power map");

        bool two_cycle = true;
        for (Elem a = 0; a < q; ++a) {
            Permutation lhs = transposition(q, a);
            Permutation rhs = compose(to_permutation(f, Mobius(f, a, 1, 1, 0)),
                                      compose(inv_star, to_permutation(f, Mobius(f, 1, f.neg(a), 0, 1))));
            if (lhs != rhs) two_cycle = false;
        }
        ck.expect(two_cycle,
                  tag.str() + ": (a,inf) = (1/x + a) o x^{q-2} o (x - a) pointwise");

        // The four distinguished permutations form a group of involutions.
        std::vector<Permutation> klein = {Permutation::identity(q), rec, inv_star,
                                          swap_points(q, 0, q)};
        bool closed = true, involutions = true;
        for (const auto& x : klein) {
            if (!(compose(x, x) == Permutation::identity(q))) involutions = false;
            for (const auto& y : klein) {
                Permutation z = compose(x, y);
                if (std::find(klein.begin(), klein.end(), z) == klein.end()) closed = false;
            }
        }
        ck.expect(closed, tag.str() + ": four-element set closed under composition");
        ck.expect(involutions, tag.str() + ": every element squares to the identity");
        if (q >= 4) {
            std::set<std::vector<std::uint32_t>> distinct;
            for (const auto& x : klein) distinct.insert(x.table());
            ck.expect(distinct.size() == 4, tag.str() + ": the four elements are distinct");
        }
    }
    return ck.finish();
}

// ------------------------------------------------------- coeff-roundtrip

SuiteResult suite_coeff_roundtrip() {
    Checker ck("coeff-roundtrip");

    Field f3(3, 1), f5(5, 1), f7(7, 1);
    ck.expect(shifts_to_swaps(f3, {1, 1}) == std::vector<Elem>({1, 2}),
              "GF(3): forward map of (1,1)");
    ck.expect(shifts_to_swaps(f5, {1, 2}) == std::vector<Elem>({1, 4}),
              "GF(5): forward map of (1,2)");
    ck.expect(swaps_to_shifts(f5, {1, 4}) == std::vector<Elem>({1, 2}),
              "GF(5): backward map of (1,4)");
    for (Elem a = 0; a < 5; ++a) {
        ck.expect(shifts_to_swaps(f5, {a}) == std::vector<Elem>{a}, "length 1 forward");
        ck.expect(swaps_to_shifts(f5, {a}) == std::vector<Elem>{a}, "length 1 backward");
    }
    ck.expect(diff_inverse_step(f5, {2, 2}) == std::vector<Elem>({0}),
              "equal entries difference to 0");
    ck.expect(diff_inverse_step(f5, {1, 4}) == std::vector<Elem>({2}),
              "GF(5): step of (1,4)");
    ck.expect(diff_inverse_step(f7, {0, 1, 3}) == std::vector<Elem>({1, 5}),
              "GF(7): step of (0,1,3)");
    bool threw = false;
    try { diff_inverse_step(f5, {1}); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "step of a single entry rejected");
    ck.expect(shifts_to_swaps(f5, {}).empty() && swaps_to_shifts(f5, {}).empty(),
              "empty tuples map to empty");

    for (std::uint32_t q : kSmallQ) {
        Field f = field_of_order(q);
        std::ostringstream tag;
        tag << "q=" << q;
        for (std::uint32_t k = 1; k <= 3; ++k) {
            bool ok = true;
            std::vector<Elem> tuple(k, 0);
            auto advance = [&]() {
                for (std::size_t i = tuple.size(); i-- > 0;) {
                    if (++tuple[i] < q) return true;
                    tuple[i] = 0;
                }
                return false;
            };
            do {
                if (swaps_to_shifts(f, shifts_to_swaps(f, tuple)) != tuple) ok = false;
                if (shifts_to_swaps(f, swaps_to_shifts(f, tuple)) != tuple) ok = false;
            } while (advance());
            ck.expect(ok, tag.str() + " k=" + std::to_string(k) +
                              ": the two maps invert each other on every tuple");
        }
    }

    for (std::uint32_t q : prime_powers_up_to(64)) {
        Field f = field_of_order(q);
        std::mt19937_64 rng(0xc0eff + q);
        bool ok = true;
        for (int i = 0; i < 4000; ++i) {
            auto k = static_cast<std::size_t>(1 + detail::uniform_below(rng, 8));
            std::vector<Elem> tuple(k);
            for (auto& x : tuple) x = static_cast<Elem>(detail::uniform_below(rng, q));
            if (swaps_to_shifts(f, shifts_to_swaps(f, tuple)) != tuple) ok = false;
            if (shifts_to_swaps(f, swaps_to_shifts(f, tuple)) != tuple) ok = false;
        }
        ck.expect(ok, "q=" + std::to_string(q) + ": 4000 random tuples round-trip");
    }
    return ck.finish();
}

// ----------------------------------------------------- chain-equivalence

SuiteResult suite_chain_equivalence() {
    Checker ck("chain-equivalence");
    for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
        Field f = field_of_order(q);
        auto pgl = enumerate_mobius(f);
        std::ostringstream tag;
        tag << "q=" << q;
        for (const auto& m : pgl) {
            AlgebraicRep a0{m, {}};
            CombinatorialRep c0{m, {}};
            if (!(to_combinatorial(f, a0) == c0 && to_algebraic(f, c0) == a0)) {
                ck.expect(false, tag.str() + ": empty chains convert to themselves");
                break;
            }
        }
        ck.expect(true, tag.str() + ": empty-chain conversions checked");
        for (std::uint32_t k = 1; k <= 3; ++k) {
            bool fwd_eval = true, fwd_round = true, bwd_eval = true, bwd_round = true;
            std::vector<Elem> tuple(k, 0);
            auto advance = [&]() {
                for (std::size_t i = tuple.size(); i-- > 0;) {
                    if (++tuple[i] < q) return true;
                    tuple[i] = 0;
                }
                return false;
            };
            do {
                for (const auto& m : pgl) {
                    AlgebraicRep ar{m, tuple};
                    CombinatorialRep conv = to_combinatorial(f, ar);
                    if (eval_combinatorial(f, conv) != eval_algebraic(f, ar)) fwd_eval = false;
                    if (to_algebraic(f, conv) != ar) fwd_round = false;

                    CombinatorialRep cr{m, tuple};
                    AlgebraicRep back = to_algebraic(f, cr);
                    if (eval_algebraic(f, back) != eval_combinatorial(f, cr)) bwd_eval = false;
                    if (to_combinatorial(f, back) != cr) bwd_round = false;
                }
            } while (advance());
            std::string head = tag.str() + " k=" + std::to_string(k);
            ck.expect(fwd_eval, head + ": forward rewrite preserves the permutation");
            ck.expect(fwd_round, head + ": forward then backward is the identity");
            ck.expect(bwd_eval, head + ": backward rewrite preserves the permutation");
            ck.expect(bwd_round, head + ": backward then forward is the identity");
        }
    }
    return ck.finish();
}

// -------------------------------------------------------- rep-bijection

SuiteResult suite_rep_bijection() {
    Checker ck("rep-bijection");
    for (std::uint32_t q : {3u, 5u}) {
        Field f = field_of_order(q);
        auto panel = permutation_panel(f, 20, 0xb11e + q);
        std::ostringstream tag;
        tag << "q=" << q;
        ck.expect(panel.size() == 20, tag.str() + ": panel holds 20 permutations");
        bool counts = true, eval_ok = true, forward = true, backward = true, poly = true;
        for (const auto& sigma : panel)
            for (std::uint32_t k = 1; k <= 3; ++k) {
                auto as = enumerate_algebraic(f, sigma, k);
                auto cs = enumerate_combinatorial(f, sigma, k);
                if (as.size() != cs.size()) counts = false;
                for (const auto& r : as) {
                    if (eval_algebraic(f, r) != sigma) eval_ok = false;
                    if (sigma.fixes_infinity() && !r.mu.is_polynomial()) poly = false;
                    CombinatorialRep conv = to_combinatorial(f, r);
                    if (std::find(cs.begin(), cs.end(), conv) == cs.end()) forward = false;
                    if (to_algebraic(f, conv) != r) forward = false;
                }
                for (const auto& r : cs) {
                    if (eval_combinatorial(f, r) != sigma) eval_ok = false;
                    AlgebraicRep conv = to_algebraic(f, r);
                    if (std::find(as.begin(), as.end(), conv) == as.end()) backward = false;
                    if (to_combinatorial(f, conv) != r) backward = false;
                }
            }
        ck.expect(counts, tag.str() + ": the two families have equal cardinality");
        ck.expect(eval_ok, tag.str() + ": every representation evaluates to sigma");
        ck.expect(forward, tag.str() + ": forward rewrite maps one family into the other");
        ck.expect(backward, tag.str() + ": backward rewrite maps back");
        ck.expect(poly, tag.str() + ": infinity-fixing sigma forces polynomial outer maps");
    }

    // Permutations built from at most two swaps of projective points.
    for (std::uint32_t q : {3u, 5u}) {
        Field f = field_of_order(q);
        std::vector<Permutation> sigmas = {Permutation::identity(q)};
        std::vector<Permutation> swaps;
        for (std::uint32_t u = 0; u <= q; ++u)
            for (std::uint32_t v = u + 1; v <= q; ++v) swaps.push_back(swap_points(q, u, v));
        for (const auto& s : swaps) sigmas.push_back(s);
        for (const auto& s1 : swaps)
            for (const auto& s2 : swaps) {
                Permutation p = compose(s1, s2);
                if (std::find(sigmas.begin(), sigmas.end(), p) == sigmas.end())
                    sigmas.push_back(p);
            }
        bool counts = true;
        for (const auto& sigma : sigmas)
            for (std::uint32_t k = 1; k <= 3; ++k)
                if (enumerate_algebraic(f, sigma, k).size() !=
                    enumerate_combinatorial(f, sigma, k).size())
                    counts = false;
        ck.expect(counts, "q=" + std::to_string(q) +
                              ": equal cardinality over products of two swaps");
    }

    Field f5(5, 1);
    auto cs = enumerate_combinatorial(f5, transposition(5, 2), 1);
    ck.expect(cs.size() == 1 && cs[0] == CombinatorialRep{Mobius::identity(f5), {2}},
              "GF(5): (2,inf) at k=1 has exactly its defining representation");
    bool guard = false;
    try { enumerate_combinatorial(f5, transposition(5, 2), 5); }
    catch (const guard_error&) { guard = true; }
    ck.expect(guard, "k above the enumeration guard is refused");
    bool invalid = false;
    try { enumerate_combinatorial(f5, transposition(5, 2), 0); }
    catch (const std::invalid_argument&) { invalid = true; }
    ck.expect(invalid, "k = 0 is outside the enumerated families");
    return ck.finish();
}

// ----------------------------------------------------------- rank-cross

SuiteResult suite_rank_cross() {
    Checker ck("rank-cross");
    for (std::uint32_t q : {3u, 4u, 5u}) {
        Field f = field_of_order(q);
        RankOracle oracle(f);
        bool agree = true, witnesses = true;
        std::uint64_t count = 0;
        for_each_table(q, [&](const std::vector<std::uint32_t>& t) {
            ++count;
            Permutation p = extend_fixing_inf(t, q);
            RankResult r = carlitz_rank(f, p);
            if (r.rank != oracle.rank(p, 2 * q)) agree = false;
            if (r.witness.swaps.size() != r.rank ||
                eval_combinatorial(f, r.witness) != p)
                witnesses = false;
        });
        std::ostringstream tag;
        tag << "q=" << q << " (" << count << " permutations)";
        ck.expect(agree, tag.str() + ": scan and oracle agree everywhere");
        ck.expect(witnesses, tag.str() + ": witnesses re-evaluate to their inputs");
    }
    for (std::uint32_t q : {7u, 8u}) {
        Field f = field_of_order(q);
        RankOracle oracle(f);
        std::mt19937_64 rng(0xcafe + q);
        bool agree = true;
        for (int i = 0; i < 500; ++i) {
            Permutation p = detail::random_permutation_fixing_inf(rng, q);
            if (carlitz_rank(f, p).rank != oracle.rank(p, 2 * q)) agree = false;
        }
        ck.expect(agree, "q=" + std::to_string(q) + ": 500 random cross-validations");
    }

    Field f3(3, 1);
    bool all_zero = true;
    for_each_table(3, [&](const std::vector<std::uint32_t>& t) {
        if (carlitz_rank(f3, extend_fixing_inf(t, 3)).rank != 0) all_zero = false;
    });
    ck.expect(all_zero, "GF(3): every permutation is degree-one, rank 0");

    Field f5(5, 1);
    RankResult inv5 = carlitz_rank(f5, invstar_permutation(f5));
    ck.expect(inv5.rank == 1, "GF(5): the q-2 power map has rank 1");
    Field f7(7, 1);
    RankResult swap01 = carlitz_rank(f7, swap_points(7, 0, 1));
    ck.expect(swap01.rank == 3, "GF(7): the 2-cycle (0 1) has rank 3");
    ck.expect(carlitz_rank(f7, to_permutation(f7, Mobius::translation(f7, 1))).rank == 0 &&
                  carlitz_rank_oracle(f7, to_permutation(f7, Mobius::translation(f7, 1))) == 0,
              "affine maps have rank 0 in both algorithms");
    bool moved = false;
    try { carlitz_rank(f5, swap_points(5, 0, 5)); }
    catch (const std::invalid_argument&) { moved = true; }
    ck.expect(moved, "permutations moving infinity are refused");
    return ck.finish();
}

// ----------------------------------------------------------- rank-bound

SuiteResult suite_rank_bound() {
    Checker ck("rank-bound");

    Field f7(7, 1), f5(5, 1);
    CrankBound b7 = crank_bound(f7, Mobius::identity(f7), swap_points(7, 0, 1));
    ck.expect(b7.stats.moved_points == 2 && b7.stats.orbit_count == 1 &&
                  b7.stats.star_length == 3 && b7.exact,
              "GF(7): swap (0 1) bound 3, exact");
    CrankBound b5 = crank_bound(f5, Mobius::identity(f5), swap_points(5, 0, 1));
    ck.expect(b5.stats.star_length == 3 && !b5.exact, "GF(5): same swap, bound only");
    CrankBound bid = crank_bound(f5, Mobius::translation(f5, 2), Permutation::identity(5));
    ck.expect(bid.stats.star_length == 0 && bid.exact, "identity bound 0, exact");
    bool moved = false;
    try { crank_bound(f5, Mobius::reciprocal(f5), Permutation::identity(5)); }
    catch (const std::invalid_argument&) { moved = true; }
    ck.expect(moved, "composite moving infinity is refused");

    for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
        Field f = field_of_order(q);
        auto pgl = enumerate_mobius(f);
        std::vector<Permutation> pgl_perms;
        pgl_perms.reserve(pgl.size());
        for (const auto& m : pgl) pgl_perms.push_back(to_permutation(f, m));
        std::mt19937_64 rng(0xb0bd + q);
        bool bound_ok = true, exact_ok = true;
        for (int i = 0; i < 1000; ++i) {
            Permutation sigma = detail::random_full_permutation(rng, q);
            std::uint32_t w = sigma.image(q);
            std::vector<std::size_t> fitting;
            for (std::size_t j = 0; j < pgl.size(); ++j)
                if (pgl_perms[j].image(w) == q) fitting.push_back(j);
            std::size_t pick = fitting[detail::uniform_below(rng, fitting.size())];
            CrankBound bound = crank_bound(f, pgl[pick], sigma);
            Permutation composite = compose(pgl_perms[pick], sigma);
            std::uint32_t rank = carlitz_rank(f, composite).rank;
            if (rank > bound.stats.star_length) bound_ok = false;
            if (bound.exact && rank != bound.stats.star_length) exact_ok = false;
        }
        std::ostringstream tag;
        tag << "q=" << q << " (1000 pairs)";
        ck.expect(bound_ok, tag.str() + ": rank never exceeds the star bound");
        ck.expect(exact_ok, tag.str() + ": exactness condition certifies the rank");
    }
    return ck.finish();
}

// ------------------------------------------------------------ decompose

SuiteResult suite_decompose() {
    Checker ck("decompose");

    for (std::uint32_t q : {3u, 4u, 5u}) {
        Field f = field_of_order(q);
        bool eval_ok = true, poly_ok = true, count_ok = true, optimal_ok = true;
        for_each_table(q, [&](const std::vector<std::uint32_t>& t) {
            Permutation p = extend_fixing_inf(t, q);
            AlgebraicRep rep = carlitz_decompose(f, p);
            auto st = star_stats(p);
            if (eval_algebraic(f, rep) != p) eval_ok = false;
            if (!rep.mu.is_polynomial()) poly_ok = false;
            if (rep.shifts.size() != st.star_length) count_ok = false;
            if (q >= 2 * st.moved_points + st.orbit_count + 2 &&
                rep.shifts.size() != carlitz_rank(f, p).rank)
                optimal_ok = false;
        });
        std::ostringstream tag;
        tag << "q=" << q << " (all permutations)";
        ck.expect(eval_ok, tag.str() + ": decomposition re-evaluates to its input");
        ck.expect(poly_ok, tag.str() + ": outer map is a degree-one polynomial");
        ck.expect(count_ok, tag.str() + ": factor count is moved + orbits");
        ck.expect(optimal_ok, tag.str() + ": optimal whenever q >= 2s+t+2");
    }

    {
        // Every permutation of GF(7) is generated by the chain construction.
        Field f(7, 1);
        bool ok = true;
        std::uint64_t count = 0;
        for_each_table(7, [&](const std::vector<std::uint32_t>& t) {
            ++count;
            Permutation p = extend_fixing_inf(t, 7);
            if (eval_algebraic(f, carlitz_decompose(f, p)) != p) ok = false;
        });
        ck.expect(ok && count == 5040,
                  "GF(7): all 5040 permutations arise from chains of x^{q-2} and "
                  "degree-one polynomials");
    }

    for (std::uint32_t q : {7u, 8u, 9u}) {
        Field f = field_of_order(q);
        std::mt19937_64 rng(0xdec0 + q);
        bool eval_ok = true, poly_ok = true, count_ok = true, optimal_ok = true;
        for (int i = 0; i < 1000; ++i) {
            Permutation p = detail::random_permutation_fixing_inf(rng, q);
            AlgebraicRep rep = carlitz_decompose(f, p);
            auto st = star_stats(p);
            if (eval_algebraic(f, rep) != p) eval_ok = false;
            if (!rep.mu.is_polynomial()) poly_ok = false;
            if (rep.shifts.size() != st.star_length) count_ok = false;
            if (q >= 2 * st.moved_points + st.orbit_count + 2 &&
                rep.shifts.size() != carlitz_rank(f, p).rank)
                optimal_ok = false;
        }
        std::ostringstream tag;
        tag << "q=" << q << " (1000 random)";
        ck.expect(eval_ok, tag.str() + ": decomposition re-evaluates to its input");
        ck.expect(poly_ok, tag.str() + ": outer map is a degree-one polynomial");
        ck.expect(count_ok, tag.str() + ": factor count is moved + orbits");
        ck.expect(optimal_ok, tag.str() + ": optimal whenever q >= 2s+t+2");
    }

    Field f5(5, 1);
    AlgebraicRep id_rep = carlitz_decompose(f5, Permutation::identity(5));
    ck.expect(id_rep.shifts.empty() && id_rep.mu.is_identity(),
              "identity decomposes to the empty chain");
    AlgebraicRep two = carlitz_decompose(f5, swap_points(5, 0, 2));
    ck.expect(two.shifts.size() == 3, "a 2-cycle needs three factors");
    ck.expect(two == zieve_identity(f5, 2),
              "GF(5): decomposing (0 2) lands on the classical chain");
    Field f7(7, 1);
    AlgebraicRep mixed = carlitz_decompose(f7, from_cycles({7, {{0, 1, 2}, {3, 4}}}));
    ck.expect(mixed.shifts.size() == 7, "GF(7): (0 1 2)(3 4) takes 5+2 factors");
    return ck.finish();
}

// ---------------------------------------------------- classic-identities

SuiteResult suite_classic_identities() {
    Checker ck("classic-identities");
    for (std::uint32_t q : kSmallQ) {
        Field f = field_of_order(q);
        std::ostringstream tag;
        tag << "q=" << q;
        bool first_ok = true, second_ok = true;
        for (Elem a = 1; a < q; ++a) {
            AlgebraicRep c = carlitz_identity(f, a);
            if (c.mu != Mobius::linear(f, f.neg(f.mul(a, a)), 0)) first_ok = false;
            if (c.shifts != std::vector<Elem>({a, f.neg(f.inv(a)), a})) first_ok = false;
            if (eval_algebraic(f, c) != swap_points(q, 0, a)) first_ok = false;

            AlgebraicRep z = zieve_identity(f, a);
            if (z.mu != Mobius::linear(f, f.neg(f.mul(a, a)), a)) second_ok = false;
            if (z.shifts != std::vector<Elem>({0, f.inv(a), f.neg(a)})) second_ok = false;
            if (eval_algebraic(f, z) != swap_points(q, 0, a)) second_ok = false;
        }
        ck.expect(first_ok, tag.str() + ": the [a,0,a] chain matches its closed form");
        ck.expect(second_ok, tag.str() + ": the [0,a,0] chain matches its closed form");
    }
    Field f5(5, 1);
    AlgebraicRep c = carlitz_identity(f5, 2);
    ck.expect(c.mu.text() == "1*x+0" && c.shifts == std::vector<Elem>({2, 2, 2}),
              "GF(5), a=2: outer map is x, shifts are (2,2,2)");
    bool threw = false;
    try { carlitz_identity(f5, 0); } catch (const std::invalid_argument&) { threw = true; }
    ck.expect(threw, "a = 0 rejected");
    return ck.finish();
}

// --------------------------------------------------------- distribution

SuiteResult suite_distribution() {
    Checker ck("distribution");
    auto h3 = rank_distribution_exhaustive(Field(3, 1));
    ck.expect(h3 == std::map<std::uint32_t, std::uint64_t>({{0, 6}}),
              "GF(3): all six permutations have rank 0");
    auto h4 = rank_distribution_exhaustive(Field(2, 2));
    std::uint64_t total4 = 0;
    for (auto& [r, c] : h4) total4 += c;
    ck.expect(total4 == 24, "GF(4): histogram covers all 24 permutations");
    auto h5 = rank_distribution_exhaustive(Field(5, 1));
    std::uint64_t total5 = 0;
    for (auto& [r, c] : h5) total5 += c;
    ck.expect(total5 == 120, "GF(5): histogram covers all 120 permutations");
    ck.expect(h5[0] == 20, "GF(5): exactly the 20 degree-one polynomials have rank 0");

    Field f7(7, 1);
    auto s1 = rank_distribution_sampled(f7, 200, 42);
    auto s2 = rank_distribution_sampled(f7, 200, 42);
    std::uint64_t total7 = 0;
    for (auto& [r, c] : s1) total7 += c;
    ck.expect(total7 == 200, "GF(7): sampled histogram counts its samples");
    ck.expect(s1 == s2, "same seed reproduces the same histogram");
    bool guard = false;
    try { rank_distribution_exhaustive(f7); } catch (const guard_error&) { guard = true; }
    ck.expect(guard, "exhaustive mode refuses q > 6");
    return ck.finish();
}

// ------------------------------------------------------- text-roundtrip

SuiteResult suite_text_roundtrip() {
    Checker ck("text-roundtrip");

    ck.expect(Field::from_text("q=5").text() == "q=5", "prime field text");
    ck.expect(Field::from_text("q=3^2;mod=1,0,1").text() == "q=3^2;mod=1,0,1",
              "extension field text");
    ck.expect(Field::from_text("q=2^3").text() == "q=2^3;mod=1,0,1,1",
              "default modulus appears in the text form");
    ck.expect(Field::from_text("q=7^1").q() == 7, "explicit degree one accepted");
    for (const char* bad : {"", "7", "q=", "q=6", "q=5^0", "q=3^2;mod=1,1",
                            "q=3^2;mod=1,0,4", "q=3^2;foo=1", "q=x"}) {
        bool threw = false;
        try { Field::from_text(bad); }
        catch (const parse_error&) { threw = true; }
        catch (const std::invalid_argument&) { threw = true; }
        ck.expect(threw, std::string("bad field text rejected: '") + bad + "'");
    }

    for (std::uint32_t q : {5u, 9u}) {
        Field f = field_of_order(q);
        bool ok = true;
        for (const auto& m : enumerate_mobius(f))
            if (Mobius::from_text(f, m.text()) != m) ok = false;
        ck.expect(ok, "q=" + std::to_string(q) + ": every degree-one map round-trips");
    }
    Field f5(5, 1);
    ck.expect(Mobius::identity(f5).text() == "1*x+0", "identity map text");
    ck.expect(Mobius::reciprocal(f5).text() == "(0*x+1)/(1*x+0)", "reciprocal map text");
    ck.expect(Mobius(f5, 2, 3, 0, 1).text() == "(1*x+4)/(0*x+3)",
              "non-monic polynomial keeps its denominator");
    ck.expect(Mobius::from_text(f5, "1*x+0") == Mobius::identity(f5), "plain polynomial parse");
    for (const char* bad : {"", "x", "2x+1", "(1*x+0)/(0*x+0)", "(1*x+0)/", "1*x+9"}) {
        bool threw = false;
        try { Mobius::from_text(f5, bad); } catch (const parse_error&) { threw = true; }
        ck.expect(threw, std::string("bad map text rejected: '") + bad + "'");
    }

    ck.expect(cycle_text(Permutation::identity(5)) == "()", "identity cycle text");
    Field f7(7, 1);
    Permutation two = from_cycles({7, {{0, 3}, {1, 2, 5}}});
    ck.expect(cycle_text(two) == "(0 3)(1 2 5)", "cycle text layout");
    ck.expect(permutation_from_text(f7, "(0 3)(1 2 5)") == two, "cycle text parse");
    ck.expect(oneline_text(swap_points(3, 0, 1)) == "perm:1,0,2,inf", "one-line text layout");
    Field f3(3, 1);
    ck.expect(permutation_from_text(f3, "perm:1,0,2,inf") == swap_points(3, 0, 1),
              "one-line text parse");
    ck.expect(permutation_from_text(f3, "(0 inf)") == swap_points(3, 0, 3),
              "infinity parses inside cycles");
    bool all_roundtrip = true;
    for_each_table(4, [&](const std::vector<std::uint32_t>& t) {
        Permutation p{std::vector<std::uint32_t>(t)};
        if (permutation_from_text(f3, cycle_text(p)) != p) all_roundtrip = false;
        if (permutation_from_text(f3, oneline_text(p)) != p) all_roundtrip = false;
    });
    ck.expect(all_roundtrip, "GF(3): both notations round-trip every permutation");
    std::mt19937_64 rng(0x7e47);
    for (std::uint32_t q : {7u, 9u}) {
        Field f = field_of_order(q);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            Permutation p = detail::random_full_permutation(rng, q);
            if (permutation_from_text(f, cycle_text(p)) != p) ok = false;
            if (permutation_from_text(f, oneline_text(p)) != p) ok = false;
        }
        ck.expect(ok, "q=" + std::to_string(q) + ": random permutations round-trip");
    }
    for (const char* bad : {"", "(0 1", "(0 0)", "(0 9)", "perm:0,1", "perm:0,0,2,inf", "(1)"}) {
        bool threw = false;
        try { permutation_from_text(f3, bad); } catch (const parse_error&) { threw = true; }
        ck.expect(threw, std::string("bad permutation text rejected: '") + bad + "'");
    }

    AlgebraicRep ar{Mobius::identity(f5), {1}};
    ck.expect(algebraic_text(ar) == "alg: mu=1*x+0; a=[1]", "algebraic text layout");
    ck.expect(algebraic_from_text(f5, "alg: mu=1*x+0; a=[1]") == ar, "algebraic text parse");
    CombinatorialRep cr{Mobius(f5, 0, 1, 1, 4), {1}};
    ck.expect(combinatorial_text(cr) == "comb: nu=(0*x+1)/(1*x+4); b=[1]",
              "combinatorial text layout");
    ck.expect(combinatorial_from_text(f5, "comb: nu=(0*x+1)/(1*x+4); b=[1]") == cr,
              "combinatorial text parse");
    AlgebraicRep empty{Mobius::translation(f5, 2), {}};
    ck.expect(algebraic_from_text(f5, algebraic_text(empty)) == empty,
              "empty coefficient list round-trips");
    for (const char* bad : {"alg: mu=1*x+0", "alg: mu=1*x+0; b=[1]", "comb: nu=1*x+0; b=[9]",
                            "alg: mu=1*x+0; a=1", "rep: mu=1*x+0; a=[1]"}) {
        bool threw = false;
        try {
            if (std::string_view(bad).starts_with("comb")) combinatorial_from_text(f5, bad);
            else algebraic_from_text(f5, bad);
        } catch (const parse_error&) { threw = true; }
        ck.expect(threw, std::string("bad representation text rejected: '") + bad + "'");
    }

    ck.expect(point_text(Point::infinity()) == "inf" && point_text(Point::finite(3)) == "3",
              "point text");
    ck.expect(point_from_text(f5, "inf").is_infinity() &&
                  point_from_text(f5, "3") == Point::finite(3),
              "point parse");
    bool threw = false;
    try { point_from_text(f5, "12"); } catch (const parse_error&) { threw = true; }
    ck.expect(threw, "out-of-range point rejected");
    return ck.finish();
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"field", suite_field},
        {"mobius", suite_mobius},
        {"star", suite_star},
        {"text-roundtrip", suite_text_roundtrip},
        {"coeff-roundtrip", suite_coeff_roundtrip},
        {"chain-equivalence", suite_chain_equivalence},
        {"rep-bijection", suite_rep_bijection},
        {"swap-identities", suite_swap_identities},
        {"rank-cross", suite_rank_cross},
        {"rank-bound", suite_rank_bound},
        {"decompose", suite_decompose},
        {"classic-identities", suite_classic_identities},
        {"distribution", suite_distribution},
    };
    return suites;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name) {
    for (const auto& [suite, fn] : suite_registry()) {
        if (suite != name) continue;
        try {
            return fn();
        } catch (const std::exception& e) {
            SuiteResult r;
            r.name = name;
            r.passed = false;
            r.checks = 1;
            r.failed = 1;
            r.failures = {std::string("unexpected exception: ") + e.what()};
            return r;
        }
    }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites() {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name));
    return out;
}

} // namespace projperm
