#pragma once

#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/point.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace projperm {

/**
 * A degree-one rational map x -> (ax+b)/(cx+d) with ad - bc != 0, acting on
 * the projective line over GF(q).  Stored in canonical form: the first
 * nonzero coefficient in the order (a, b, c, d) equals 1, so componentwise
 * equality decides equality in PGL(2, q).
 */
class Mobius {
public:
    Mobius(const Field& field, Elem a, Elem b, Elem c, Elem d);

    static Mobius identity(const Field& field) { return Mobius(field, 1, 0, 0, 1); }
    /// x -> 1/x.
    static Mobius reciprocal(const Field& field) { return Mobius(field, 0, 1, 1, 0); }
    /// x -> a*x + b with a != 0.
    static Mobius linear(const Field& field, Elem a, Elem b);
    /// x -> x + b.
    static Mobius translation(const Field& field, Elem b) { return Mobius(field, 1, b, 0, 1); }

    Elem a() const { return a_; }
    Elem b() const { return b_; }
    Elem c() const { return c_; }
    Elem d() const { return d_; }

    /// True iff the map fixes infinity, i.e. c == 0 in canonical form.
    bool is_polynomial() const { return c_ == 0; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    Point eval(const Field& field, Point x) const;

    /// "(a*x+b)/(c*x+d)"; with canonical denominator exactly 1, just "a*x+b".
    std::string text() const;
    static Mobius from_text(const Field& field, std::string_view text);

    bool operator==(const Mobius&) const = default;

    /// Canonical tuples compare lexicographically by (a, b, c, d).
    bool operator<(const Mobius& other) const;

private:
    Elem a_, b_, c_, d_;
};

/// Applies m2 first, then m1 (2x2 matrix product, re-canonicalized).
Mobius compose(const Field& field, const Mobius& m1, const Mobius& m2);
Mobius mobius_inverse(const Field& field, const Mobius& m);

Permutation to_permutation(const Field& field, const Mobius& m);

/// The unique degree-one map inducing p, if any: interpolates on 0, 1,
/// infinity and verifies every point.
std::optional<Mobius> mobius_from_permutation(const Field& field, const Permutation& p);

/**
 * The permutation induced by the polynomial x^{q-2}: fixes 0 and infinity,
 * inverts everything else.  Not a degree-one map for q > 3.
 */
Permutation invstar_permutation(const Field& field);

/// All q^3 - q elements of PGL(2, q) in increasing canonical order.
std::vector<Mobius> enumerate_mobius(const Field& field);

} // namespace projperm
