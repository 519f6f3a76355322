#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projperm {

/// Index of a field element in base-p positional encoding:
/// the element sum_i c_i * alpha^i has index sum_i c_i * p^i,
/// where alpha is the residue of x modulo the defining polynomial.
/// For prime fields this is the usual residue 0..p-1.
using Elem = std::uint32_t;

/**
 * Arithmetic context for GF(q), q = p^n with q > 2.
 *
 * Elements are plain integer indices (see Elem); all operations take the
 * field as explicit context.  Extension fields reduce modulo a monic
 * irreducible polynomial of degree n, either supplied by the caller or
 * chosen deterministically (lexicographically smallest, coefficients
 * compared most-significant first).
 *
 * Inverses come from the extended Euclidean algorithm, precomputed into a
 * table at construction.  This is deliberately a different route than
 * pow(x, q-2), so the two can cross-check each other.
 */
class Field {
public:
    /// Prime field GF(p) or extension GF(p^n) with the default modulus.
    Field(std::uint32_t p, std::uint32_t n);

    /// Extension field with an explicit monic irreducible modulus,
    /// given as n+1 coefficients most-significant first (modulus[0] == 1).
    Field(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus);

    /// Parses "q=<p>^<n>[;mod=<c_n>,...,<c_0>]"; "^1" may be omitted for
    /// prime fields, e.g. "q=7" or "q=3^2;mod=1,0,1".
    static Field from_text(std::string_view text);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return n_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, most-significant first (size degree()+1).
    /// Prime fields report x - 0, i.e. {1, 0}.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Canonical text form, round-trips through from_text().
    std::string text() const;

    bool has(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;

    /// Multiplicative inverse; throws std::invalid_argument on 0.
    Elem inv(Elem a) const;

    /// Inverse extended by inv0(0) = 0; total on the field.
    Elem inv0(Elem a) const { check(a); return inv0_[a]; }

    /// Square-and-multiply exponentiation; pow(0, 0) = 1.
    Elem pow(Elem a, std::uint64_t e) const;

    /// Reduces a signed integer into the prime subfield (useful for
    /// literals like -1); extension fields embed via the constant term.
    Elem from_int(std::int64_t v) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    void check(Elem a) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_; // most-significant first, size n_+1
    std::vector<Elem> inv0_;
};

} // namespace projperm
