#include "projperm/gf.hpp"
#include "projperm/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace projperm {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Extended Euclid on integers; a in [1, p), p prime.
std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quo = r0 / r1;
        std::int64_t r2 = r0 - quo * r1;
        std::int64_t t2 = t0 - quo * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    t0 %= static_cast<std::int64_t>(p);
    if (t0 < 0) t0 += p;
    return static_cast<std::uint32_t>(t0);
}

// Polynomials over Z_p, little-endian coefficient vectors; empty = zero.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    poly_trim(out);
    return out;
}

// Division with remainder; divisor nonzero.
void poly_divmod(Poly a, const Poly& b, std::uint32_t p, Poly& quo, Poly& rem) {
    quo.assign(a.size(), 0);
    std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (poly_deg(a) >= poly_deg(b)) {
        std::size_t shift = a.size() - b.size();
        std::uint32_t factor = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        quo[shift] = factor;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[j] % p;
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
        }
        poly_trim(a);
    }
    poly_trim(quo);
    rem = std::move(a);
}

Poly poly_mod(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly quo, rem;
    poly_divmod(a, b, p, quo, rem);
    return rem;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        out[i] = (x + p - y) % p;
    }
    poly_trim(out);
    return out;
}

// Inverse of a modulo m (monic, irreducible); a nonzero of degree < deg(m).
Poly poly_inverse(const Poly& a, const Poly& m, std::uint32_t p) {
    Poly r0 = m, r1 = a, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        Poly quo, rem;
        poly_divmod(r0, r1, p, quo, rem);
        Poly t2 = poly_sub(t0, poly_mul(quo, t1, p), p);
        r0 = std::move(r1); r1 = std::move(rem);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd.
    std::uint32_t scale = inv_mod_p(r0[0], p);
    Poly inv = poly_mul(t0, {scale}, p);
    return poly_mod(inv, m, p);
}

bool divides_trial(const Poly& candidate, std::uint32_t p, std::uint32_t n) {
    // Trial division by every monic polynomial of degree 1..n/2.
    for (std::uint32_t d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly div(d + 1, 0);
            std::uint64_t rest = v;
            for (std::uint32_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            div[d] = 1;
            if (poly_mod(candidate, div, p).empty()) return true;
        }
    }
    return false;
}

bool is_irreducible(const Poly& candidate, std::uint32_t p, std::uint32_t n) {
    return !divides_trial(candidate, p, n);
}

std::uint64_t checked_pow(std::uint32_t p, std::uint32_t n) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) throw guard_error("field order exceeds 65536");
    }
    return q;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Field::Field(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
    if (n > 9) throw guard_error("extension degree limited to 9");
    std::uint64_t q = checked_pow(p, n);
    if (q <= 2) throw std::invalid_argument("field order must exceed 2");
    q_ = static_cast<std::uint32_t>(q);
    if (n == 1) {
        modulus_ = {1, 0};
    } else {
        if (q_ > 512)
            throw std::invalid_argument(
                "no built-in modulus for q > 512; supply one explicitly");
        // Lexicographically smallest monic irreducible of degree n,
        // coefficients compared most-significant first.
        bool found = false;
        for (std::uint32_t v = 0; v < q_ && !found; ++v) {
            Poly cand(n + 1, 0);
            std::uint32_t rest = v;
            for (std::uint32_t i = 0; i < n; ++i) {
                cand[i] = rest % p;   // high digit of v = coefficient of x^{n-1}
                rest /= p;
            }
            cand[n] = 1;
            if (is_irreducible(cand, p, n)) {
                modulus_.assign(n + 1, 0);
                for (std::uint32_t i = 0; i <= n; ++i) modulus_[i] = cand[n - i];
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("no irreducible modulus found");
    }
    build_tables();
}

Field::Field(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus)
    : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (n < 1) throw std::invalid_argument("extension degree must be at least 1");
    if (n > 9) throw guard_error("extension degree limited to 9");
    std::uint64_t q = checked_pow(p, n);
    if (q <= 2) throw std::invalid_argument("field order must exceed 2");
    q_ = static_cast<std::uint32_t>(q);
    if (modulus.size() != n + 1)
        throw std::invalid_argument("modulus must have degree+1 coefficients");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (modulus.front() != 1) throw std::invalid_argument("modulus must be monic");
    if (n == 1) {
        if (modulus != std::vector<std::uint32_t>{1, 0})
            throw std::invalid_argument(
                "prime fields use residue arithmetic; only the modulus x is accepted");
    } else {
        Poly little(n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) little[i] = modulus[n - i];
        if (!is_irreducible(little, p, n))
            throw std::invalid_argument("modulus is reducible");
    }
    modulus_ = modulus;
    build_tables();
}

void Field::build_tables() {
    inv0_.assign(q_, 0);
    if (n_ == 1) {
        for (Elem a = 1; a < q_; ++a) inv0_[a] = inv_mod_p(a, p_);
        return;
    }
    Poly mod_little(n_ + 1);
    for (std::uint32_t i = 0; i <= n_; ++i) mod_little[i] = modulus_[n_ - i];
    for (Elem a = 1; a < q_; ++a) {
        Poly pa;
        std::uint32_t rest = a;
        while (rest) { pa.push_back(rest % p_); rest /= p_; }
        Poly inv = poly_inverse(pa, mod_little, p_);
        Elem enc = 0;
        for (std::size_t i = inv.size(); i-- > 0;) enc = enc * p_ + inv[i];
        inv0_[a] = enc;
    }
}

void Field::check(Elem a) const {
    if (a >= q_) throw std::invalid_argument("element index out of range");
}

Elem Field::add(Elem a, Elem b) const {
    check(a); check(b);
    if (n_ == 1) return (a + b) % p_;
    Elem out = 0, scale = 1;
    while (a || b) {
        out += (a % p_ + b % p_) % p_ * scale;
        a /= p_; b /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::neg(Elem a) const {
    check(a);
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    Elem out = 0, scale = 1;
    while (a) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    check(a); check(b);
    if (n_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::array<std::uint32_t, 9> da{}, db{};
    std::array<std::uint32_t, 17> prod{};
    std::uint32_t rest = a;
    for (std::uint32_t i = 0; i < n_; ++i) { da[i] = rest % p_; rest /= p_; }
    rest = b;
    for (std::uint32_t i = 0; i < n_; ++i) { db[i] = rest % p_; rest /= p_; }
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    // Reduce by the monic modulus.
    for (std::uint32_t i = 2 * n_ - 2; i + 1 > n_; --i) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < n_; ++j) {
            std::uint32_t m = modulus_[n_ - j];   // coefficient of x^j
            prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - m % p_) * c) % p_;
        }
    }
    Elem out = 0;
    for (std::uint32_t i = n_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return inv0_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    check(a);
    Elem out = 1, base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Field Field::from_text(std::string_view text) {
    std::string_view s = trimmed(text);
    if (!s.starts_with("q="))
        throw parse_error("field text must start with 'q=': '" + std::string(text) + "'");
    s.remove_prefix(2);
    std::string_view head = s, mod_part;
    if (auto semi = s.find(';'); semi != std::string_view::npos) {
        head = s.substr(0, semi);
        mod_part = s.substr(semi + 1);
    }
    head = trimmed(head);
    std::uint32_t p = 0, n = 1;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = parse_uint(trimmed(head.substr(0, caret)), "characteristic");
        n = parse_uint(trimmed(head.substr(caret + 1)), "degree");
    } else {
        p = parse_uint(head, "characteristic");
    }
    if (mod_part.empty()) return Field(p, n);
    mod_part = trimmed(mod_part);
    if (!mod_part.starts_with("mod="))
        throw parse_error("expected 'mod=' clause: '" + std::string(text) + "'");
    mod_part.remove_prefix(4);
    std::vector<std::uint32_t> coeffs;
    while (true) {
        auto comma = mod_part.find(',');
        std::string_view tok = trimmed(mod_part.substr(0, comma));
        coeffs.push_back(parse_uint(tok, "modulus coefficient"));
        if (comma == std::string_view::npos) break;
        mod_part.remove_prefix(comma + 1);
    }
    return Field(p, n, coeffs);
}

std::string Field::text() const {
    std::ostringstream out;
    out << "q=" << p_;
    if (n_ > 1) {
        out << '^' << n_ << ";mod=";
        for (std::uint32_t i = 0; i <= n_; ++i) {
            if (i) out << ',';
            out << modulus_[i];
        }
    }
    return out.str();
}

} // namespace projperm
