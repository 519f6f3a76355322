#include "projperm/projline.hpp"
#include "projperm/errors.hpp"

#include <charconv>
#include <sstream>
#include <tuple>

namespace projperm {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Elem parse_elem(const Field& field, std::string_view tok, const char* what) {
    tok = trimmed(tok);
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(std::string("bad ") + what + ": '" + std::string(tok) + "'");
    if (!field.has(v))
        throw parse_error(std::string(what) + " index " + std::string(tok) +
                          " outside field of order " + std::to_string(field.q()));
    return v;
}

// "a*x+b" -> (a, b).
std::pair<Elem, Elem> parse_linear_form(const Field& field, std::string_view s) {
    s = trimmed(s);
    auto star = s.find("*x+");
    if (star == std::string_view::npos)
        throw parse_error("expected '<a>*x+<b>': '" + std::string(s) + "'");
    Elem a = parse_elem(field, s.substr(0, star), "coefficient");
    Elem b = parse_elem(field, s.substr(star + 3), "coefficient");
    return {a, b};
}

} // namespace

Mobius::Mobius(const Field& field, Elem a, Elem b, Elem c, Elem d) {
    for (Elem v : {a, b, c, d})
        if (!field.has(v)) throw std::invalid_argument("coefficient index out of range");
    Elem det = field.sub(field.mul(a, d), field.mul(b, c));
    if (det == 0) throw std::invalid_argument("degree-one map needs nonzero determinant");
    Elem lead = a != 0 ? a : (b != 0 ? b : c);
    Elem s = field.inv(lead);
    a_ = field.mul(a, s);
    b_ = field.mul(b, s);
    c_ = field.mul(c, s);
    d_ = field.mul(d, s);
}

Mobius Mobius::linear(const Field& field, Elem a, Elem b) {
    if (a == 0) throw std::invalid_argument("degree-one polynomial needs a != 0");
    return Mobius(field, a, b, 0, 1);
}

Point Mobius::eval(const Field& field, Point x) const {
    if (x.is_infinity()) {
        if (c_ == 0) return Point::infinity();
        return Point::finite(field.mul(a_, field.inv(c_)));
    }
    Elem v = x.value();
    Elem den = field.add(field.mul(c_, v), d_);
    Elem num = field.add(field.mul(a_, v), b_);
    if (den == 0) return Point::infinity();
    return Point::finite(field.mul(num, field.inv(den)));
}

bool Mobius::operator<(const Mobius& other) const {
    return std::tie(a_, b_, c_, d_) < std::tie(other.a_, other.b_, other.c_, other.d_);
}

std::string Mobius::text() const {
    std::ostringstream out;
    if (c_ == 0 && d_ == 1) {
        out << a_ << "*x+" << b_;
    } else {
        out << '(' << a_ << "*x+" << b_ << ")/(" << c_ << "*x+" << d_ << ')';
    }
    return out.str();
}

Mobius Mobius::from_text(const Field& field, std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw parse_error("empty degree-one map text");
    try {
        if (s.front() == '(') {
            auto close = s.find(')');
            if (close == std::string_view::npos || close + 1 >= s.size() || s[close + 1] != '/')
                throw parse_error("expected '(<num>)/(<den>)': '" + std::string(s) + "'");
            std::string_view den = trimmed(s.substr(close + 2));
            if (den.size() < 2 || den.front() != '(' || den.back() != ')')
                throw parse_error("expected '(<num>)/(<den>)': '" + std::string(s) + "'");
            auto [a, b] = parse_linear_form(field, s.substr(1, close - 1));
            auto [c, d] = parse_linear_form(field, den.substr(1, den.size() - 2));
            return Mobius(field, a, b, c, d);
        }
        auto [a, b] = parse_linear_form(field, s);
        return Mobius(field, a, b, 0, 1);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Mobius compose(const Field& field, const Mobius& m1, const Mobius& m2) {
    Elem a = field.add(field.mul(m1.a(), m2.a()), field.mul(m1.b(), m2.c()));
    Elem b = field.add(field.mul(m1.a(), m2.b()), field.mul(m1.b(), m2.d()));
    Elem c = field.add(field.mul(m1.c(), m2.a()), field.mul(m1.d(), m2.c()));
    Elem d = field.add(field.mul(m1.c(), m2.b()), field.mul(m1.d(), m2.d()));
    return Mobius(field, a, b, c, d);
}

Mobius mobius_inverse(const Field& field, const Mobius& m) {
    return Mobius(field, m.d(), field.neg(m.b()), field.neg(m.c()), m.a());
}

Permutation to_permutation(const Field& field, const Mobius& m) {
    const std::uint32_t q = field.q();
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i)
        t[i] = m.eval(field, Point::from_slot(i, q)).slot(q);
    return Permutation(std::move(t));
}

std::optional<Mobius> mobius_from_permutation(const Field& field, const Permutation& p) {
    if (p.points() != field.q() + 1)
        throw std::invalid_argument("permutation size does not match field");
    const std::uint32_t q = field.q();
    const std::uint32_t y0 = p.image(0), y1 = p.image(1), yi = p.image(q);
    Elem a, b, c, d;
    if (yi == q) {
        // Fixes infinity: a polynomial map.
        a = field.sub(y1, y0);
        b = y0;
        c = 0;
        d = 1;
    } else if (y0 == q) {
        // 0 -> infinity: denominator x.
        a = yi;
        b = field.sub(y1, yi);
        c = 1;
        d = 0;
    } else if (y1 == q) {
        // 1 -> infinity: denominator x - 1.
        a = yi;
        b = field.neg(y0);
        c = 1;
        d = field.from_int(-1);
    } else {
        a = yi;
        c = 1;
        d = field.mul(field.sub(y1, yi), field.inv(field.sub(y0, y1)));
        b = field.mul(y0, d);
    }
    Elem det = field.sub(field.mul(a, d), field.mul(b, c));
    if (det == 0) return std::nullopt;
    Mobius m(field, a, b, c, d);
    for (std::uint32_t i = 0; i <= q; ++i)
        if (m.eval(field, Point::from_slot(i, q)).slot(q) != p.image(i))
            return std::nullopt;
    return m;
}

Permutation invstar_permutation(const Field& field) {
    const std::uint32_t q = field.q();
    std::vector<std::uint32_t> t(q + 1);
    t[q] = q;
    for (std::uint32_t i = 0; i < q; ++i) t[i] = field.inv0(i);
    return Permutation(std::move(t));
}

std::vector<Mobius> enumerate_mobius(const Field& field) {
    const std::uint32_t q = field.q();
    std::vector<Mobius> out;
    out.reserve(static_cast<std::size_t>(q) * q * q - q);
    // Canonical forms with a = 0 force b = 1 and c != 0.
    for (Elem c = 1; c < q; ++c)
        for (Elem d = 0; d < q; ++d)
            out.push_back(Mobius(field, 0, 1, c, d));
    for (Elem b = 0; b < q; ++b)
        for (Elem c = 0; c < q; ++c)
            for (Elem d = 0; d < q; ++d)
                if (d != field.mul(b, c)) out.push_back(Mobius(field, 1, b, c, d));
    return out;
}

} // namespace projperm
