#include "projperm/reps.hpp"
#include "projperm/errors.hpp"

#include <algorithm>
#include <sstream>

namespace projperm {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::string list_text(const std::vector<Elem>& xs) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    out << ']';
    return out.str();
}

std::vector<Elem> parse_list(const Field& field, std::string_view s, const char* what) {
    s = trimmed(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error(std::string("expected '[...]' for ") + what);
    s = trimmed(s.substr(1, s.size() - 2));
    std::vector<Elem> out;
    if (s.empty()) return out;
    while (true) {
        auto comma = s.find(',');
        std::string_view tok = trimmed(s.substr(0, comma));
        Elem v = 0;
        bool ok = !tok.empty();
        for (char ch : tok) {
            if (ch < '0' || ch > '9') { ok = false; break; }
            v = v * 10 + static_cast<Elem>(ch - '0');
            if (v >= field.q() * 10 + 10) break;
        }
        if (!ok || !field.has(v))
            throw parse_error(std::string("bad ") + what + " entry: '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

// Splits "mu=<map>; x=[...]" after the family tag.
std::pair<Mobius, std::vector<Elem>> parse_rep_body(const Field& field, std::string_view body,
                                                    const char* map_key, const char* list_key) {
    body = trimmed(body);
    auto semi = body.find(';');
    if (semi == std::string_view::npos)
        throw parse_error("expected ';' between map and coefficient list");
    std::string_view head = trimmed(body.substr(0, semi));
    std::string_view tail = trimmed(body.substr(semi + 1));
    std::string head_prefix = std::string(map_key) + "=";
    std::string tail_prefix = std::string(list_key) + "=";
    if (!head.starts_with(head_prefix))
        throw parse_error(std::string("expected '") + map_key + "=' clause");
    if (!tail.starts_with(tail_prefix))
        throw parse_error(std::string("expected '") + list_key + "=' clause");
    Mobius m = Mobius::from_text(field, head.substr(head_prefix.size()));
    std::vector<Elem> xs = parse_list(field, tail.substr(tail_prefix.size()), list_key);
    return {m, xs};
}

} // namespace

Permutation eval_algebraic(const Field& field, const AlgebraicRep& r) {
    const std::uint32_t q = field.q();
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) {
        Point x = Point::from_slot(i, q);
        for (Elem a : r.shifts) {
            if (!x.is_infinity()) x = Point::finite(field.inv0(field.sub(x.value(), a)));
        }
        t[i] = r.mu.eval(field, x).slot(q);
    }
    return Permutation(std::move(t));
}

Permutation eval_combinatorial(const Field& field, const CombinatorialRep& r) {
    const std::uint32_t q = field.q();
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) {
        std::uint32_t x = i;
        for (std::size_t j = r.swaps.size(); j-- > 0;) {
            if (x == r.swaps[j]) x = q;
            else if (x == q) x = r.swaps[j];
        }
        t[i] = r.nu.eval(field, Point::from_slot(x, q)).slot(q);
    }
    return Permutation(std::move(t));
}

std::vector<Elem> shifts_to_swaps(const Field& field, const std::vector<Elem>& shifts) {
    std::vector<Elem> swaps(shifts.size());
    for (std::size_t i = 1; i <= shifts.size(); ++i) {
        Elem c = 0;
        for (std::size_t j = 1; j <= i; ++j)
            c = field.add(field.inv0(c), shifts[i - j]);   // a_{i-j+1}
        swaps[i - 1] = c;
    }
    return swaps;
}

std::vector<Elem> diff_inverse_step(const Field& field, const std::vector<Elem>& e) {
    if (e.size() < 2)
        throw std::invalid_argument("difference-inverse step needs at least two entries");
    std::vector<Elem> out(e.size() - 1);
    for (std::size_t i = 1; i < e.size(); ++i)
        out[i - 1] = field.inv0(field.sub(e[i], e[0]));
    return out;
}

std::vector<Elem> swaps_to_shifts(const Field& field, const std::vector<Elem>& swaps) {
    std::vector<Elem> shifts(swaps.size());
    std::vector<Elem> level = swaps;
    for (std::size_t i = 0; i < swaps.size(); ++i) {
        shifts[i] = level[0];
        if (level.size() >= 2) level = diff_inverse_step(field, level);
    }
    return shifts;
}

CombinatorialRep to_combinatorial(const Field& field, const AlgebraicRep& r) {
    Mobius nu = r.mu;
    const Mobius rec = Mobius::reciprocal(field);
    // nu = mu o 1/x o (x-a_k) o ... o 1/x o (x-a_1): append factors left to right.
    for (std::size_t i = r.shifts.size(); i-- > 0;) {
        nu = compose(field, nu, rec);
        nu = compose(field, nu, Mobius(field, 1, field.neg(r.shifts[i]), 0, 1));
    }
    return CombinatorialRep{nu, shifts_to_swaps(field, r.shifts)};
}

AlgebraicRep to_algebraic(const Field& field, const CombinatorialRep& r) {
    std::vector<Elem> shifts = swaps_to_shifts(field, r.swaps);
    Mobius mu = r.nu;
    const Mobius rec = Mobius::reciprocal(field);
    // mu = nu o (x+a_1) o 1/x o (x+a_2) o 1/x o ... o (x+a_k) o 1/x.
    for (Elem a : shifts) {
        mu = compose(field, mu, Mobius(field, 1, a, 0, 1));
        mu = compose(field, mu, rec);
    }
    return AlgebraicRep{mu, shifts};
}

namespace {

void check_enumeration_guards(const Field& field, const Permutation& sigma, std::uint32_t k) {
    if (sigma.points() != field.q() + 1)
        throw std::invalid_argument("permutation size does not match field");
    if (k < 1) throw std::invalid_argument("representation length k must be at least 1");
    if (k > 4) throw guard_error("enumeration limited to k <= 4");
    if (field.q() > 9) throw guard_error("enumeration limited to q <= 9");
}

// Advances a base-q odometer; returns false after the last tuple.
bool next_tuple(std::vector<Elem>& tuple, std::uint32_t q) {
    for (std::size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < q) return true;
        tuple[i] = 0;
    }
    return false;
}

} // namespace

std::vector<AlgebraicRep> enumerate_algebraic(const Field& field, const Permutation& sigma,
                                              std::uint32_t k) {
    check_enumeration_guards(field, sigma, k);
    std::vector<AlgebraicRep> out;
    std::vector<Elem> tuple(k, 0);
    do {
        Permutation chain = eval_algebraic(field, {Mobius::identity(field), tuple});
        Permutation residue = compose(sigma, inverse(chain));
        if (auto m = mobius_from_permutation(field, residue))
            out.push_back(AlgebraicRep{*m, tuple});
    } while (next_tuple(tuple, field.q()));
    return out;
}

std::vector<CombinatorialRep> enumerate_combinatorial(const Field& field,
                                                      const Permutation& sigma,
                                                      std::uint32_t k) {
    check_enumeration_guards(field, sigma, k);
    std::vector<CombinatorialRep> out;
    std::vector<Elem> tuple(k, 0);
    do {
        Permutation chain = compose_star_word(field.q(), tuple);
        Permutation residue = compose(sigma, inverse(chain));
        if (auto m = mobius_from_permutation(field, residue))
            out.push_back(CombinatorialRep{*m, tuple});
    } while (next_tuple(tuple, field.q()));
    return out;
}

std::string algebraic_text(const AlgebraicRep& r) {
    return "alg: mu=" + r.mu.text() + "; a=" + list_text(r.shifts);
}

std::string combinatorial_text(const CombinatorialRep& r) {
    return "comb: nu=" + r.nu.text() + "; b=" + list_text(r.swaps);
}

AlgebraicRep algebraic_from_text(const Field& field, std::string_view text) {
    std::string_view s = trimmed(text);
    if (!s.starts_with("alg:")) throw parse_error("algebraic text must start with 'alg:'");
    auto [m, xs] = parse_rep_body(field, s.substr(4), "mu", "a");
    return AlgebraicRep{m, xs};
}

CombinatorialRep combinatorial_from_text(const Field& field, std::string_view text) {
    std::string_view s = trimmed(text);
    if (!s.starts_with("comb:")) throw parse_error("combinatorial text must start with 'comb:'");
    auto [m, xs] = parse_rep_body(field, s.substr(5), "nu", "b");
    return CombinatorialRep{m, xs};
}

} // namespace projperm
