#include "projperm/perm.hpp"
#include "projperm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace projperm {

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint32_t parse_slot(const Field& field, std::string_view tok) {
    tok = trimmed(tok);
    if (tok == "inf") return field.q();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("bad point: '" + std::string(tok) + "'");
    if (v >= field.q())
        throw parse_error("point index " + std::string(tok) + " outside field of order " +
                          std::to_string(field.q()));
    return v;
}

std::string slot_text(std::uint32_t slot, std::uint32_t q) {
    return slot == q ? "inf" : std::to_string(slot);
}

} // namespace

Permutation::Permutation(std::vector<std::uint32_t> table) : table_(std::move(table)) {
    if (table_.size() < 2) throw std::invalid_argument("permutation table too short");
    std::vector<bool> seen(table_.size(), false);
    for (auto v : table_) {
        if (v >= table_.size() || seen[v])
            throw std::invalid_argument("permutation table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::uint32_t q) {
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) t[i] = i;
    return Permutation(std::move(t));
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < table_.size(); ++i)
        if (table_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p1, const Permutation& p2) {
    if (p1.points() != p2.points())
        throw std::invalid_argument("permutations over different fields");
    std::vector<std::uint32_t> t(p1.points());
    for (std::uint32_t i = 0; i < t.size(); ++i) t[i] = p1.image(p2.image(i));
    return Permutation(std::move(t));
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint32_t> t(p.points());
    for (std::uint32_t i = 0; i < t.size(); ++i) t[p.image(i)] = i;
    return Permutation(std::move(t));
}

Permutation transposition(std::uint32_t q, Elem b) {
    if (b >= q) throw std::invalid_argument("transposition point outside field");
    return swap_points(q, b, q);
}

Permutation swap_points(std::uint32_t q, std::uint32_t u, std::uint32_t v) {
    if (u > q || v > q || u == v) throw std::invalid_argument("bad swap points");
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) t[i] = i;
    std::swap(t[u], t[v]);
    return Permutation(std::move(t));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    CycleDecomposition out;
    out.q = p.q();
    std::vector<bool> seen(p.points(), false);
    for (std::uint32_t start = 0; start < p.points(); ++start) {
        if (seen[start] || p.image(start) == start) {
            seen[start] = true;
            continue;
        }
        std::vector<std::uint32_t> cycle;
        std::uint32_t x = start;
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(x);
            x = p.image(x);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

Permutation from_cycles(const CycleDecomposition& d) {
    std::vector<std::uint32_t> t(d.q + 1);
    for (std::uint32_t i = 0; i <= d.q; ++i) t[i] = i;
    std::vector<bool> used(d.q + 1, false);
    for (const auto& cycle : d.cycles) {
        if (cycle.size() < 2) throw std::invalid_argument("cycle of length < 2");
        for (std::uint32_t x : cycle) {
            if (x > d.q || used[x]) throw std::invalid_argument("cycles are not disjoint");
            used[x] = true;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            t[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(t));
}

StarStats star_stats(const Permutation& p) {
    StarStats st;
    const std::uint32_t q = p.q();
    for (std::uint32_t i = 0; i < q; ++i)
        if (p.image(i) != i) ++st.moved_points;
    st.moves_infinity = p.image(q) != q;
    st.orbit_count = static_cast<std::uint32_t>(cycle_decomposition(p).cycles.size());
    st.star_length = st.moved_points + st.orbit_count - (st.moves_infinity ? 1 : 0);
    return st;
}

std::vector<Elem> star_factorize(const Permutation& p) {
    const std::uint32_t q = p.q();
    std::vector<Elem> word;
    for (const auto& cycle : cycle_decomposition(p).cycles) {
        auto inf_pos = std::find(cycle.begin(), cycle.end(), q);
        if (inf_pos == cycle.end()) {
            // (b_1,...,b_s) = (b_1,inf) o (b_s,inf) o ... o (b_2,inf) o (b_1,inf)
            word.push_back(cycle.front());
            for (std::size_t i = cycle.size(); i-- > 1;) word.push_back(cycle[i]);
            word.push_back(cycle.front());
        } else {
            // Rotate to (x_1,...,x_l,inf); then (x_l,inf) o ... o (x_1,inf).
            std::vector<Elem> xs;
            std::size_t at = static_cast<std::size_t>(inf_pos - cycle.begin());
            for (std::size_t step = 1; step < cycle.size(); ++step)
                xs.push_back(cycle[(at + step) % cycle.size()]);
            word.insert(word.end(), xs.rbegin(), xs.rend());
        }
    }
    return word;
}

Permutation compose_star_word(std::uint32_t q, const std::vector<Elem>& word) {
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) t[i] = i;
    // Build the image of each point by walking the word right-to-left.
    for (std::uint32_t i = 0; i <= q; ++i) {
        std::uint32_t x = i;
        for (std::size_t j = word.size(); j-- > 0;) {
            if (x == word[j]) x = q;
            else if (x == q) x = word[j];
        }
        t[i] = x;
    }
    return Permutation(std::move(t));
}

std::string cycle_text(const Permutation& p) {
    auto d = cycle_decomposition(p);
    if (d.cycles.empty()) return "()";
    std::ostringstream out;
    for (const auto& cycle : d.cycles) {
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out << ' ';
            out << slot_text(cycle[i], p.q());
        }
        out << ')';
    }
    return out.str();
}

std::string oneline_text(const Permutation& p) {
    std::ostringstream out;
    out << "perm:";
    for (std::uint32_t i = 0; i < p.points(); ++i) {
        if (i) out << ',';
        out << slot_text(p.image(i), p.q());
    }
    return out.str();
}

namespace {

Permutation parse_oneline(const Field& field, std::string_view body) {
    std::vector<std::uint32_t> t;
    while (true) {
        auto comma = body.find(',');
        t.push_back(parse_slot(field, body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (t.size() != field.q() + 1)
        throw parse_error("one-line permutation must list " +
                          std::to_string(field.q() + 1) + " images");
    try {
        return Permutation(std::move(t));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Permutation parse_cycles(const Field& field, std::string_view s) {
    const std::uint32_t q = field.q();
    std::vector<std::uint32_t> t(q + 1);
    for (std::uint32_t i = 0; i <= q; ++i) t[i] = i;
    bool any = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ' ' || s[pos] == '\t') { ++pos; continue; }
        if (s[pos] != '(') throw parse_error("expected '(' in cycle notation");
        auto close = s.find(')', pos);
        if (close == std::string_view::npos) throw parse_error("unbalanced '(' in cycle notation");
        std::string_view inner = s.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        any = true;
        std::vector<std::uint32_t> cycle;
        std::size_t at = 0;
        while (at < inner.size()) {
            if (inner[at] == ' ' || inner[at] == '\t') { ++at; continue; }
            std::size_t end = at;
            while (end < inner.size() && inner[end] != ' ' && inner[end] != '\t') ++end;
            cycle.push_back(parse_slot(field, inner.substr(at, end - at)));
            at = end;
        }
        if (cycle.empty()) continue;
        if (cycle.size() == 1) throw parse_error("cycle of length 1");
        std::vector<bool> dup(q + 1, false);
        for (auto x : cycle) {
            if (dup[x]) throw parse_error("repeated point within a cycle");
            dup[x] = true;
        }
        // Listed cycles compose right-to-left, so fold this one in on the right.
        std::vector<std::uint32_t> c(q + 1);
        for (std::uint32_t i = 0; i <= q; ++i) c[i] = i;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            c[cycle[i]] = cycle[(i + 1) % cycle.size()];
        std::vector<std::uint32_t> merged(q + 1);
        for (std::uint32_t i = 0; i <= q; ++i) merged[i] = t[c[i]];
        t = std::move(merged);
    }
    if (!any) throw parse_error("empty permutation text");
    return Permutation(std::move(t));
}

} // namespace

Permutation permutation_from_text(const Field& field, std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.starts_with("perm:")) return parse_oneline(field, s.substr(5));
    return parse_cycles(field, s);
}

} // namespace projperm
