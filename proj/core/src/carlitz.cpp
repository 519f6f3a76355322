#include "projperm/carlitz.hpp"
#include "projperm/errors.hpp"
#include "rng.hpp"

#include <algorithm>
#include <optional>

namespace projperm {

namespace {

void require_fixes_infinity(const Field& field, const Permutation& f) {
    if (f.points() != field.q() + 1)
        throw std::invalid_argument("permutation size does not match field");
    if (!f.fixes_infinity())
        throw std::invalid_argument("permutation must fix infinity");
}

std::uint64_t pack_key(const std::vector<std::uint8_t>& table) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
        key |= static_cast<std::uint64_t>(table[i]) << (4 * i);
    return key;
}

} // namespace

RankResult carlitz_rank(const Field& field, const Permutation& f) {
    require_fixes_infinity(field, f);
    if (field.q() > 64) throw guard_error("rank scan limited to q <= 64");

    std::optional<Mobius> best_nu;
    std::optional<Permutation> best_sigma;
    std::uint32_t best_len = 0;
    for (const Mobius& nu : enumerate_mobius(field)) {
        Permutation sigma = compose(to_permutation(field, mobius_inverse(field, nu)), f);
        std::uint32_t len = star_stats(sigma).star_length;
        if (!best_nu || len < best_len) {
            best_nu = nu;
            best_sigma = std::move(sigma);
            best_len = len;
            if (len == 0) break;
        }
    }
    RankResult out{best_len, CombinatorialRep{*best_nu, star_factorize(*best_sigma)},
                   "pgl-scan"};
    if (out.witness.swaps.size() != out.rank ||
        eval_combinatorial(field, out.witness) != f)
        throw verify_error("rank witness does not re-evaluate to its input");
    return out;
}

RankOracle::RankOracle(const Field& field) : q_(field.q()) {
    if (q_ > 9) throw guard_error("rank oracle limited to q <= 9");
    invstar_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x)
        invstar_[x] = static_cast<std::uint8_t>(field.inv0(x));
    for (Elem a = 1; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) {
            std::vector<std::uint8_t> theta(q_);
            for (std::uint32_t x = 0; x < q_; ++x)
                theta[x] = static_cast<std::uint8_t>(field.add(field.mul(a, x), b));
            affine_.push_back(std::move(theta));
        }
    for (const auto& theta : affine_) {
        std::uint64_t key = pack_key(theta);
        if (level_.emplace(key, 0).second) frontier_.push_back(key);
    }
}

void RankOracle::grow() {
    std::vector<std::uint64_t> next;
    std::vector<std::uint8_t> g(q_), mid(q_), succ(q_);
    for (std::uint64_t key : frontier_) {
        for (std::uint32_t i = 0; i < q_; ++i)
            g[i] = static_cast<std::uint8_t>((key >> (4 * i)) & 0xF);
        for (std::uint32_t i = 0; i < q_; ++i) mid[i] = invstar_[g[i]];
        for (const auto& theta : affine_) {
            for (std::uint32_t i = 0; i < q_; ++i) succ[i] = theta[mid[i]];
            std::uint64_t succ_key = pack_key(succ);
            if (level_.emplace(succ_key, depth_ + 1).second) next.push_back(succ_key);
        }
    }
    ++depth_;
    frontier_ = std::move(next);
    if (frontier_.empty()) exhausted_ = true;
}

std::uint32_t RankOracle::rank(const Permutation& f, std::uint32_t max_depth) {
    if (f.points() != q_ + 1)
        throw std::invalid_argument("permutation size does not match field");
    if (!f.fixes_infinity())
        throw std::invalid_argument("permutation must fix infinity");
    std::vector<std::uint8_t> table(q_);
    for (std::uint32_t i = 0; i < q_; ++i)
        table[i] = static_cast<std::uint8_t>(f.image(i));
    std::uint64_t key = pack_key(table);
    for (;;) {
        if (auto it = level_.find(key); it != level_.end()) return it->second;
        if (exhausted_)
            throw verify_error("oracle search exhausted the group without a match");
        if (depth_ >= max_depth)
            throw guard_error("oracle depth guard " + std::to_string(max_depth) +
                              " exhausted");
        grow();
    }
}

std::uint32_t carlitz_rank_oracle(const Field& field, const Permutation& f,
                                  std::uint32_t max_depth) {
    RankOracle oracle(field);
    return oracle.rank(f, max_depth);
}

std::uint32_t carlitz_rank_oracle(const Field& field, const Permutation& f) {
    return carlitz_rank_oracle(field, f, field.q() + 2);
}

CrankBound crank_bound(const Field& field, const Mobius& mu, const Permutation& sigma) {
    if (sigma.points() != field.q() + 1)
        throw std::invalid_argument("permutation size does not match field");
    Point w = sigma.apply(Point::infinity());
    if (!mu.eval(field, w).is_infinity())
        throw std::invalid_argument("composite must fix infinity");
    CrankBound out;
    out.stats = star_stats(sigma);
    out.exact = field.q() >= out.stats.star_length + out.stats.moved_points + 2;
    return out;
}

AlgebraicRep carlitz_decompose(const Field& field, const Permutation& f) {
    require_fixes_infinity(field, f);
    std::vector<Elem> word = star_factorize(f);
    AlgebraicRep rep = to_algebraic(field, CombinatorialRep{Mobius::identity(field), word});
    if (!rep.mu.is_polynomial())
        throw verify_error("decomposition produced a non-polynomial outer map");
    if (eval_algebraic(field, rep) != f)
        throw verify_error("decomposition does not re-evaluate to its input");
    return rep;
}

namespace {

AlgebraicRep two_cycle_chain(const Field& field, Elem a, const std::vector<Elem>& word,
                             const Mobius& expected_mu,
                             const std::vector<Elem>& expected_shifts) {
    if (a == 0) throw std::invalid_argument("the 2-cycle (0 a) needs a != 0");
    if (!field.has(a)) throw std::invalid_argument("element index out of range");
    AlgebraicRep rep = to_algebraic(field, CombinatorialRep{Mobius::identity(field), word});
    if (rep.mu != expected_mu || rep.shifts != expected_shifts)
        throw verify_error("chain deviates from its closed form");
    if (eval_algebraic(field, rep) != swap_points(field.q(), 0, a))
        throw verify_error("chain does not evaluate to the 2-cycle (0 a)");
    return rep;
}

} // namespace

AlgebraicRep carlitz_identity(const Field& field, Elem a) {
    if (a == 0 || !field.has(a))
        throw std::invalid_argument("the 2-cycle (0 a) needs a nonzero field element");
    Elem neg_a_sq = field.neg(field.mul(a, a));
    // (-a^2 x) o invstar o (x-a) o invstar o (x+1/a) o invstar o (x-a)
    return two_cycle_chain(field, a, {a, 0, a}, Mobius::linear(field, neg_a_sq, 0),
                           {a, field.neg(field.inv(a)), a});
}

AlgebraicRep zieve_identity(const Field& field, Elem a) {
    if (a == 0 || !field.has(a))
        throw std::invalid_argument("the 2-cycle (0 a) needs a nonzero field element");
    Elem neg_a_sq = field.neg(field.mul(a, a));
    // (-a^2 x + a) o invstar o (x+a) o invstar o (x-1/a) o invstar o x
    return two_cycle_chain(field, a, {0, a, 0}, Mobius::linear(field, neg_a_sq, a),
                           {0, field.inv(a), field.neg(a)});
}

std::map<std::uint32_t, std::uint64_t> rank_distribution_exhaustive(const Field& field) {
    const std::uint32_t q = field.q();
    if (q > 6) throw guard_error("exhaustive rank distribution limited to q <= 6");
    std::map<std::uint32_t, std::uint64_t> hist;
    std::vector<std::uint32_t> t(q);
    for (std::uint32_t i = 0; i < q; ++i) t[i] = i;
    do {
        std::vector<std::uint32_t> full = t;
        full.push_back(q);
        ++hist[carlitz_rank(field, Permutation(std::move(full))).rank];
    } while (std::next_permutation(t.begin(), t.end()));
    return hist;
}

std::map<std::uint32_t, std::uint64_t> rank_distribution_sampled(const Field& field,
                                                                 std::uint64_t count,
                                                                 std::uint64_t seed) {
    const std::uint32_t q = field.q();
    if (q > 16) throw guard_error("sampled rank distribution limited to q <= 16");
    std::map<std::uint32_t, std::uint64_t> hist;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        Permutation f = detail::random_permutation_fixing_inf(rng, q);
        ++hist[carlitz_rank(field, f).rank];
    }
    return hist;
}

} // namespace projperm
