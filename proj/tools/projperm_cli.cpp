// Command-line front end: conversion between chain representations, rank
// computation, decomposition, enumeration, the classical two-cycle chains,
// rank distributions, and the self-check suites.
//
// Exit codes: 0 success, 2 parse/validation error, 3 desk-scale guard,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "projperm/carlitz.hpp"
#include "projperm/errors.hpp"
#include "projperm/gf.hpp"
#include "projperm/perm.hpp"
#include "projperm/projline.hpp"
#include "projperm/reps.hpp"
#include "projperm/verify.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace projperm;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerify = 4;

struct Options {
    std::string field_text;
    std::string perm_text;
    std::string rep_text;
    std::string direction;
    std::string suite = "all";
    std::uint32_t k = 0;
    std::uint32_t a = 0;
    std::uint64_t sample = 0;
    std::uint64_t seed = 12345;
    bool oracle = false;
    bool witness = false;
    bool json = false;
};

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

Elem parse_element(const Field& field, std::uint32_t a) {
    if (!field.has(a)) throw parse_error("element index out of range: " + std::to_string(a));
    return a;
}

int cmd_convert(const Options& o) {
    Field field = Field::from_text(o.field_text);
    std::string out_text;
    bool verified = false;
    std::string in_text;
    if (o.direction == "a2c") {
        AlgebraicRep in = algebraic_from_text(field, o.rep_text);
        in_text = algebraic_text(in);
        CombinatorialRep out = to_combinatorial(field, in);
        verified = eval_combinatorial(field, out) == eval_algebraic(field, in);
        out_text = combinatorial_text(out);
    } else {
        CombinatorialRep in = combinatorial_from_text(field, o.rep_text);
        in_text = combinatorial_text(in);
        AlgebraicRep out = to_algebraic(field, in);
        verified = eval_algebraic(field, out) == eval_combinatorial(field, in);
        out_text = algebraic_text(out);
    }
    if (!verified)
        throw verify_error("converted representation does not evaluate to its input");
    if (o.json) {
        emit({{"field", field.text()},
              {"direction", o.direction},
              {"input", in_text},
              {"output", out_text},
              {"verified", true}});
    } else {
        std::cout << out_text << "\n" << "verified: true\n";
    }
    return kExitOk;
}

int cmd_rank(const Options& o) {
    Field field = Field::from_text(o.field_text);
    Permutation p = permutation_from_text(field, o.perm_text);
    RankResult r = carlitz_rank(field, p);
    ordered_json record = {{"field", field.text()},
                           {"perm", cycle_text(p)},
                           {"rank", r.rank},
                           {"method", r.method}};
    std::uint32_t oracle_rank = 0;
    if (o.oracle) {
        oracle_rank = carlitz_rank_oracle(field, p);
        if (oracle_rank != r.rank)
            throw verify_error("independent search found rank " +
                               std::to_string(oracle_rank) + ", scan found " +
                               std::to_string(r.rank));
        record["oracle_rank"] = oracle_rank;
        record["agreement"] = true;
    }
    std::string witness_text, witness_alg_text;
    if (o.witness) {
        witness_text = combinatorial_text(r.witness);
        witness_alg_text = algebraic_text(to_algebraic(field, r.witness));
        record["witness"] = witness_text;
        record["witness_algebraic"] = witness_alg_text;
    }
    if (o.json) {
        emit(record);
    } else {
        std::cout << "rank: " << r.rank << "\n" << "method: " << r.method << "\n";
        if (o.oracle)
            std::cout << "oracle_rank: " << oracle_rank << "\n" << "agreement: true\n";
        if (o.witness)
            std::cout << "witness: " << witness_text << "\n"
                      << "witness_algebraic: " << witness_alg_text << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const Options& o) {
    Field field = Field::from_text(o.field_text);
    Permutation p = permutation_from_text(field, o.perm_text);
    AlgebraicRep rep = carlitz_decompose(field, p);
    bool verified = eval_algebraic(field, rep) == p;
    if (!verified) throw verify_error("decomposition does not evaluate to its input");
    if (o.json) {
        emit({{"field", field.text()},
              {"perm", cycle_text(p)},
              {"k", rep.shifts.size()},
              {"rep", algebraic_text(rep)},
              {"verified", true}});
    } else {
        std::cout << "k: " << rep.shifts.size() << "\n"
                  << algebraic_text(rep) << "\n"
                  << "verified: true\n";
    }
    return kExitOk;
}

int cmd_enumerate(const Options& o) {
    Field field = Field::from_text(o.field_text);
    Permutation p = permutation_from_text(field, o.perm_text);
    auto algebraic = enumerate_algebraic(field, p, o.k);
    auto combinatorial = enumerate_combinatorial(field, p, o.k);
    bool ok = algebraic.size() == combinatorial.size();
    for (const auto& r : algebraic) {
        CombinatorialRep conv = to_combinatorial(field, r);
        if (std::find(combinatorial.begin(), combinatorial.end(), conv) ==
                combinatorial.end() ||
            to_algebraic(field, conv) != r)
            ok = false;
    }
    for (const auto& r : combinatorial) {
        AlgebraicRep conv = to_algebraic(field, r);
        if (std::find(algebraic.begin(), algebraic.end(), conv) == algebraic.end() ||
            to_combinatorial(field, conv) != r)
            ok = false;
    }
    if (!ok) throw verify_error("the two representation families do not match up");
    if (o.json) {
        emit({{"field", field.text()},
              {"perm", cycle_text(p)},
              {"k", o.k},
              {"count_algebraic", algebraic.size()},
              {"count_combinatorial", combinatorial.size()},
              {"bijection", "ok"}});
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& r : algebraic)
            pairs.emplace_back(algebraic_text(r),
                               combinatorial_text(to_combinatorial(field, r)));
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [alg, comb] : pairs)
            emit({{"algebraic", alg}, {"combinatorial", comb}});
    } else {
        std::cout << "count_algebraic: " << algebraic.size() << "\n"
                  << "count_combinatorial: " << combinatorial.size() << "\n"
                  << "bijection: ok\n";
    }
    return kExitOk;
}

int cmd_identities(const Options& o) {
    Field field = Field::from_text(o.field_text);
    Elem a = parse_element(field, o.a);
    AlgebraicRep first = carlitz_identity(field, a);
    AlgebraicRep second = zieve_identity(field, a);
    Permutation target = swap_points(field.q(), 0, a);
    bool verified = eval_algebraic(field, first) == target &&
                    eval_algebraic(field, second) == target;
    if (!verified) throw verify_error("identity chain does not evaluate to (0 a)");
    if (o.json) {
        emit({{"field", field.text()},
              {"name", "carlitz"},
              {"rep", algebraic_text(first)},
              {"target", cycle_text(target)},
              {"verified", true}});
        emit({{"field", field.text()},
              {"name", "zieve"},
              {"rep", algebraic_text(second)},
              {"target", cycle_text(target)},
              {"verified", true}});
    } else {
        std::cout << "carlitz: " << algebraic_text(first) << "\n"
                  << "zieve: " << algebraic_text(second) << "\n"
                  << "target: " << cycle_text(target) << "\n"
                  << "verified: true\n";
    }
    return kExitOk;
}

int cmd_dist(const Options& o, bool sampled) {
    Field field = Field::from_text(o.field_text);
    std::map<std::uint32_t, std::uint64_t> hist;
    if (sampled)
        hist = rank_distribution_sampled(field, o.sample, o.seed);
    else
        hist = rank_distribution_exhaustive(field);
    std::uint64_t total = 0;
    for (const auto& [rank, count] : hist) total += count;
    if (o.json) {
        ordered_json summary = {{"field", field.text()},
                                {"mode", sampled ? "sample" : "exhaustive"},
                                {"total", total}};
        if (sampled) summary["seed"] = o.seed;
        emit(summary);
        for (const auto& [rank, count] : hist)
            emit({{"rank", rank}, {"count", count}});
    } else {
        std::cout << "mode: " << (sampled ? "sample" : "exhaustive") << "\n"
                  << "total: " << total << "\n";
        for (const auto& [rank, count] : hist)
            std::cout << "rank " << rank << ": " << count << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    if (!o.field_text.empty()) Field::from_text(o.field_text);
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    std::uint64_t failed_suites = 0;
    for (const auto& name : names) {
        SuiteResult r = run_suite(name);
        if (!r.passed) ++failed_suites;
        if (o.json) {
            emit({{"suite", r.name},
                  {"passed", r.passed},
                  {"checks", r.checks},
                  {"failed", r.failed},
                  {"failures", r.failures}});
        } else if (r.passed) {
            std::cout << "suite " << r.name << ": pass (" << r.checks << " checks)\n";
        } else {
            std::cout << "suite " << r.name << ": FAIL (" << r.failed << " of "
                      << r.checks << " checks)\n";
            for (const auto& msg : r.failures) std::cout << "  - " << msg << "\n";
        }
    }
    return failed_suites == 0 ? kExitOk : kExitVerify;
}

int run(int argc, char** argv) {
    CLI::App app{"Permutations of the projective line over GF(q): chain "
                 "representations, Carlitz rank, and self-checks"};
    app.require_subcommand(1);
    Options o;

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", o.field_text,
                        "field, e.g. q=7 or q=3^2;mod=1,0,1")
            ->required();
    };
    auto add_perm = [&](CLI::App* cmd) {
        cmd->add_option("--perm", o.perm_text,
                        "permutation in cycle or perm: notation")
            ->required();
    };
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "machine-readable output, one record per line");
    };

    CLI::App* convert = app.add_subcommand(
        "convert", "Rewrite a chain representation in the other form");
    add_field(convert);
    convert->add_option("--rep", o.rep_text, "representation text")->required();
    convert->add_option("--dir", o.direction, "conversion direction")
        ->required()
        ->check(CLI::IsMember({"a2c", "c2a"}));
    add_json(convert);

    CLI::App* rank = app.add_subcommand("rank", "Carlitz rank of a permutation");
    add_field(rank);
    add_perm(rank);
    rank->add_flag("--oracle", o.oracle, "cross-check with the independent search");
    rank->add_flag("--witness", o.witness, "print a minimal representation");
    add_json(rank);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Chain of x^{q-2} and degree-one polynomials inducing a permutation");
    add_field(decompose);
    add_perm(decompose);
    add_json(decompose);

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Count and match the length-k representation families");
    add_field(enumerate);
    add_perm(enumerate);
    enumerate->add_option("--k", o.k, "chain length")->required();
    add_json(enumerate);

    CLI::App* identities = app.add_subcommand(
        "identities", "The two classical chains for the transposition (0 a)");
    add_field(identities);
    identities->add_option("--a", o.a, "nonzero field element index")->required();
    add_json(identities);

    CLI::App* dist = app.add_subcommand("dist", "Histogram of Carlitz ranks");
    add_field(dist);
    CLI::Option* sample_opt =
        dist->add_option("--sample", o.sample, "sample count (default: exhaustive)");
    dist->add_option("--seed", o.seed, "sampling seed")->needs(sample_opt);
    add_json(dist);

    CLI::App* verify = app.add_subcommand("verify", "Run the self-check suites");
    verify->add_option("--field", o.field_text,
                       "accepted for symmetry; suites pick their own fields");
    verify->add_option("--suite", o.suite, "suite name, or 'all'");
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    if (convert->parsed()) return cmd_convert(o);
    if (rank->parsed()) return cmd_rank(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (identities->parsed()) return cmd_identities(o);
    if (dist->parsed()) return cmd_dist(o, dist->count("--sample") > 0);
    return cmd_verify(o);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const projperm::guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const projperm::verify_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const projperm::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
