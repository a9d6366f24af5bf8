// Command-line front end. Exit codes: 0 success / claim confirmed,
// 1 verification failure or refutation, 2 usage error, 3 inconclusive
// (budget exhausted).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "c4book/bounds.hpp"
#include "c4book/constructions.hpp"
#include "c4book/graph.hpp"
#include "c4book/random_deletion.hpp"
#include "c4book/reproduce.hpp"
#include "c4book/search.hpp"
#include "c4book/structure.hpp"
#include "c4book/witness.hpp"

namespace {

using nlohmann::json;

int run_construct(const std::string& family, int q, int t, const std::string& out_path,
                  const std::string& manifest_path, bool json_out) {
    c4book::ConstructionResult c;
    try {
        if (family == "H") {
            c = c4book::build_H(q, t);
        } else if (family == "G") {
            c = c4book::build_G(q, t);
        } else if (family == "C5") {
            c = c4book::build_corollary5_witness(q);
        } else {
            std::cerr << "unknown family '" << family << "' (use H, G, or C5)\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter out of range: " << e.what() << "\n";
        return 2;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    out << c4book::encode_graph6(c.graph) << "\n";
    if (!manifest_path.empty()) {
        std::ofstream mf(manifest_path);
        if (!mf) {
            std::cerr << "cannot open " << manifest_path << "\n";
            return 2;
        }
        mf << c4book::manifest(c);
    }
    if (json_out) {
        json j{{"family", std::string(1, c.family)}, {"q", c.q},
               {"t", c.t},                           {"order", c.order},
               {"book", c.target_book},              {"certified_lower", c.certified_lower},
               {"out", out_path}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "wrote " << out_path << ": order " << c.order << ", certifies r(C4,B"
                  << c.target_book << ") >= " << c.certified_lower << "\n";
    }
    return 0;
}

c4book::Graph read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file " + path);
    return c4book::decode_graph6(line);
}

int run_verify(const std::string& in_path, int book, int gq, bool json_out) {
    c4book::Graph g = read_graph6_file(in_path);
    if (gq > 0) {
        auto m = c4book::check_gq_membership(g, gq);
        const char* verdict = m == c4book::GqMembership::member        ? "member"
                              : m == c4book::GqMembership::wrong_order ? "wrong-order"
                                                                       : "not-member";
        if (json_out)
            std::cout << json{{"q", gq}, {"membership", verdict}}.dump() << "\n";
        else
            std::cout << "G(" << gq << ") membership: " << verdict << "\n";
        return m == c4book::GqMembership::member ? 0 : 1;
    }
    c4book::WitnessReport rep = c4book::verify_witness(g, book);
    if (json_out) {
        json j{{"order", rep.order},
               {"c4_free", rep.c4_free},
               {"min_degree", rep.min_degree},
               {"book", book},
               {"valid", rep.valid},
               {"detail", rep.detail}};
        if (rep.book_max) j["book_max"] = *rep.book_max;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rep.to_text();
    }
    return rep.valid ? 0 : 1;
}

int run_audit(int q, bool json_out) {
    c4book::AuditReport rep = c4book::audit_er_structure(q);
    if (json_out) {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}});
        std::cout << json{{"q", q}, {"all_pass", rep.all_pass()}, {"checks", checks}}.dump()
                  << "\n";
    } else {
        std::cout << rep.to_text();
    }
    return rep.all_pass() ? 0 : 1;
}

int run_bounds(long long n, bool json_out) {
    c4book::BoundsRecord b = c4book::best_known(n);
    if (json_out) {
        json j{{"n", b.n},
               {"lower", b.lower},
               {"upper", b.upper},
               {"lower_provenance", b.lower_provenance},
               {"upper_provenance", b.upper_provenance}};
        if (b.exact) {
            j["exact"] = *b.exact;
            j["exact_provenance"] = b.exact_provenance;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << b.to_text();
    }
    return 0;
}

int run_search(int n, int R, double budget, const std::string& witness_out, bool json_out) {
    c4book::SearchOutcome out = c4book::verify_exact(n, R, budget);
    if (out.witness_g6 && !witness_out.empty()) {
        std::ofstream f(witness_out);
        if (!f) {
            std::cerr << "cannot open " << witness_out << "\n";
            return 2;
        }
        f << *out.witness_g6 << "\n";
    }
    if (json_out) {
        json j{{"n", out.n},
               {"R", out.R},
               {"conclusive", out.conclusive},
               {"impossibility", out.impossibility},
               {"graphs_examined", out.graphs_examined},
               {"note", out.note}};
        if (out.witness_g6) j["witness"] = *out.witness_g6;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << out.note << " (examined " << out.graphs_examined << " graphs)\n";
        if (out.witness_g6) std::cout << "witness: " << *out.witness_g6 << "\n";
    }
    if (out.conclusive) return 0;
    return out.note.rfind("inconclusive", 0) == 0 ? 3 : 1;
}

int run_random_lower(long long n, std::uint64_t seed, int trials, bool degree_only,
                     const std::string& witness_out, bool json_out) {
    c4book::DeletionTrialRunner runner(n);
    auto hit = runner.retry_until_witness(seed, trials, !degree_only);
    if (json_out) {
        json j{{"n", n},
               {"m", runner.params().m},
               {"p", runner.params().p},
               {"host_order", runner.params().N},
               {"deletions", runner.params().d},
               {"target_order", runner.params().target_order},
               {"seed0", seed},
               {"trials", trials},
               {"success", static_cast<bool>(hit)}};
        if (hit) j["seed"] = hit->seed;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << runner.params().to_text() << "\n";
        if (hit)
            std::cout << hit->to_text() << "\n";
        else
            std::cout << "no successful trial in " << trials << " attempts from seed " << seed
                      << "\n";
    }
    if (hit && !degree_only && !witness_out.empty()) {
        std::ofstream f(witness_out);
        if (!f) {
            std::cerr << "cannot open " << witness_out << "\n";
            return 2;
        }
        f << hit->witness_g6 << "\n";
    }
    return hit ? 0 : 1;
}

int run_reproduce(const c4book::ReproduceOptions& opt, bool json_out) {
    auto rows = c4book::run_acceptance(opt);
    if (json_out) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"index", r.index},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"skipped", r.skipped},
                           {"inconclusive", r.inconclusive},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : rows) std::cout << r.to_line() << "\n";
    }
    return c4book::acceptance_ok(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"C4-vs-book Ramsey number toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "structured one-record-per-line output");

    auto* construct = app.add_subcommand("construct", "build a witness graph and write graph6");
    std::string family, out_path, manifest_path;
    int cq = 0, ct = 0;
    construct->add_option("--family", family, "H, G, or C5")->required();
    construct->add_option("--q", cq, "prime power")->required();
    construct->add_option("--t", ct, "family parameter (ignored for C5)");
    construct->add_option("--out", out_path, "graph6 output file")->required();
    construct->add_option("--manifest", manifest_path, "optional side-car manifest file");

    auto* verify = app.add_subcommand("verify", "check a graph6 file as a lower-bound witness");
    std::string in_path;
    int book = 0, gq = 0;
    verify->add_option("--in", in_path, "graph6 input file")->required();
    verify->add_option("--book", book, "book size n to certify against");
    verify->add_option("--gq", gq, "instead test membership in G(q) for this q");

    auto* audit = app.add_subcommand("audit", "run the structural audit of ER_q");
    int aq = 0;
    audit->add_option("--q", aq, "prime power, 2..16")->required();

    auto* bounds = app.add_subcommand("bounds", "best known bounds for r(C4,B_n)");
    long long bn = 0;
    bounds->add_option("--n", bn, "book size")->required()->check(CLI::PositiveNumber);

    auto* search = app.add_subcommand("search", "exhaustively verify r(C4,B_n) = R");
    int sn = 0, sR = 0;
    double budget = -1;
    std::string switness;
    search->add_option("--n", sn, "book size")->required();
    search->add_option("--r", sR, "claimed Ramsey number")->required();
    search->add_option("--budget", budget, "time budget in seconds (<0: none)");
    search->add_option("--witness-out", switness, "write the found witness here");

    auto* rnd = app.add_subcommand("random-lower", "randomized-deletion lower bound");
    long long rn = 0;
    std::uint64_t seed = 1;
    int trials = 5;
    bool degree_only = false;
    std::string rwitness;
    rnd->add_option("--n", rn, "book size")->required()->check(CLI::PositiveNumber);
    rnd->add_option("--seed", seed, "first seed to try");
    rnd->add_option("--trials", trials, "max seeds to try");
    rnd->add_flag("--degree-only", degree_only, "skip the full certificate check");
    rnd->add_option("--witness-out", rwitness, "write the certified graph here");

    auto* repro = app.add_subcommand("reproduce", "run the full acceptance suite");
    c4book::ReproduceOptions ropt;
    repro->add_flag("--quick", ropt.quick, "skip randomized trials");
    repro->add_flag("--include-search-n3", ropt.include_search_n3,
                    "add the exhaustive r(C4,B3)=9 row");
    repro->add_option("--n3-budget", ropt.n3_budget_seconds, "budget for the opt-in row, seconds");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return run_construct(family, cq, ct, out_path, manifest_path, json_out);
        if (*verify) return run_verify(in_path, book, gq, json_out);
        if (*audit) return run_audit(aq, json_out);
        if (*bounds) return run_bounds(bn, json_out);
        if (*search) return run_search(sn, sR, budget, switness, json_out);
        if (*rnd) return run_random_lower(rn, seed, trials, degree_only, rwitness, json_out);
        if (*repro) return run_reproduce(ropt, json_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
