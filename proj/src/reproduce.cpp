#include "c4book/reproduce.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "c4book/bounds.hpp"
#include "c4book/constructions.hpp"
#include "c4book/graph.hpp"
#include "c4book/projective.hpp"
#include "c4book/random_deletion.hpp"
#include "c4book/reference.hpp"
#include "c4book/search.hpp"
#include "c4book/structure.hpp"
#include "c4book/witness.hpp"

namespace c4book {

namespace {

using Clock = std::chrono::steady_clock;

struct Row {
    CriterionResult r;
    Clock::time_point start = Clock::now();
    bool failed = false;

    explicit Row(int index, std::string name) {
        r.index = index;
        r.name = std::move(name);
    }

    void fail(const std::string& why) {
        if (!failed) r.detail = why;
        failed = true;
    }

    CriterionResult done(const std::string& ok_detail) {
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        r.pass = !failed;
        if (r.pass) r.detail = ok_detail;
        return r;
    }
};

std::vector<int> admissible_t_even(int q) {
    std::vector<int> ts;
    for (int t = 0; t <= q - 1; ++t)
        if (t != 1) ts.push_back(t);
    return ts;
}

std::vector<int> admissible_t_odd(int q) {
    std::vector<int> ts;
    int lo, skip;
    if (q % 4 == 3) {
        lo = (q + 1) / 2;
        skip = (q + 3) / 2;
    } else {
        lo = (q - 1) / 2;
        skip = (q + 1) / 2;
    }
    for (int t = lo; t <= q - 1; ++t)
        if (t != skip) ts.push_back(t);
    return ts;
}

// Shared by the even- and odd-family rows: certificate plus matching upper
// bound pin down r(C4,B_n) exactly.
void check_construction(Row& row, const ConstructionResult& c, int min_degree_req) {
    std::ostringstream tag;
    tag << c.family << "_" << c.q << "^" << c.t;
    auto bad = [&](const std::string& what) { row.fail(tag.str() + ": " + what); };

    if (c.order != c.q * c.q + c.t - 1) bad("wrong order " + std::to_string(c.order));
    WitnessReport rep = verify_witness(c.graph, c.target_book);
    if (!rep.valid) bad("certificate invalid: " + rep.detail);
    if (rep.min_degree < min_degree_req)
        bad("min degree " + std::to_string(rep.min_degree) + " < " + std::to_string(min_degree_req));
    auto upper = theorem2_upper(c.target_book);
    if (!upper || *upper != c.certified_lower) {
        std::ostringstream os;
        os << "upper bound mismatch for n=" << c.target_book << ": expected "
           << c.certified_lower << ", got " << (upper ? std::to_string(*upper) : "none");
        bad(os.str());
    }
}

CriterionResult criterion1() {
    Row row(1, "polarity graphs ER_q: order, degrees, absolute set, diameter, C4-free");
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        PolarityGraph er = build_er_graph(q);
        auto bad = [&](const std::string& what) {
            row.fail("q=" + std::to_string(q) + ": " + what);
        };
        const Graph& g = er.graph;
        if (g.order() != q * q + q + 1) bad("order " + std::to_string(g.order()));
        std::vector<int> low;
        for (int v = 0; v < g.order(); ++v) {
            int d = g.degree(v);
            if (d != q && d != q + 1) bad("vertex degree " + std::to_string(d));
            if (d == q) low.push_back(v);
        }
        if (static_cast<int>(low.size()) != q + 1)
            bad(std::to_string(low.size()) + " degree-q vertices");
        for (std::size_t a = 0; a < low.size(); ++a)
            for (std::size_t b = a + 1; b < low.size(); ++b)
                if (g.adjacent(low[a], low[b])) bad("degree-q set not independent");
        if (low != er.absolute) bad("degree-q set differs from the self-orthogonal points");
        auto diam = diameter(g);
        if (!diam || *diam != 2)
            bad("diameter " + (diam ? std::to_string(*diam) : std::string("inf")));
        if (contains_c4(g)) bad("contains a C4");
    }
    return row.done("7 prime powers checked");
}

CriterionResult criterion2() {
    Row row(2, "even-q family H_q^t certifies r(C4,B_n) = q^2+t for q in {4,8,16}");
    int cases = 0;
    for (int q : {4, 8, 16}) {
        PolarityGraph er = build_er_graph(q);
        for (int t : admissible_t_even(q)) {
            check_construction(row, build_H(er, t), q);
            ++cases;
        }
    }
    // Spot values for q=4 against the small-case table.
    struct { int t, n, value; } pinned[] = {{0, 7, 16}, {2, 9, 18}, {3, 10, 19}};
    for (auto pc : pinned) {
        ConstructionResult c = build_H(4, pc.t);
        if (c.target_book != pc.n || c.certified_lower != pc.value) {
            std::ostringstream os;
            os << "H_4^" << pc.t << " certifies r(C4,B" << c.target_book << ") = "
               << c.certified_lower << ", table says r(C4,B" << pc.n << ") = " << pc.value;
            row.fail(os.str());
        }
    }
    return row.done(std::to_string(cases) + " (q,t) cases certified");
}

CriterionResult criterion3() {
    Row row(3, "odd-q family G_q^t certifies r(C4,B_n) = q^2+t for q in {5,7,9,13}");
    int cases = 0;
    for (int q : {5, 7, 9, 13}) {
        PolarityGraph er = build_er_graph(q);
        for (int t : admissible_t_odd(q)) {
            check_construction(row, build_G(er, t), q);
            ++cases;
        }
    }
    struct { int t, n, value; } pinned[] = {{2, 16, 27}, {4, 18, 29}};
    for (auto pc : pinned) {
        ConstructionResult c = build_G(5, pc.t);
        if (c.order != pc.value - 1 || c.target_book != pc.n || c.certified_lower != pc.value) {
            std::ostringstream os;
            os << "G_5^" << pc.t << " gives order " << c.order << " for n=" << c.target_book
               << ", expected witness order " << pc.value - 1 << " for n=" << pc.n;
            row.fail(os.str());
        }
    }
    return row.done(std::to_string(cases) + " (q,t) cases certified");
}

CriterionResult criterion4() {
    Row row(4, "t = q-1 specialization: r(C4,B_{q^2-q-2}) = q^2+q-1 for q in {4,5,7,8}");
    for (int q : {4, 5, 7, 8}) {
        ConstructionResult c = build_corollary5_witness(q);
        auto bad = [&](const std::string& what) {
            row.fail("q=" + std::to_string(q) + ": " + what);
        };
        int n = q * q - q - 2;
        if (c.order != q * q + q - 2) bad("order " + std::to_string(c.order));
        if (c.target_book != n) bad("book level " + std::to_string(c.target_book));
        WitnessReport rep = verify_witness(c.graph, n);
        if (!rep.valid) bad("certificate invalid: " + rep.detail);
        auto upper = theorem2_upper(n);
        if (!upper || *upper != q * q + q - 1)
            bad("upper bound for n=" + std::to_string(n) + " is " +
                (upper ? std::to_string(*upper) : "none"));
    }
    return row.done("4 values pinned exactly");
}

CriterionResult criterion5() {
    Row row(5, "structure audit: ER_q frame claims; degree-sum facts and the "
               "matching claim on every small C4-free graph");
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        AuditReport rep = audit_er_structure(q);
        if (!rep.all_pass()) {
            for (const auto& c : rep.checks)
                if (!c.pass) {
                    row.fail("q=" + std::to_string(q) + " " + c.name + ": " + c.evidence);
                    break;
                }
        }
    }
    // Facts 1-2 and the six-part claim on the full isomorph-free catalogue
    // through 9 vertices.
    long long graphs = 0;
    for (int N = 1; N <= 9 && !row.failed; ++N) {
        enumerate_c4free(N, {}, [&](const Graph& g) {
            ++graphs;
            for (int v = 0; v < g.order(); ++v) {
                if (g.degree(v) == 0) continue;
                PartitionDecomposition d = decompose(g, v);
                if (!check_fact1(g, d))
                    row.fail("fact 1 fails, graph " + encode_graph6(g) + " v=" + std::to_string(v));
                for (int i = 0; i < d.m; ++i)
                    if (!check_fact2(g, d, i))
                        row.fail("fact 2 fails, graph " + encode_graph6(g) + " v=" +
                                 std::to_string(v) + " i=" + std::to_string(i));
            }
            AuditReport cl = check_claim4(g);
            if (!cl.all_pass()) {
                for (const auto& c : cl.checks)
                    if (!c.pass) {
                        row.fail("graph " + encode_graph6(g) + " " + c.name + ": " + c.evidence);
                        break;
                    }
            }
            return !row.failed;
        });
    }
    // Same facts on polarity-graph decompositions.
    for (int q : {3, 4, 5, 7}) {
        if (row.failed) break;
        PolarityGraph er = build_er_graph(q);
        for (int v = 0; v < er.graph.order(); ++v) {
            PartitionDecomposition d = decompose(er.graph, v);
            if (!check_fact1(er.graph, d))
                row.fail("fact 1 fails on ER_" + std::to_string(q) + " v=" + std::to_string(v));
            for (int i = 0; i < d.m; ++i)
                if (!check_fact2(er.graph, d, i))
                    row.fail("fact 2 fails on ER_" + std::to_string(q) + " v=" +
                             std::to_string(v) + " i=" + std::to_string(i));
        }
        if (q <= 5) {
            AuditReport cl = check_claim4(er.graph);
            if (!cl.all_pass()) row.fail("matching claim fails on ER_" + std::to_string(q));
        }
    }
    return row.done("audits clean over " + std::to_string(graphs) + " catalogue graphs");
}

CriterionResult criterion6() {
    Row row(6, "exhaustive confirmation of r(C4,B1) = 7 and r(C4,B2) = 7");
    for (int n : {1, 2}) {
        SearchOutcome out = verify_exact(n, 7, 280);
        if (!out.conclusive)
            row.fail("n=" + std::to_string(n) + ": " + out.note);
    }
    return row.done("witness and impossibility proven for both rows");
}

CriterionResult criterion6_stretch(double budget) {
    Row row(6, "exhaustive confirmation of r(C4,B3) = 9 (opt-in)");
    SearchOutcome out = verify_exact(3, 9, budget);
    if (!out.conclusive) {
        row.r.inconclusive =
            out.note.rfind("inconclusive", 0) == 0;  // budget ran out, not a refutation
        row.fail(out.note);
    }
    CriterionResult r = row.done("witness and impossibility proven, " +
                                 std::to_string(out.graphs_examined) + " graphs examined");
    return r;
}

CriterionResult criterion7() {
    Row row(7, "bounds consistency: small-case table, FRS value, quadratic-family improvement");
    static const long long table[15] = {0, 7, 7, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 22, 24};
    for (long long n = 1; n <= 14; ++n) {
        BoundsRecord b = best_known(n);
        if (b.lower > table[n] || table[n] > b.upper) {
            std::ostringstream os;
            os << "n=" << n << ": table value " << table[n] << " outside [" << b.lower << ","
               << b.upper << "]";
            row.fail(os.str());
        }
    }
    if (frs_upper(13) != 24) row.fail("frs_upper(13) = " + std::to_string(frs_upper(13)));
    // At every boundary case n = (m-1)^2 + t - 2 with m >= 4, 3 <= t <= m-1,
    // the quadratic bound m^2+t beats g(g(n)) by at least one.
    for (long long m = 4; m <= 40; ++m)
        for (long long t = 3; t <= m - 1; ++t) {
            long long n = (m - 1) * (m - 1) + t - 2;
            auto u = theorem2_upper(n);
            if (!u || *u > frs_upper(n) - 1) {
                std::ostringstream os;
                os << "no improvement at n=" << n << " (m=" << m << ", t=" << t
                   << "): quadratic " << (u ? std::to_string(*u) : "none") << " vs "
                   << frs_upper(n);
                row.fail(os.str());
            }
        }
    return row.done("table rows 1..14 and improvement grid verified");
}

CriterionResult criterion8() {
    Row row(8, "randomized deletion at n=10000: r(C4,B10000) > 10064");
    TrialParams tp = trial_params(10000);
    if (tp.m != 32 || tp.p != 101 || tp.N != 10303 || tp.d != 239) {
        row.fail("parameters " + tp.to_text() + ", expected m=32 p=101 N=10303 deletions=239");
        return row.done("");
    }
    DeletionTrialRunner runner(10000);
    auto hit = runner.retry_until_witness(1, 5, true);
    if (!hit) {
        row.fail("no certified trial within 5 seeds");
    } else {
        // Decode the exported certificate and verify it once more from the
        // serialized form alone.
        Graph g = decode_graph6(hit->witness_g6);
        WitnessReport rep = verify_witness(g, 10000);
        if (!rep.valid || rep.order != 10064)
            row.fail("re-verification of the exported certificate failed: " + rep.detail);
    }
    int failures = 0;
    for (std::uint64_t seed = 1000; seed < 1100; ++seed)
        if (!runner.run_trial(seed, false).success()) ++failures;
    if (failures >= 5) row.fail(std::to_string(failures) + "% of 100 seeded trials failed");
    return row.done("certificate verified; " + std::to_string(failures) + "/100 trial failures");
}

CriterionResult criterion9() {
    Row row(9, "oracle equivalences: C4 scan, book scan, graph6 round-trip");
    auto check = [&](const Graph& g) {
        if (row.failed) return;
        if (contains_c4(g) != reference::contains_c4_naive(g))
            row.fail("C4 scans disagree on " + encode_graph6(g));
        if (max_book_in_complement(g) != reference::book_max_naive(g))
            row.fail("book scans disagree on " + encode_graph6(g));
        std::string g6 = encode_graph6(g);
        if (g6 != reference::graph6_encode_reference(g))
            row.fail("encoders disagree on order " + std::to_string(g.order()));
        if (!(decode_graph6(g6) == g)) row.fail("round-trip failed on " + g6);
    };
    // Exhaustive over all labeled graphs with at most 5 vertices.
    long long exhaustive = 0;
    for (int n = 1; n <= 5 && !row.failed; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if ((mask >> bit) & 1) g.add_edge(i, j);
            check(g);
            ++exhaustive;
            if (row.failed) break;
        }
    }
    // Random larger instances, seeded; densities spread from near-empty to
    // near-complete.
    std::mt19937_64 rng(20240811);
    long long random_count = 100000;
    for (long long i = 0; i < random_count && !row.failed; ++i) {
        int n = 6 + static_cast<int>(rng() % 7);  // 6..12
        std::uint64_t density = rng() % 100;
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 100 < density) g.add_edge(a, b);
        check(g);
    }
    std::ostringstream ok;
    ok << exhaustive << " exhaustive + " << random_count << " random instances, no discrepancies";
    return row.done(ok.str());
}

}  // namespace

std::string CriterionResult::to_line() const {
    std::ostringstream os;
    os << "[" << (skipped ? "SKIP" : inconclusive ? "INCONCLUSIVE" : pass ? "PASS" : "FAIL")
       << "] criterion " << index << ": " << name;
    if (!detail.empty()) os << " | " << detail;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " (" << seconds << "s)";
    return os.str();
}

std::vector<CriterionResult> run_acceptance(const ReproduceOptions& opt) {
    std::vector<CriterionResult> rows;
    rows.push_back(criterion1());
    rows.push_back(criterion2());
    rows.push_back(criterion3());
    rows.push_back(criterion4());
    rows.push_back(criterion5());
    rows.push_back(criterion6());
    if (opt.include_search_n3) rows.push_back(criterion6_stretch(opt.n3_budget_seconds));
    rows.push_back(criterion7());
    if (opt.quick) {
        CriterionResult skip;
        skip.index = 8;
        skip.name = "randomized deletion at n=10000";
        skip.skipped = true;
        skip.detail = "skipped in quick mode";
        rows.push_back(skip);
    } else {
        rows.push_back(criterion8());
    }
    rows.push_back(criterion9());
    return rows;
}

bool acceptance_ok(const std::vector<CriterionResult>& rows) {
    for (const auto& r : rows) {
        if (r.skipped) continue;
        if (r.pass) continue;
        if (r.inconclusive) continue;  // only ever set on the opt-in search row
        return false;
    }
    return true;
}

}  // namespace c4book
