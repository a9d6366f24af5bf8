#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "c4book/graph.hpp"
#include "c4book/reference.hpp"
#include "c4book/search.hpp"

using namespace c4book;

namespace {

// Oracle: count C4-free isomorphism classes on n vertices by generating
// every labeled graph and deduplicating under all vertex permutations,
// keying on the lexicographically least upper-triangle bit-string.
long long count_classes_oracle(int n) {
    std::vector<int> perm(n);
    std::set<std::uint64_t> canon;
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row, ++bit)
                if ((mask >> bit) & 1) g.add_edge(row, col);
        if (reference::contains_c4_naive(g)) continue;
        std::uint64_t best = ~0ull;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint64_t key = 0;
            int b = 0;
            for (int col = 1; col < n; ++col)
                for (int row = 0; row < col; ++row, ++b)
                    if (g.adjacent(perm[row], perm[col])) key |= 1ull << b;
            best = std::min(best, key);
        } while (std::next_permutation(perm.begin(), perm.end()));
        canon.insert(best);
    }
    return static_cast<long long>(canon.size());
}

}  // namespace

TEST_CASE("isomorph-free counts match the permutation-dedup oracle") {
    for (int n = 1; n <= 6; ++n) CHECK(count_c4free(n) == count_classes_oracle(n));
}

TEST_CASE("isomorph-free counts, frozen larger values") {
    const long long expect[10] = {0, 1, 2, 4, 8, 18, 44, 117, 351, 1230};
    for (int n = 1; n <= 9; ++n) CHECK(count_c4free(n) == expect[n]);
}

TEST_CASE("every enumerated graph is canonical, C4-free, and distinct") {
    for (int n = 3; n <= 7; ++n) {
        std::set<std::string> seen;
        enumerate_c4free(n, {}, [&](const Graph& g) {
            CHECK(g.order() == n);
            CHECK(!contains_c4(g));
            CHECK(is_canonical(g));
            CHECK(seen.insert(encode_graph6(g)).second);
            return true;
        });
    }
}

TEST_CASE("is_canonical agrees with a direct permutation scan") {
    std::vector<int> perm;
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int col = 1; col < n; ++col)
                for (int row = 0; row < col; ++row, ++bit)
                    if ((mask >> bit) & 1) g.add_edge(row, col);
            perm.resize(n);
            std::iota(perm.begin(), perm.end(), 0);
            // lexicographic comparison: pair (0,1) is the most significant
            // bit, so build keys by appending bits at the low end
            std::uint32_t self = 0;
            for (int col = 1, b = 0; col < n; ++col)
                for (int row = 0; row < col; ++row, ++b)
                    self = (self << 1) | ((mask >> b) & 1);
            bool minimal = true;
            do {
                std::uint32_t key = 0;
                for (int col = 1; col < n; ++col)
                    for (int row = 0; row < col; ++row)
                        key = (key << 1) | (g.adjacent(perm[row], perm[col]) ? 1u : 0u);
                if (key < self) {
                    minimal = false;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(is_canonical(g) == minimal);
        }
    }
}

TEST_CASE("min-degree restriction is exact, not just a prune") {
    for (int n = 4; n <= 7; ++n)
        for (int delta = 1; delta <= 3; ++delta) {
            long long expect = 0;
            enumerate_c4free(n, {}, [&](const Graph& g) {
                if (g.min_degree() >= delta) ++expect;
                return true;
            });
            long long got = 0;
            EnumOptions opt;
            opt.min_degree_final = delta;
            enumerate_c4free(n, opt, [&](const Graph& g) {
                CHECK(g.min_degree() >= delta);
                ++got;
                return true;
            });
            CHECK(got == expect);
        }
}

TEST_CASE("visitor stop and graph cap") {
    long long seen = 0;
    EnumStatus st = enumerate_c4free(6, {}, [&](const Graph&) { return ++seen < 5; });
    CHECK(st == EnumStatus::stopped_by_visitor);
    CHECK(seen == 5);
    EnumOptions opt;
    opt.max_graphs = 7;
    seen = 0;
    st = enumerate_c4free(6, opt, [&](const Graph&) {
        ++seen;
        return true;
    });
    CHECK(st == EnumStatus::budget_exceeded);
    CHECK(seen == 7);
}

TEST_CASE("exact verification of the first two table rows") {
    for (int n : {1, 2}) {
        SearchOutcome out = verify_exact(n, 7);
        CHECK(out.conclusive);
        CHECK(out.impossibility);
        REQUIRE(out.witness_g6.has_value());
        Graph w = decode_graph6(*out.witness_g6);
        CHECK(w.order() == 6);
        CHECK(!contains_c4(w));
        auto bm = max_book_in_complement(w);
        CHECK((!bm || *bm < n));
    }
}

TEST_CASE("refutation paths") {
    // r(C4,B1) = 7: no witness exists on 7 vertices, so R = 8 is refuted in
    // phase 1
    SearchOutcome high = verify_exact(1, 8);
    CHECK(!high.conclusive);
    CHECK(!high.witness_g6.has_value());
    CHECK(high.note.find("refuted") != std::string::npos);
    // r(C4,B3) = 9: a valid order-8 graph exists, so R = 8 is refuted in
    // phase 2
    SearchOutcome low = verify_exact(3, 8);
    CHECK(!low.conclusive);
    CHECK(low.witness_g6.has_value());
    CHECK(!low.impossibility);
    CHECK(low.note.find("refuted") != std::string::npos);
}

TEST_CASE("budget exhaustion reports inconclusive, never a verdict") {
    SearchOutcome out = verify_exact(2, 7, 1e-9);
    CHECK(!out.conclusive);
    CHECK(out.note.find("inconclusive") == 0);
}

TEST_CASE("stretch row: exact verification of r(C4,B3) = 9") {
    SearchOutcome out = verify_exact(3, 9, 120);
    CHECK(out.conclusive);
    REQUIRE(out.witness_g6.has_value());
    Graph w = decode_graph6(*out.witness_g6);
    CHECK(w.order() == 8);
    auto bm = max_book_in_complement(w);
    REQUIRE(bm.has_value());
    CHECK(*bm < 3);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(enumerate_c4free(0, {}, [](const Graph&) { return true; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_c4free(14, {}, [](const Graph&) { return true; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_exact(0, 7), std::invalid_argument);
}
