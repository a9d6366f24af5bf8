#include "c4book/search.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "c4book/bounds.hpp"
#include "c4book/reference.hpp"

namespace c4book {

namespace {

constexpr int kMaxEnumOrder = 13;

// Compact single-word adjacency rows for the enumeration hot path.
struct SmallGraph {
    int n = 0;
    std::uint32_t rows[kMaxEnumOrder] = {};
};

// Is the upper-triangle bit-string lexicographically minimal over vertex
// permutations? Recursion only continues on exact column ties, so any
// strict difference either disproves canonicity or prunes the branch.
bool small_is_canonical(const SmallGraph& g) {
    int n = g.n;
    int perm[kMaxEnumOrder];
    bool used[kMaxEnumOrder] = {};
    // Returns true if some completion of perm[0..k) yields a strictly
    // smaller string.
    auto smaller = [&](auto&& self, int k) -> bool {
        if (k == n) return false;
        for (int u = 0; u < n; ++u) {
            if (used[u]) continue;
            int cmp = 0;  // -1 candidate column smaller, +1 larger
            for (int i = 0; i < k; ++i) {
                int cand = (g.rows[u] >> perm[i]) & 1;
                int iden = (g.rows[k] >> i) & 1;
                if (cand != iden) { cmp = cand < iden ? -1 : 1; break; }
            }
            if (cmp < 0) return true;
            if (cmp > 0) continue;
            used[u] = true;
            perm[k] = u;
            if (self(self, k + 1)) return true;
            used[u] = false;
        }
        return false;
    };
    return !smaller(smaller, 0);
}

Graph to_graph(const SmallGraph& s) {
    Graph g(s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if ((s.rows[i] >> j) & 1) g.add_edge(i, j);
    return g;
}

struct EnumDriver {
    int N;
    EnumOptions opt;
    const std::function<bool(const Graph&)>* visit;
    long long emitted = 0;
    EnumStatus status = EnumStatus::complete;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    long long nodes_since_check = 0;

    bool over_budget() {
        if (!has_deadline) return false;
        if (++nodes_since_check < 256) return false;
        nodes_since_check = 0;
        return std::chrono::steady_clock::now() > deadline;
    }

    // Returns false to unwind (stop or budget).
    bool extend(SmallGraph& g) {
        if (over_budget()) {
            status = EnumStatus::budget_exceeded;
            return false;
        }
        if (g.n == N) {
            ++emitted;
            if (!(*visit)(to_graph(g))) {
                status = EnumStatus::stopped_by_visitor;
                return false;
            }
            if (opt.max_graphs >= 0 && emitted >= opt.max_graphs) {
                status = EnumStatus::budget_exceeded;
                return false;
            }
            return true;
        }
        int k = g.n;
        for (std::uint32_t s = 0; s < (1u << k); ++s) {
            // New C4s can only arise from two new-neighbor vertices with an
            // existing common neighbor.
            bool ok = true;
            for (std::uint32_t bits = s; ok && bits; bits &= bits - 1) {
                int u = std::countr_zero(bits);
                for (std::uint32_t rest = bits & (bits - 1); rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    if (g.rows[u] & g.rows[v]) { ok = false; break; }
                }
            }
            if (!ok) continue;
            if (opt.min_degree_final > 0) {
                int slack = N - (k + 1);
                if (std::popcount(s) + slack < opt.min_degree_final) continue;
                for (int v = 0; v < k && ok; ++v) {
                    int deg = std::popcount(g.rows[v]) + static_cast<int>((s >> v) & 1);
                    if (deg + slack < opt.min_degree_final) ok = false;
                }
                if (!ok) continue;
            }
            SmallGraph child = g;
            child.n = k + 1;
            child.rows[k] = s;
            for (std::uint32_t bits = s; bits; bits &= bits - 1)
                child.rows[std::countr_zero(bits)] |= 1u << k;
            if (!small_is_canonical(child)) continue;
            if (!extend(child)) return false;
        }
        return true;
    }
};

}  // namespace

bool is_canonical(const Graph& g) {
    if (g.order() > kMaxEnumOrder) throw std::invalid_argument("is_canonical: order too large");
    SmallGraph s;
    s.n = g.order();
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j)
            if (i != j && g.adjacent(i, j)) s.rows[i] |= 1u << j;
    return small_is_canonical(s);
}

EnumStatus enumerate_c4free(int N, const EnumOptions& opt,
                            const std::function<bool(const Graph&)>& visit) {
    if (N < 1 || N > kMaxEnumOrder)
        throw std::invalid_argument("enumerate_c4free: order must be in [1,13]");
    EnumDriver d;
    d.N = N;
    d.opt = opt;
    d.visit = &visit;
    if (opt.budget_seconds > 0) {
        d.has_deadline = true;
        d.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(opt.budget_seconds));
    }
    SmallGraph root;
    root.n = 1;
    d.extend(root);
    return d.status;
}

long long count_c4free(int N) {
    long long count = 0;
    enumerate_c4free(N, {}, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

SearchOutcome verify_exact(int n, int R, double budget_seconds, std::uint64_t audit_seed) {
    if (n < 1 || R < 2) throw std::invalid_argument("verify_exact: need n >= 1, R >= 2");
    auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    auto remaining = [&] { return budget_seconds > 0 ? budget_seconds - elapsed() : -1.0; };

    SearchOutcome out;
    out.n = n;
    out.R = R;

    // A negative remaining budget must read as "already exhausted", not as
    // "unlimited".
    auto out_of_time = [&] { return budget_seconds > 0 && remaining() <= 0; };

    // Phase 1: witness on R-1 vertices (first valid graph in canonical
    // enumeration order).
    {
        if (out_of_time()) {
            out.note = "inconclusive: budget exhausted during witness search";
            out.elapsed_seconds = elapsed();
            return out;
        }
        EnumOptions opt;
        opt.budget_seconds = remaining();
        EnumStatus st = enumerate_c4free(R - 1, opt, [&](const Graph& g) {
            ++out.graphs_examined;
            auto bm = max_book_in_complement(g);
            if (!bm || *bm < n) {
                out.witness_g6 = encode_graph6(g);
                return false;
            }
            return true;
        });
        if (st == EnumStatus::budget_exceeded) {
            out.note = "inconclusive: budget exhausted during witness search";
            out.elapsed_seconds = elapsed();
            return out;
        }
        if (!out.witness_g6) {
            out.note = "no witness exists on R-1 vertices: r(C4,B_n) <= R-1, claim refuted";
            out.elapsed_seconds = elapsed();
            return out;
        }
    }

    // Phase 2: impossibility at order R. Any C4-free graph with a vertex of
    // complement-degree >= parsons_star_upper(n) already yields the book,
    // so the enumeration may require delta(G) >= R - parsons_star_upper(n).
    {
        if (out_of_time()) {
            out.note = "inconclusive: budget exhausted during impossibility search";
            out.elapsed_seconds = elapsed();
            return out;
        }
        EnumOptions opt;
        opt.budget_seconds = remaining();
        if (n >= 2) {
            long long bound = R - parsons_star_upper(n);
            if (bound > 0) opt.min_degree_final = static_cast<int>(bound);
        }
        std::mt19937_64 rng(audit_seed);
        bool counterexample = false;
        bool audit_mismatch = false;
        EnumStatus st = enumerate_c4free(R, opt, [&](const Graph& g) {
            ++out.graphs_examined;
            auto bm = max_book_in_complement(g);
            if (!bm || *bm < n) {
                counterexample = true;
                return false;
            }
            if (rng() % 100 == 0) {
                auto naive = reference::book_max_naive(g);
                if (!naive || *naive < n || *naive != *bm) {
                    audit_mismatch = true;
                    return false;
                }
            }
            return true;
        });
        out.elapsed_seconds = elapsed();
        if (audit_mismatch) {
            out.note = "internal error: rejection audit sample disagreed with the bitset scan";
            return out;
        }
        if (counterexample) {
            out.note = "a valid graph on R vertices exists: r(C4,B_n) > R, claim refuted";
            return out;
        }
        if (st == EnumStatus::budget_exceeded) {
            out.note = "inconclusive: budget exhausted during impossibility search";
            return out;
        }
        out.impossibility = true;
    }

    out.conclusive = true;
    std::ostringstream os;
    os << "confirmed r(C4,B" << n << ") = " << R;
    out.note = os.str();
    return out;
}

}  // namespace c4book
