#include "c4book/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "c4book/witness.hpp"

namespace c4book {

namespace {

std::vector<int> neighbor_list(const Graph& g, int v) {
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u)) out.push_back(u);
    return out;
}

int find_point(const PolarityGraph& er, const ProjectivePoint& p) {
    for (int i = 0; i < static_cast<int>(er.points.size()); ++i)
        if (er.points[i] == p) return i;
    throw StructureError("distinguished point not found in ER_q");
}

[[noreturn]] void fail(const std::string& what) {
    throw StructureError("frame invariant violated: " + what);
}

void check_partition(const PolarityGraph& er, const NeighborhoodFrame& f) {
    std::vector<char> seen(er.graph.order(), 0);
    seen[f.hub] = 1;
    for (int w : f.w) {
        if (seen[w]) fail("hub neighborhood overlaps itself");
        seen[w] = 1;
    }
    for (const auto& a : f.A)
        for (int x : a) {
            if (seen[x]) fail("A-sets are not pairwise disjoint from each other / N[hub]");
            seen[x] = 1;
        }
    for (char s : seen)
        if (!s) fail("{hub} u N(hub) u A-sets do not cover V(ER_q)");
}

ConstructionResult finish(Graph g, char family, int q, int t) {
    ConstructionResult r;
    r.order = g.order();
    r.target_book = (q - 1) * (q - 1) + (t - 2);
    r.certified_lower = q * q + t;
    r.family = family;
    r.q = q;
    r.t = t;
    if (r.order != q * q + t - 1) fail("construction has wrong order");
    if (g.min_degree() < q) fail("construction has minimum degree below q");
    // The theorems are treated as predictions: every build is re-verified
    // from the adjacency structure before being returned.
    auto report = verify_witness(g, r.target_book);
    if (!report.valid) fail("construction failed witness verification: " + report.detail);
    r.graph = std::move(g);
    return r;
}

}  // namespace

NeighborhoodFrame build_frame(const PolarityGraph& er) {
    int q = er.q;
    const Graph& g = er.graph;
    bool even = q % 2 == 0;
    ProjectivePoint hub_point =
        even ? ProjectivePoint{{er.field.one(), er.field.one(), er.field.one()}}
             : ProjectivePoint{{0, 0, er.field.one()}};
    NeighborhoodFrame f;
    f.hub = find_point(er, hub_point);
    auto nbrs = neighbor_list(g, f.hub);
    if (static_cast<int>(nbrs.size()) != q + 1) fail("hub does not have degree q+1");

    std::set<int> degq(er.absolute.begin(), er.absolute.end());
    for (int v = 0; v < g.order(); ++v) {
        bool abs = degq.count(v) > 0;
        if (g.degree(v) != (abs ? q : q + 1)) fail("degree dichotomy / absolute-set mismatch");
    }

    if (even) {
        // Claim 8: N(<1,1,1>) is exactly the degree-q vertex set.
        if (std::set<int>(nbrs.begin(), nbrs.end()) != degq)
            fail("N(<1,1,1>) differs from the degree-q vertex set");
        f.w = nbrs;  // ascending index = canonical point order
    } else {
        std::vector<int> matched, isolated;
        for (int w : nbrs)
            (degq.count(w) ? isolated : matched).push_back(w);
        int expect_isolated = (q % 4 == 1) ? 2 : 0;
        if (static_cast<int>(isolated.size()) != expect_isolated)
            fail("unexpected number of degree-q vertices in N(<0,0,1>)");
        if (expect_isolated == 2 && g.adjacent(isolated[0], isolated[1]))
            fail("the two degree-q hub neighbors are adjacent");
        for (int w : isolated)
            for (int u : nbrs)
                if (u != w && g.adjacent(w, u)) fail("degree-q hub neighbor has an edge inside N(hub)");
        // Perfect matching on the matched block.
        std::set<int> in_matched(matched.begin(), matched.end());
        std::vector<std::pair<int, int>> pairs;
        std::set<int> used;
        for (int w : matched) {
            if (used.count(w)) continue;
            std::vector<int> partners;
            for (int u : matched)
                if (u != w && g.adjacent(w, u)) partners.push_back(u);
            if (partners.size() != 1) fail("N(hub) does not induce a perfect matching");
            pairs.emplace_back(w, partners[0]);
            used.insert(w);
            used.insert(partners[0]);
        }
        // Pairs are homogeneous: both endpoints adjacent to exactly two
        // degree-q vertices, or neither. Carrier pairs go first so that the
        // kept prefix w_1..w_t always contains every A-set holding absolute
        // points.
        auto abs_nbrs = [&](int v) {
            int c = 0;
            for (int u : er.absolute)
                if (g.adjacent(v, u)) ++c;
            return c;
        };
        std::vector<std::pair<int, int>> carrier, plain;
        for (auto& [a, b] : pairs) {
            int ca = abs_nbrs(a), cb = abs_nbrs(b);
            if (ca != cb || (ca != 0 && ca != 2))
                fail("matched pair is not homogeneous in degree-q adjacency");
            (ca == 2 ? carrier : plain).push_back({std::min(a, b), std::max(a, b)});
        }
        int expect_carriers = (q % 4 == 3) ? (q + 1) / 4 : (q - 1) / 4;
        if (static_cast<int>(carrier.size()) != expect_carriers)
            fail("unexpected number of carrier pairs");
        std::sort(carrier.begin(), carrier.end());
        std::sort(plain.begin(), plain.end());
        std::sort(isolated.begin(), isolated.end());
        for (auto& [a, b] : carrier) { f.w.push_back(a); f.w.push_back(b); }
        for (auto& [a, b] : plain) { f.w.push_back(a); f.w.push_back(b); }
        for (int w : isolated) f.w.push_back(w);
    }

    std::set<int> closed(nbrs.begin(), nbrs.end());
    closed.insert(f.hub);
    for (int w : f.w) {
        std::vector<int> a;
        for (int u : neighbor_list(g, w))
            if (!closed.count(u)) a.push_back(u);
        f.A.push_back(std::move(a));
    }
    if (even) {
        for (const auto& a : f.A)
            if (static_cast<int>(a.size()) != q - 1) fail("|A_{w_i}| != q-1 for even q");
    }
    check_partition(er, f);
    return f;
}

ConstructionResult build_H(const PolarityGraph& er, int t) {
    int q = er.q;
    if (q < 4 || q % 2 != 0)
        throw std::invalid_argument("build_H: q must be an even prime power >= 4");
    if (t < 0 || t > q - 1 || t == 1)
        throw std::invalid_argument("build_H: t must satisfy 0 <= t <= q-1, t != 1");
    auto f = build_frame(er);
    std::set<int> deleted;
    if (t == 0) {
        deleted.insert(f.hub);
        deleted.insert(f.w.begin(), f.w.end());
    } else {
        deleted.insert(f.w[0]);
        // A_{w_1} = {u_1, ..., u_{q-1}}; delete u_{t-1}, ..., u_{q-1}.
        for (int i = t - 2; i <= q - 2; ++i) deleted.insert(f.A[0][i]);
    }
    std::vector<int> keep;
    for (int v = 0; v < er.graph.order(); ++v)
        if (!deleted.count(v)) keep.push_back(v);
    return finish(er.graph.induced(keep), 'H', q, t);
}

ConstructionResult build_G(const PolarityGraph& er, int t) {
    int q = er.q;
    if (q < 5 || q % 2 == 0)
        throw std::invalid_argument("build_G: q must be an odd prime power >= 5");
    if (q % 4 == 3) {
        if (t < (q + 1) / 2 || t > q - 1 || t == (q + 3) / 2)
            throw std::invalid_argument(
                "build_G: for q = 3 (mod 4) t must satisfy (q+1)/2 <= t <= q-1, t != (q+3)/2");
    } else {
        if (t < (q - 1) / 2 || t > q - 1 || t == (q + 1) / 2)
            throw std::invalid_argument(
                "build_G: for q = 1 (mod 4) t must satisfy (q-1)/2 <= t <= q-1, t != (q+1)/2");
    }
    auto f = build_frame(er);
    std::set<int> deleted;
    deleted.insert(f.hub);
    for (int i = t; i <= q; ++i) deleted.insert(f.w[i]);  // w_{t+1}..w_{q+1}
    std::vector<int> keep;
    std::vector<int> newindex(er.graph.order(), -1);
    for (int v = 0; v < er.graph.order(); ++v) {
        if (!deleted.count(v)) {
            newindex[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    }
    Graph g = er.graph.induced(keep);
    if (t % 2 == 1) {
        int a = newindex[f.w[t - 2]];  // w_{t-1}
        int b = newindex[f.w[t - 1]];  // w_t
        if (g.adjacent(a, b)) fail("w_{t-1} and w_t are already adjacent");
        g.add_edge(a, b);
        for (int x : f.A[t - 2])
            for (int y : f.A[t - 1])
                if (g.adjacent(newindex[x], newindex[y])) g.remove_edge(newindex[x], newindex[y]);
    }
    return finish(std::move(g), 'G', q, t);
}

ConstructionResult build_H(int q, int t) { return build_H(build_er_graph(q), t); }
ConstructionResult build_G(int q, int t) { return build_G(build_er_graph(q), t); }

ConstructionResult build_corollary5_witness(int q) {
    if (q < 4) throw std::invalid_argument("build_corollary5_witness: q must be a prime power >= 4");
    factor_prime_power(static_cast<std::uint32_t>(q));
    return q % 2 == 0 ? build_H(q, q - 1) : build_G(q, q - 1);
}

std::string manifest(const ConstructionResult& r) {
    std::ostringstream os;
    os << "family " << r.family << '\n'
       << "q " << r.q << '\n'
       << "t " << r.t << '\n'
       << "order " << r.order << '\n'
       << "target_book " << r.target_book << '\n'
       << "certified r(C4,B" << r.target_book << ") >= " << r.certified_lower << '\n';
    return os.str();
}

}  // namespace c4book
