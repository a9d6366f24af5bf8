#pragma once

#include <string>
#include <vector>

#include "c4book/graph.hpp"
#include "c4book/projective.hpp"

namespace c4book {

/// The A_i / B_i / B decomposition around a vertex v with d(v) = m, plus
/// the bookkeeping quantities the Theorem 2 proof tracks.
struct PartitionDecomposition {
    int v = -1;
    int m = 0;                            // d(v)
    std::vector<int> neighbors;           // v_1..v_m, ascending
    std::vector<std::vector<int>> A;      // A_i = N(v_i) \ N[v]
    std::vector<std::vector<int>> Bsets;  // B_i = (U_{x in A_i} N(x)) \ ({v_i} u U_j A_j)
    std::vector<int> B;                   // V \ (N[v] u U_i A_i)
    int tau = 0;                          // # degree-m vertices in N(v)
    int sigma = 0;                        // # N(v) vertices of degree >= m+2
    int neighborhood_edges = 0;           // e(N(v))
};

/// Requires contains_c4(G) = false and d(v) >= 1.
PartitionDecomposition decompose(const Graph& g, int v);

/// Lowest-index vertex of minimum degree.
int min_degree_vertex(const Graph& g);

/// Fact 1: sum d(v_i) = m + sum |A_i| + 2 e(N(v)).
bool check_fact1(const Graph& g, const PartitionDecomposition& d);
/// Fact 2 for index i (0-based):
/// sum_{x in A_i} (d(x)-1) = 2 e(A_i) + sum_{j != i} e(A_i,A_j) + |B_i|.
bool check_fact2(const Graph& g, const PartitionDecomposition& d, int i);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string evidence;  // concrete witness tuple on failure
};

struct AuditReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string evidence = "");
    /// One line per check: name, pass/FAIL, evidence.
    std::string to_text() const;
};

/// All six parts of the matching/disjointness claim, for every admissible
/// vertex and index choice of a C4-free graph.
AuditReport check_claim4(const Graph& g);

/// Every structural statement about ER_q applicable to the parity of q:
/// order, degree dichotomy, absolute = degree-q, independence, diameter 2,
/// C4-freeness, and the hub-frame claims (even: Claim 8-10; odd: the
/// perfect-matching lemma and the local structures for q mod 4).
AuditReport audit_er_structure(int q);

/// Conditional predicate for the Theorem 2 proof claims. The hypotheses
/// (|V| = m^2+t, C4-free, complement B_{(m-1)^2+t-2}-free) can never all
/// hold; when they do not, `hypotheses_hold` is false and `claims` is
/// empty. When a caller feeds a graph where they do hold, at least one of
/// the claim conclusions must fail, exposing the contradiction.
struct CounterexampleAudit {
    bool hypotheses_hold = false;
    std::string hypothesis_failure;
    AuditReport claims;
};

CounterexampleAudit check_counterexample_claims(const Graph& g, int m, int t);

}  // namespace c4book
