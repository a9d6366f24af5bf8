#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "c4book/graph.hpp"

namespace c4book {

/// True iff the graph's upper-triangle bit-string (graph6 bit order) is
/// the lexicographic minimum over all vertex permutations. Exposed for the
/// enumeration tests.
bool is_canonical(const Graph& g);

struct EnumOptions {
    /// Required minimum degree of the *completed* graphs (pruned during
    /// extension via remaining-vertex capacity); 0 disables.
    int min_degree_final = 0;
    /// Stop after this many canonical graphs at the target order (< 0: off).
    long long max_graphs = -1;
    double budget_seconds = -1;
};

enum class EnumStatus { complete, stopped_by_visitor, budget_exceeded };

/// Isomorph-free exhaustive enumeration of C4-free graphs on N vertices by
/// orderly vertex-by-vertex extension. The visitor returns false to stop.
EnumStatus enumerate_c4free(int N, const EnumOptions& opt,
                            const std::function<bool(const Graph&)>& visit);

long long count_c4free(int N);

struct SearchOutcome {
    int n = 0;
    int R = 0;
    std::optional<std::string> witness_g6;  // valid witness on R-1 vertices
    bool impossibility = false;             // no valid graph on R vertices
    bool conclusive = false;                // witness found AND impossibility proven
    long long graphs_examined = 0;
    double elapsed_seconds = 0;
    std::string note;
};

/// Exact verification of r(C4,B_n) = R: finds a witness at order R-1 and
/// proves impossibility at order R. The order-R enumeration is cut by the
/// Claim-3-style bound delta(G) >= R - parsons_star_upper(n) (n >= 2); a 1%
/// seeded sample of rejected order-R graphs is re-failed with an
/// independent book scan. Budget exhaustion yields an inconclusive
/// outcome, never a confirmation.
SearchOutcome verify_exact(int n, int R, double budget_seconds = -1,
                           std::uint64_t audit_seed = 12345);

}  // namespace c4book
