#pragma once

#include <optional>
#include <string>

#include "c4book/graph.hpp"

namespace c4book {

/// Certificate check for the lower-bound statement r(C4,B_n) >= |V(G)|+1.
/// Everything is recomputed from the adjacency structure; no construction
/// metadata is trusted.
struct WitnessReport {
    int order = 0;
    bool c4_free = false;
    int min_degree = 0;
    std::optional<int> book_max;  // nullopt: no non-adjacent pair exists
    int claimed_n = 0;
    bool valid = false;
    /// On valid: the certified statement; on invalid: the first failing
    /// predicate with evidence.
    std::string detail;

    std::string to_text() const;
};

WitnessReport verify_witness(const Graph& g, int n);

enum class GqMembership {
    member,
    not_member,
    wrong_order,  // the set is order-conditioned; distinct from failing its predicate
};

/// Membership in G(q): |V| = q^2+q+3, C4-free, complement B_{q^2-q+1}-free.
GqMembership check_gq_membership(const Graph& g, int q);

}  // namespace c4book
