#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "c4book/graph.hpp"
#include "c4book/projective.hpp"

namespace c4book {

/// Thrown when a structural property the constructions rely on fails to
/// hold on the actual graph. This would falsify a claim of the underlying
/// theory and must never be patched over silently.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The hub / w_1..w_{q+1} / A_{w_i} decomposition of ER_q around the
/// distinguished vertex: <1,1,1> for even q, <0,0,1> for odd q.
struct NeighborhoodFrame {
    int hub = -1;
    std::vector<int> w;                   // hub neighbors, ordered (see build_frame)
    std::vector<std::vector<int>> A;      // A[i] = N(w[i]) minus N[hub], canonical order
};

/// Frame ordering:
///  - even q: w sorted by canonical point order (these are exactly the
///    degree-q vertices); A[0] in canonical point order.
///  - odd q: the perfect matching induced on N(hub) (minus the two degree-q
///    vertices when q = 1 mod 4) is split into pairs; pairs whose endpoints
///    are adjacent to exactly two degree-q vertices come first, then the
///    remaining pairs, each block sorted by its smaller endpoint, smaller
///    endpoint first within a pair; for q = 1 mod 4 the two degree-q
///    vertices take positions q, q+1. Every structural assumption is
///    checked; violations raise StructureError.
NeighborhoodFrame build_frame(const PolarityGraph& er);

struct ConstructionResult {
    Graph graph;
    int order = 0;
    int target_book = 0;      // n = (q-1)^2 + (t-2)
    int certified_lower = 0;  // q^2 + t, so r(C4,B_n) >= order+1 = certified_lower
    char family = '?';        // 'H' or 'G'
    int q = 0;
    int t = 0;
};

/// H_q^t for even prime power q >= 4, 0 <= t <= q-1, t != 1.
ConstructionResult build_H(int q, int t);
ConstructionResult build_H(const PolarityGraph& er, int t);

/// G_q^t for odd prime power q >= 5 and t in the Theorem 4 ranges.
ConstructionResult build_G(int q, int t);
ConstructionResult build_G(const PolarityGraph& er, int t);

/// The t = q-1 specialization: witness of order q^2+q-2 for n = q^2-q-2.
ConstructionResult build_corollary5_witness(int q);

/// Side-car text manifest for an exported witness.
std::string manifest(const ConstructionResult& r);

}  // namespace c4book
