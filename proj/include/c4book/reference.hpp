#pragma once

#include <optional>
#include <string>

#include "c4book/graph.hpp"

namespace c4book::reference {

/// Deliberately naive re-implementations used as independent cross-checks
/// of the bitset kernels. Keep these dumb; their value is that they share
/// no code path with the fast versions.

/// O(n^4) scan over ordered 4-tuples for an explicit 4-cycle.
bool contains_c4_naive(const Graph& g);

/// Explicit search for the largest book in the complement: for every
/// non-adjacent pair, count common non-neighbors one vertex at a time.
std::optional<int> book_max_naive(const Graph& g);

/// graph6 encoder written directly from the published format description.
std::string graph6_encode_reference(const Graph& g);

}  // namespace c4book::reference
