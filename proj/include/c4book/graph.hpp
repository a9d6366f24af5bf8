#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace c4book {

/// Dense undirected simple graph with bitset adjacency rows.
class Graph {
public:
    Graph() : n_(0), words_(0) {}
    explicit Graph(int n);

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    bool adjacent(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(int i) const;
    int min_degree() const;
    long long edge_count() const;

    Graph complement() const;
    /// Subgraph induced by `keep` (vertices renumbered in the given order).
    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

/// True iff some pair of distinct vertices has >= 2 common neighbors.
bool contains_c4(const Graph& g);

/// Max over non-adjacent pairs (u, v) of the number of common non-neighbors
/// (vertices outside {u, v} adjacent to neither); nullopt for complete
/// graphs, where no non-adjacent pair exists. The complement contains B_m,
/// m >= 1, iff the result is >= m.
std::optional<int> max_book_in_complement(const Graph& g);

/// Degree-sum sufficient condition for C4: sum of C(d(v),2) > C(n,2).
/// A false result says nothing about C4-freeness.
bool proposition_degree_test(const Graph& g);

std::map<int, int> degree_profile(const Graph& g);

/// nullopt means disconnected ("infinite").
std::optional<int> diameter(const Graph& g);

std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph decode_graph6(std::string_view s);

}  // namespace c4book
