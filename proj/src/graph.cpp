#include "c4book/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace c4book {

namespace {

int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

// Splits rows [0, n) into chunks and runs fn(first_row, last_row) on worker
// threads; used by the O(n^2) pair scans, which are only worth threading on
// the large polarity graphs.
template <typename Fn>
void over_row_ranges(int n, Fn&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (n < 2048 || workers <= 1) {
        fn(0, n);
        return;
    }
    workers = std::min<unsigned>(workers, 16);
    std::vector<std::thread> threads;
    int chunk = (n + static_cast<int>(workers) - 1) / static_cast<int>(workers);
    for (unsigned t = 0; t < workers; ++t) {
        int lo = static_cast<int>(t) * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph: self-loop");
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= 1ull << (j & 63);
    bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= 1ull << (i & 63);
}

void Graph::remove_edge(int i, int j) {
    bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] &= ~(1ull << (j & 63));
    bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] &= ~(1ull << (i & 63));
}

int Graph::degree(int i) const {
    int c = 0;
    for (auto w : row(i)) c += std::popcount(w);
    return c;
}

int Graph::min_degree() const {
    int m = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

long long Graph::edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!adjacent(i, j)) c.add_edge(i, j);
    return c;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (adjacent(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

bool contains_c4(const Graph& g) {
    int n = g.order();
    std::atomic_flag found;
    over_row_ranges(n, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            if (found.test()) return;
            auto ri = g.row(i);
            for (int j = i + 1; j < n; ++j) {
                if (popcount_and(ri, g.row(j)) >= 2) {
                    found.test_and_set();
                    return;
                }
            }
        }
    });
    return found.test();
}

std::optional<int> max_book_in_complement(const Graph& g) {
    int n = g.order();
    int words = g.words_per_row();
    std::atomic<int> best{-1};
    over_row_ranges(n, [&](int lo, int hi) {
        int local = -1;
        for (int i = lo; i < hi; ++i) {
            auto ri = g.row(i);
            for (int j = i + 1; j < n; ++j) {
                if (g.adjacent(i, j)) continue;
                auto rj = g.row(j);
                int covered = 0;
                for (int w = 0; w < words; ++w) covered += std::popcount(ri[w] | rj[w]);
                // i and j are non-adjacent, so neither lies in the union.
                local = std::max(local, n - 2 - covered);
            }
        }
        int cur = best.load();
        while (local > cur && !best.compare_exchange_weak(cur, local)) {}
    });
    int b = best.load();
    if (b < 0) return std::nullopt;
    return b;
}

bool proposition_degree_test(const Graph& g) {
    long long n = g.order();
    long long lhs = 0;
    for (int v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        lhs += d * (d - 1) / 2;
    }
    return lhs > n * (n - 1) / 2;
}

std::map<int, int> degree_profile(const Graph& g) {
    std::map<int, int> h;
    for (int v = 0; v < g.order(); ++v) ++h[g.degree(v)];
    return h;
}

std::optional<int> diameter(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    int diam = 0;
    std::vector<int> dist(n);
    std::vector<int> frontier, next;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier = {s};
        int seen = 1;
        int depth = 0;
        while (!frontier.empty()) {
            next.clear();
            ++depth;
            for (int u : frontier) {
                auto ru = g.row(u);
                for (int w = 0; w < g.words_per_row(); ++w) {
                    std::uint64_t bits = ru[w];
                    while (bits) {
                        int v = w * 64 + std::countr_zero(bits);
                        bits &= bits - 1;
                        if (dist[v] < 0) {
                            dist[v] = depth;
                            next.push_back(v);
                            ++seen;
                        }
                    }
                }
            }
            if (!next.empty()) diam = std::max(diam, depth);
            frontier.swap(next);
        }
        if (seen != n) return std::nullopt;
    }
    return diam;
}

std::string encode_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(header)) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    auto val = [&](std::size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return static_cast<long long>(c - 63);
    };
    long long n;
    std::size_t pos;
    if (s[0] != '~') {
        n = val(0);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        if (s.size() < 8) throw std::invalid_argument("graph6: truncated size field");
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
        pos = 8;
    }
    if (n < 0 || n > 100000) throw std::invalid_argument("graph6: order out of supported range");
    long long nbits = n * (n - 1) / 2;
    if (static_cast<long long>(s.size() - pos) != (nbits + 5) / 6)
        throw std::invalid_argument("graph6: wrong payload length");
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            long long v = val(pos + bit / 6);
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (long long b = nbits; b < static_cast<long long>(s.size() - pos) * 6; ++b) {
        if ((val(pos + b / 6) >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

}  // namespace c4book
