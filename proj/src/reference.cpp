#include "c4book/reference.hpp"

#include <vector>

namespace c4book::reference {

bool contains_c4_naive(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a))
                        return true;
                }
    return false;
}

std::optional<int> book_max_naive(const Graph& g) {
    int n = g.order();
    std::optional<int> best;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            int pages = 0;
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                if (!g.adjacent(u, w) && !g.adjacent(v, w)) ++pages;
            }
            if (!best || pages > *best) best = pages;
        }
    return best;
}

std::string graph6_encode_reference(const Graph& g) {
    long long n = g.order();
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(g.adjacent(row, col) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[i + b];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

}  // namespace c4book::reference
