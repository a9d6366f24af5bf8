#include "c4book/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace c4book {

ProjectivePoint canonicalize(const Field& f, std::array<Field::Elem, 3> t) {
    for (auto& e : t)
        if (!f.is_valid(e)) throw std::invalid_argument("canonicalize: element out of field");
    for (int i = 0; i < 3; ++i) {
        if (t[i] != 0) {
            Field::Elem s = f.inv(t[i]);
            ProjectivePoint p;
            for (int j = 0; j < 3; ++j) p.c[j] = f.mul(t[j], s);
            return p;
        }
    }
    throw std::invalid_argument("canonicalize: all-zero triple");
}

bool point_less(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < 3; ++i) {
        if (a.c[i] != b.c[i]) return f.elem_less(a.c[i], b.c[i]);
    }
    return false;
}

std::vector<ProjectivePoint> enumerate_points(const Field& f) {
    std::uint32_t q = f.order();
    std::vector<ProjectivePoint> pts;
    pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (Field::Elem y = 0; y < q; ++y)
        for (Field::Elem z = 0; z < q; ++z)
            pts.push_back({{f.one(), y, z}});
    for (Field::Elem z = 0; z < q; ++z) pts.push_back({{0, f.one(), z}});
    pts.push_back({{0, 0, f.one()}});
    std::sort(pts.begin(), pts.end(), [&](const ProjectivePoint& a, const ProjectivePoint& b) {
        return point_less(f, a, b);
    });
    return pts;
}

bool is_orthogonal(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b) {
    Field::Elem s = 0;
    for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a.c[i], b.c[i]));
    return s == 0;
}

PolarityGraph build_er_graph(const Field& f) {
    auto pts = enumerate_points(f);
    int n = static_cast<int>(pts.size());
    Graph g(n);
    std::vector<int> absolute;
    bool prime_field = f.degree() == 1;
    std::uint64_t p = f.characteristic();
    auto dot_zero = [&](int i, int j) {
        if (prime_field) {
            std::uint64_t s = 0;
            for (int c = 0; c < 3; ++c)
                s += static_cast<std::uint64_t>(pts[i].c[c]) * pts[j].c[c];
            return s % p == 0;
        }
        return is_orthogonal(f, pts[i], pts[j]);
    };
    for (int i = 0; i < n; ++i) {
        if (dot_zero(i, i)) absolute.push_back(i);
        for (int j = i + 1; j < n; ++j)
            if (dot_zero(i, j)) g.add_edge(i, j);
    }
    return PolarityGraph{f, static_cast<int>(f.order()), std::move(pts), std::move(g), std::move(absolute)};
}

PolarityGraph build_er_graph(int q) {
    auto [p, k] = factor_prime_power(static_cast<std::uint32_t>(q));
    return build_er_graph(Field::make(p, k));
}

}  // namespace c4book
