#pragma once

#include <array>
#include <vector>

#include "c4book/field.hpp"
#include "c4book/graph.hpp"

namespace c4book {

/// A point of PG(2,q): canonical representative of a scalar-equivalence
/// class of nonzero triples, leftmost nonzero coordinate equal to 1.
struct ProjectivePoint {
    std::array<Field::Elem, 3> c;
    bool operator==(const ProjectivePoint&) const = default;
};

/// Scales by the inverse of the leftmost nonzero coordinate; idempotent.
/// Throws on the all-zero triple.
ProjectivePoint canonicalize(const Field& f, std::array<Field::Elem, 3> t);

/// All q^2+q+1 canonical points, sorted by coordinate sequence
/// (coefficients compared low-degree-first).
std::vector<ProjectivePoint> enumerate_points(const Field& f);

bool point_less(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b);

/// a1*b1 + a2*b2 + a3*b3 == 0; well-defined on equivalence classes.
bool is_orthogonal(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b);

/// The Erdos-Renyi polarity graph ER_q together with its point labels.
struct PolarityGraph {
    Field field;
    int q;
    std::vector<ProjectivePoint> points;  // vertex i = points[i]
    Graph graph;                          // loops removed
    std::vector<int> absolute;            // vertices with a1^2+a2^2+a3^2 = 0
};

PolarityGraph build_er_graph(const Field& f);
/// Convenience overload: factors the prime power q itself.
PolarityGraph build_er_graph(int q);

}  // namespace c4book
