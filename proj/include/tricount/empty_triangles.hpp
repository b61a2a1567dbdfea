#pragma once

#include <vector>

#include "tricount/geom.hpp"

namespace tricount {

/// A triangle on input points i < j < k whose closed region contains no other
/// point of S (interior and boundary both empty).
struct EmptyTriangle {
    int i;
    int j;
    int k;

    friend bool operator==(const EmptyTriangle& a, const EmptyTriangle& b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend bool operator<(const EmptyTriangle& a, const EmptyTriangle& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    }
};

struct TriangleUniverse {
    std::vector<EmptyTriangle> triangles; // canonically ordered
    std::vector<Point> points;
};

/// All empty triangles over S, canonically ordered. A fourth point on an edge
/// disqualifies a triple just like an interior point does.
/// Throws InvalidInput for fewer than 3 points or duplicates.
TriangleUniverse enumerate_empty(const std::vector<Point>& S, int threads = 1);

} // namespace tricount
