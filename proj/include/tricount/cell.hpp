#pragma once

#include <string>
#include <vector>

#include "tricount/geom.hpp"

namespace tricount {

/// A DP cell: a simple outer polygon (stored counter-clockwise) with optional
/// holes (stored clockwise), vertices at exact rational points. Carries the
/// indices of the input points whose closure it contains and a canonical key
/// for memoization.
struct Cell {
    std::vector<RatPoint> outer;
    std::vector<std::vector<RatPoint>> holes;
    std::vector<int> contained_points;
    std::string key;
};

/// Signed area*2 of a ring (positive when counter-clockwise).
Rat ring_signed_area2(const std::vector<RatPoint>& ring);

/// Exact area of the cell (outer minus holes).
Rat cell_area(const Cell& c);

/// Builds a cell from rings, normalizing orientations (outer CCW, holes CW)
/// and computing the canonical key plus contained_points over S.
/// Throws InvalidInput when the outer ring is degenerate (zero area or
/// non-simple) or a hole is degenerate.
Cell make_cell(std::vector<RatPoint> outer, std::vector<std::vector<RatPoint>> holes,
               const std::vector<Point>& S);

/// Canonical key for a set of rings: each ring rotated so its lexicographic
/// minimum vertex comes first, orientation normalized, holes sorted.
std::string cell_key(const std::vector<RatPoint>& outer,
                     const std::vector<std::vector<RatPoint>>& holes);

/// Exact even-odd classification honoring holes: a point inside a hole is
/// Outside, a point on any ring edge is Boundary.
Region point_in_polygon(const RatPoint& p, const Cell& c);

/// True iff the closed segment lies within the closed region of the cell
/// (boundary contact allowed, no excursion outside or into a hole).
bool segment_in_cell(const Segment& s, const Cell& c);

/// True iff closure(b) is a subset of closure(a).
bool cell_contains(const Cell& a, const Cell& b);

/// Some point strictly interior to the cell.
RatPoint interior_sample(const Cell& c);

/// True iff the interiors of a and b are disjoint (shared boundary allowed).
bool interiors_disjoint(const Cell& a, const Cell& b);

/// All boundary edges of the cell (outer plus holes).
std::vector<Segment> cell_edges(const Cell& c);

} // namespace tricount
