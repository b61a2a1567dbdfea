#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tricount/dp_structure.hpp"
#include "tricount/geom.hpp"

namespace tricount {

struct WeightedTriangle {
    std::array<RatPoint, 3> corners;
    Rat weight; // > 0
};

/// A candidate cut: a simple polygon over basic DP points.
struct CutPolygon {
    std::vector<RatPoint> vertices;
};

struct CutReport {
    Rat destroyed_weight; // fraction of total weight crossed by the boundary
    Rat inside_weight;    // fraction strictly inside
    Rat outside_weight;   // fraction strictly outside
    bool within_edge_budget = false;
    bool destroyed_ok = false;
    bool inside_ok = false;
    bool outside_ok = false;
    bool verdict = false;
};

enum class CutCandidateFamily {
    AxisRectangles, // axis-aligned rectangles with corners at basic DP points
};

/// Classifies every triangle against the cut boundary (exact predicates) and
/// checks all four clauses: edge budget l, destroyed fraction <= alpha, and
/// inside/outside fractions each <= 2/3. Triangles must have pairwise
/// disjoint interiors (shared edges and vertices are fine); overlapping
/// interiors are InvalidInput.
CutReport verify_cut(const CutPolygon& cut, const std::vector<WeightedTriangle>& T,
                     const Rat& alpha, int l);

/// Exhaustive search over the candidate family in canonical order; returns
/// the first cut that verifies, or nullopt. Requires that no triangle holds
/// more than one third of the total weight.
std::optional<CutPolygon> search_cut(const std::vector<WeightedTriangle>& T, const Rat& alpha,
                                     int l, CutCandidateFamily family);

} // namespace tricount
