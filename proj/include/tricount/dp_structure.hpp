#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tricount/cell.hpp"
#include "tricount/empty_triangles.hpp"
#include "tricount/geom.hpp"

namespace tricount {

enum class DPPointMode { BasicOnly, BasicAndAdditional };

enum class CellFamily {
    TriQuad,   // triangles and convex quads over basic DP points
    BinaryCut, // cells generated on the fly by chord splits of the box
    Exhaustive // TriQuad with raised caps, for small validation runs
};

struct DPPointSet {
    std::vector<RatPoint> basic;      // includes the 4 bounding-box corners
    std::vector<RatPoint> additional; // segment-pair intersections, opt-in
    Rat xmin, xmax, ymin, ymax;       // bounding box

    std::vector<RatPoint> all() const;
    std::vector<RatPoint> box_ring() const;
};

/// Basic DP points of a set of triangles: bounding-box corners plus every
/// intersection of a vertical line through a triangle corner with a triangle
/// edge or a horizontal box edge. Additional points (opt-in) are the pairwise
/// intersections of segments spanned by basic points.
DPPointSet build_dp_points(const TriangleUniverse& T, DPPointMode mode,
                           std::size_t cap = 200000);

/// Same construction over explicit triangle corner coordinates; used by the
/// cut searcher where triangles are not index triples over S.
DPPointSet basic_dp_points(const std::vector<std::array<RatPoint, 3>>& triangles,
                           std::size_t cap = 200000);

/// Cells of the configured family over the DP points, each with its
/// contained_points over S, sorted so that containment implies earlier
/// placement (ascending exact area); the bounding box comes last.
std::vector<Cell> build_cell_catalog(const DPPointSet& dps, const std::vector<Point>& S,
                                     int k, CellFamily family, std::size_t cap = 50000);

struct Partition {
    std::vector<Cell> parts; // 2..k cells, pairwise interior-disjoint, covering
};

/// Partitions of Q into 2..k cells of the catalog (TriQuad/Exhaustive) or into
/// two chord-split halves (BinaryCut). Every emitted partition is verified
/// exactly: pairwise interior-disjointness, area sum, and the two-thirds point
/// bound per part (waived when Q holds fewer than 3 input points). Each
/// distinct part multiset is emitted once, in deterministic order.
std::vector<Partition> enumerate_partitions(const Cell& Q, const std::vector<Cell>& catalog,
                                            const std::vector<Point>& S, int k,
                                            CellFamily family, const DPPointSet& dps);

/// Largest admissible per-part point count for a cell holding `total` points.
long two_thirds_limit(long total);

} // namespace tricount
