#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tricount/cell.hpp"
#include "tricount/geom.hpp"

namespace tricount {

/// Index pair (i < j) into a point set.
using Edge = std::pair<int, int>;

constexpr unsigned long kDefaultTriangulationCap = 10'000'000UL;

/// m-th Catalan number, exact.
BigInt catalan(unsigned m);

/// Deterministic seed triangulation: greedy maximal set over candidate edges
/// in canonical order. Throws NoTriangulation when all points are collinear,
/// InvalidInput for fewer than 3 points.
std::vector<Edge> initial_triangulation(const std::vector<Point>& S);

/// All flip neighbors of t: swap the diagonal of a convex quadrilateral
/// formed by two adjacent triangular faces.
std::vector<std::vector<Edge>> flips(const std::vector<Edge>& t, const std::vector<Point>& S);

/// BFS over the flip graph from `seed` (or initial_triangulation when null),
/// invoking cb once per triangulation. Throws CapacityExceeded past cap.
void enumerate_triangulations(const std::vector<Point>& S,
                              const std::function<void(const std::vector<Edge>&)>& cb,
                              unsigned long cap = kDefaultTriangulationCap,
                              const std::vector<Edge>* seed = nullptr);

BigInt count_triangulations(const std::vector<Point>& S,
                            unsigned long cap = kDefaultTriangulationCap);

/// Independent ground truth: counts maximal pairwise-compatible candidate edge
/// sets by maximal-clique enumeration over the compatibility graph. Shares
/// only the geometric predicates with the flip-graph path. Hard cap |S| <= 12.
BigInt brute_force_oracle(const std::vector<Point>& S);

/// Number of points of S on the convex hull boundary (not strictly inside).
int hull_point_count(const std::vector<Point>& S);

/// True iff no further segment between points of S in closure(Q) can be added
/// to pt while staying inside Q and compatible. Edges of pt must already lie
/// in Q and use only points of closure(Q), else InvalidInput.
bool is_maximal_in_cell(const std::vector<Edge>& pt, const Cell& Q, const std::vector<Point>& S);

/// Number of distinct maximal triangulations within Q of the points of S in
/// closure(Q): enumerate full triangulations of those points, restrict each
/// to its maximal fragment in Q, keep the maximal ones, count distinct edge
/// sets. A cell with <= 2 points or a fully collinear point set counts 1.
BigInt count_maximal_in_cell(const Cell& Q, const std::vector<Point>& S,
                             unsigned long cap = kDefaultTriangulationCap);

} // namespace tricount
