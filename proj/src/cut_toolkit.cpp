#include "tricount/cut_toolkit.hpp"

#include <algorithm>
#include <set>

namespace tricount {

namespace {

Cell triangle_cell(const WeightedTriangle& t) {
    return make_cell({t.corners[0], t.corners[1], t.corners[2]}, {}, {});
}

void check_weights(const std::vector<WeightedTriangle>& T, const char* who) {
    if (T.empty()) throw InvalidInput(std::string(who) + ": empty triangle set");
    for (const auto& t : T)
        if (sgn(t.weight) <= 0) throw InvalidInput(std::string(who) + ": nonpositive weight");
}

void check_triangles_disjoint(const std::vector<WeightedTriangle>& T) {
    std::vector<Cell> tcells;
    tcells.reserve(T.size());
    for (const auto& t : T) tcells.push_back(triangle_cell(t));
    for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = i + 1; j < T.size(); ++j)
            if (!interiors_disjoint(tcells[i], tcells[j]))
                throw InvalidInput("cut toolkit: triangle interiors overlap");
}

// Does the closed triangle meet the boundary polyline of the cut?
bool meets_boundary(const WeightedTriangle& t, const Cell& cut) {
    for (int e = 0; e < 3; ++e) {
        Segment te(t.corners[e], t.corners[(e + 1) % 3]);
        for (const auto& ce : cell_edges(cut)) {
            if (segments_cross(te, ce) != CrossKind::Disjoint) return true;
        }
    }
    // A cut edge could still run strictly inside the triangle.
    for (const auto& v : cut.outer) {
        if (point_in_triangle(v, t.corners[0], t.corners[1], t.corners[2]) != Region::Outside)
            return true;
    }
    return false;
}

CutReport classify(const Cell& cut_cell, size_t cut_edges_count,
                   const std::vector<WeightedTriangle>& T, const Rat& alpha, int l) {
    Rat total = 0;
    for (const auto& t : T) total += t.weight;
    CutReport rep;
    rep.destroyed_weight = 0;
    rep.inside_weight = 0;
    rep.outside_weight = 0;
    for (const auto& t : T) {
        if (meets_boundary(t, cut_cell)) {
            rep.destroyed_weight += t.weight;
        } else if (point_in_polygon(t.corners[0], cut_cell) == Region::Interior) {
            rep.inside_weight += t.weight;
        } else {
            rep.outside_weight += t.weight;
        }
    }
    rep.destroyed_weight /= total;
    rep.inside_weight /= total;
    rep.outside_weight /= total;

    Rat two_thirds(2, 3);
    rep.within_edge_budget = (int)cut_edges_count <= l;
    rep.destroyed_ok = cmp(rep.destroyed_weight, alpha) <= 0;
    rep.inside_ok = cmp(rep.inside_weight, two_thirds) <= 0;
    rep.outside_ok = cmp(rep.outside_weight, two_thirds) <= 0;
    rep.verdict = rep.within_edge_budget && rep.destroyed_ok && rep.inside_ok && rep.outside_ok;
    return rep;
}

} // namespace

CutReport verify_cut(const CutPolygon& cut, const std::vector<WeightedTriangle>& T,
                     const Rat& alpha, int l) {
    check_weights(T, "verify_cut");
    check_triangles_disjoint(T);
    Cell cut_cell = make_cell(cut.vertices, {}, {});
    return classify(cut_cell, cut.vertices.size(), T, alpha, l);
}

std::optional<CutPolygon> search_cut(const std::vector<WeightedTriangle>& T, const Rat& alpha,
                                     int l, CutCandidateFamily family) {
    check_weights(T, "search_cut");
    Rat total = 0;
    Rat maxw = 0;
    for (const auto& t : T) {
        total += t.weight;
        if (cmp(t.weight, maxw) > 0) maxw = t.weight;
    }
    if (cmp(maxw * 3, total) > 0)
        throw InvalidInput("search_cut: a triangle exceeds one third of the total weight");
    check_triangles_disjoint(T);

    std::vector<std::array<RatPoint, 3>> tris;
    tris.reserve(T.size());
    for (const auto& t : T) tris.push_back(t.corners);
    DPPointSet dps = basic_dp_points(tris);

    if (family != CutCandidateFamily::AxisRectangles)
        throw InvalidInput("search_cut: unknown candidate family");

    std::set<RatPoint> dpset(dps.basic.begin(), dps.basic.end());
    std::vector<Rat> xs, ys;
    for (const auto& p : dps.basic) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    auto ratless = [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; };
    std::sort(xs.begin(), xs.end(), ratless);
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end(), ratless);
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    for (size_t xi = 0; xi < xs.size(); ++xi)
        for (size_t xj = xi + 1; xj < xs.size(); ++xj)
            for (size_t yi = 0; yi < ys.size(); ++yi)
                for (size_t yj = yi + 1; yj < ys.size(); ++yj) {
                    RatPoint c0(xs[xi], ys[yi]), c1(xs[xj], ys[yi]);
                    RatPoint c2(xs[xj], ys[yj]), c3(xs[xi], ys[yj]);
                    if (!dpset.count(c0) || !dpset.count(c1) || !dpset.count(c2) ||
                        !dpset.count(c3))
                        continue;
                    CutPolygon cand{{c0, c1, c2, c3}};
                    Cell cut_cell = make_cell(cand.vertices, {}, {});
                    if (classify(cut_cell, 4, T, alpha, l).verdict) return cand;
                }
    return std::nullopt;
}

} // namespace tricount
