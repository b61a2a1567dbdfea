#include "tricount/dp_structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tricount {

std::vector<RatPoint> DPPointSet::all() const {
    std::vector<RatPoint> out = basic;
    out.insert(out.end(), additional.begin(), additional.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RatPoint> DPPointSet::box_ring() const {
    return {RatPoint(xmin, ymin), RatPoint(xmax, ymin), RatPoint(xmax, ymax),
            RatPoint(xmin, ymax)};
}

namespace {

void dedup(std::vector<RatPoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

} // namespace

DPPointSet basic_dp_points(const std::vector<std::array<RatPoint, 3>>& triangles,
                           std::size_t cap) {
    if (triangles.empty()) throw InvalidInput("basic_dp_points: empty triangle set");
    DPPointSet out;
    bool first = true;
    for (const auto& t : triangles) {
        for (const auto& v : t) {
            if (first || cmp(v.x, out.xmin) < 0) out.xmin = v.x;
            if (first || cmp(v.x, out.xmax) > 0) out.xmax = v.x;
            if (first || cmp(v.y, out.ymin) < 0) out.ymin = v.y;
            if (first || cmp(v.y, out.ymax) > 0) out.ymax = v.y;
            first = false;
        }
    }

    std::vector<Rat> xs;
    for (const auto& t : triangles)
        for (const auto& v : t) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end(), [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto push = [&](RatPoint p) {
        out.basic.push_back(std::move(p));
        if (out.basic.size() > cap) throw CapacityExceeded("basic DP point cap exceeded");
    };
    for (const auto& p : out.box_ring()) push(p);
    for (const Rat& x : xs) {
        // Horizontal box edges.
        push(RatPoint(x, out.ymin));
        push(RatPoint(x, out.ymax));
        // Triangle edges met by the vertical line at x.
        for (const auto& t : triangles) {
            for (int e = 0; e < 3; ++e) {
                const RatPoint& a = t[e];
                const RatPoint& b = t[(e + 1) % 3];
                if (a.x == b.x) {
                    if (a.x == x) {
                        push(a);
                        push(b);
                    }
                    continue;
                }
                const Rat& lo = cmp(a.x, b.x) < 0 ? a.x : b.x;
                const Rat& hi = cmp(a.x, b.x) < 0 ? b.x : a.x;
                if (cmp(x, lo) < 0 || cmp(x, hi) > 0) continue;
                Rat y = a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
                push(RatPoint(x, y));
            }
        }
    }
    dedup(out.basic);
    return out;
}

DPPointSet build_dp_points(const TriangleUniverse& T, DPPointMode mode, std::size_t cap) {
    std::vector<std::array<RatPoint, 3>> tris;
    tris.reserve(T.triangles.size());
    for (const auto& t : T.triangles) {
        tris.push_back({RatPoint(T.points[t.i]), RatPoint(T.points[t.j]),
                        RatPoint(T.points[t.k])});
    }
    DPPointSet out = basic_dp_points(tris, cap);
    if (mode == DPPointMode::BasicAndAdditional) {
        // Intersections of all segment pairs over basic points; quartic in the
        // basic count, so this is strictly opt-in.
        const auto& B = out.basic;
        size_t m = B.size();
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                Segment s1(B[i], B[j]);
                for (size_t a = i; a < m; ++a) {
                    for (size_t b = a + 1; b < m; ++b) {
                        if (a == i && b <= j) continue;
                        Segment s2(B[a], B[b]);
                        for (const Rat& t : seg_intersection_params(s1, s2)) {
                            out.additional.push_back(point_on_segment(s1, t));
                            if (out.additional.size() > cap)
                                throw CapacityExceeded("additional DP point cap exceeded");
                        }
                    }
                }
            }
        }
        dedup(out.additional);
    }
    return out;
}

namespace {

bool area_less(const Cell& a, const Cell& b) {
    int c = cmp(cell_area(a), cell_area(b));
    if (c != 0) return c < 0;
    return a.key < b.key;
}

Cell box_cell(const DPPointSet& dps, const std::vector<Point>& S) {
    return make_cell(dps.box_ring(), {}, S);
}

} // namespace

long two_thirds_limit(long total) {
    if (total < 3) return total; // constraint waived for tiny cells
    return (2 * total) / 3;
}

std::vector<Cell> build_cell_catalog(const DPPointSet& dps, const std::vector<Point>& S,
                                     int k, CellFamily family, std::size_t cap) {
    if (k < 3) throw InvalidInput("build_cell_catalog: k must be >= 3");
    std::map<std::string, Cell> by_key;
    auto add = [&](Cell c) {
        if (by_key.size() >= cap && !by_key.count(c.key))
            throw CapacityExceeded("cell catalog cap exceeded");
        by_key.emplace(c.key, std::move(c));
    };
    add(box_cell(dps, S));

    if (family == CellFamily::TriQuad || family == CellFamily::Exhaustive) {
        auto pts = dps.all();
        size_t m = pts.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                for (size_t l = j + 1; l < m; ++l) {
                    if (orient(pts[i], pts[j], pts[l]) == 0) continue;
                    add(make_cell({pts[i], pts[j], pts[l]}, {}, S));
                }
        if (k >= 4) {
            for (size_t i = 0; i < m; ++i)
                for (size_t j = i + 1; j < m; ++j)
                    for (size_t l = j + 1; l < m; ++l)
                        for (size_t h = l + 1; h < m; ++h) {
                            // Strictly convex quads only; order the ring by
                            // testing the three pairings for a simple cycle.
                            std::array<RatPoint, 4> q = {pts[i], pts[j], pts[l], pts[h]};
                            static const int perms[3][4] = {
                                {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
                            for (const auto& pm : perms) {
                                std::vector<RatPoint> ring = {q[pm[0]], q[pm[1]], q[pm[2]],
                                                              q[pm[3]]};
                                bool convex = true;
                                int want = 0;
                                for (int v = 0; v < 4 && convex; ++v) {
                                    int o = orient(ring[v], ring[(v + 1) % 4],
                                                   ring[(v + 2) % 4]);
                                    if (o == 0) convex = false;
                                    else if (want == 0) want = o;
                                    else if (o != want) convex = false;
                                }
                                if (convex) {
                                    add(make_cell(ring, {}, S));
                                    break;
                                }
                            }
                        }
        }
    }

    std::vector<Cell> out;
    out.reserve(by_key.size());
    for (auto& [key, c] : by_key) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), area_less);
    return out;
}

namespace {

// Exact-cover backtracking over catalog cells contained in Q.
void catalog_partitions(const Cell& Q, const std::vector<Cell>& catalog,
                        const std::vector<Point>& S, int k, std::vector<Partition>& out) {
    long total = (long)Q.contained_points.size();
    long limit = two_thirds_limit(total);
    std::vector<const Cell*> cand;
    for (const Cell& c : catalog) {
        if (c.key == Q.key) continue;
        if (cmp(cell_area(c), cell_area(Q)) >= 0) continue;
        if ((long)c.contained_points.size() > limit) continue;
        if (cell_contains(Q, c)) cand.push_back(&c);
    }
    std::sort(cand.begin(), cand.end(),
              [](const Cell* a, const Cell* b) { return a->key < b->key; });

    std::vector<const Cell*> chosen;
    Rat target = cell_area(Q);
    std::function<void(size_t, Rat)> rec = [&](size_t from, Rat remaining) {
        if (remaining == 0) {
            if (chosen.size() >= 2) {
                Partition p;
                for (const Cell* c : chosen) p.parts.push_back(*c);
                out.push_back(std::move(p));
            }
            return;
        }
        if ((int)chosen.size() >= k) return;
        for (size_t i = from; i < cand.size(); ++i) {
            Rat a = cell_area(*cand[i]);
            if (cmp(a, remaining) > 0) continue;
            bool ok = true;
            for (const Cell* c : chosen) {
                if (!interiors_disjoint(*c, *cand[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(cand[i]);
            rec(i + 1, remaining - a);
            chosen.pop_back();
        }
    };
    rec(0, target);
}

// Chord splits of a convex cell: both endpoints at DP points on the boundary,
// chord interior strictly inside.
void binary_cut_partitions(const Cell& Q, const std::vector<Point>& S, int k,
                           const DPPointSet& dps, std::vector<Partition>& out) {
    if (!Q.holes.empty()) throw InvalidInput("binary cut: cells with holes unsupported");
    std::vector<RatPoint> bpts = Q.outer;
    for (const auto& p : dps.basic) {
        if (point_in_polygon(p, Q) == Region::Boundary) bpts.push_back(p);
    }
    std::sort(bpts.begin(), bpts.end());
    bpts.erase(std::unique(bpts.begin(), bpts.end()), bpts.end());

    long total = (long)Q.contained_points.size();
    long limit = two_thirds_limit(total);
    Rat qarea = cell_area(Q);

    std::set<std::pair<std::string, std::string>> seen;
    for (size_t i = 0; i < bpts.size(); ++i) {
        for (size_t j = i + 1; j < bpts.size(); ++j) {
            const RatPoint& p = bpts[i];
            const RatPoint& q = bpts[j];
            RatPoint mid((p.x + q.x) / 2, (p.y + q.y) / 2);
            if (point_in_polygon(mid, Q) != Region::Interior) continue;

            // Augmented boundary walk with p and q inserted on their edges.
            std::vector<RatPoint> aug;
            size_t m = Q.outer.size();
            for (size_t v = 0; v < m; ++v) {
                aug.push_back(Q.outer[v]);
                Segment e(Q.outer[v], Q.outer[(v + 1) % m]);
                std::vector<RatPoint> ins;
                for (const RatPoint* cp : {&p, &q}) {
                    if (*cp != e.a && *cp != e.b && on_closed_segment(*cp, e))
                        ins.push_back(*cp);
                }
                if (ins.size() == 2) {
                    // Order along the edge.
                    Rat t0 = cmp(e.a.x, e.b.x) != 0 ? (ins[0].x - e.a.x) / (e.b.x - e.a.x)
                                                    : (ins[0].y - e.a.y) / (e.b.y - e.a.y);
                    Rat t1 = cmp(e.a.x, e.b.x) != 0 ? (ins[1].x - e.a.x) / (e.b.x - e.a.x)
                                                    : (ins[1].y - e.a.y) / (e.b.y - e.a.y);
                    if (cmp(t0, t1) > 0) std::swap(ins[0], ins[1]);
                }
                for (auto& x : ins) aug.push_back(x);
            }
            auto ip = std::find(aug.begin(), aug.end(), p) - aug.begin();
            auto iq = std::find(aug.begin(), aug.end(), q) - aug.begin();
            if (ip == (long)aug.size() || iq == (long)aug.size()) continue;
            size_t a0 = std::min<size_t>(ip, iq), a1 = std::max<size_t>(ip, iq);
            std::vector<RatPoint> ring1(aug.begin() + a0, aug.begin() + a1 + 1);
            std::vector<RatPoint> ring2(aug.begin() + a1, aug.end());
            ring2.insert(ring2.end(), aug.begin(), aug.begin() + a0 + 1);
            if (ring1.size() < 3 || ring2.size() < 3) continue;

            Cell c1, c2;
            try {
                c1 = make_cell(ring1, {}, S);
                c2 = make_cell(ring2, {}, S);
            } catch (const InvalidInput&) {
                continue;
            }
            if ((int)c1.outer.size() > k || (int)c2.outer.size() > k) continue;
            if ((long)c1.contained_points.size() > limit) continue;
            if ((long)c2.contained_points.size() > limit) continue;
            if (cell_area(c1) + cell_area(c2) != qarea)
                throw InternalError("binary cut: area mismatch");
            auto keypair = std::minmax(c1.key, c2.key);
            if (!seen.insert({keypair.first, keypair.second}).second) continue;
            Partition part;
            if (c1.key <= c2.key) {
                part.parts = {std::move(c1), std::move(c2)};
            } else {
                part.parts = {std::move(c2), std::move(c1)};
            }
            out.push_back(std::move(part));
        }
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(const Cell& Q, const std::vector<Cell>& catalog,
                                            const std::vector<Point>& S, int k,
                                            CellFamily family, const DPPointSet& dps) {
    std::vector<Partition> out;
    if (family == CellFamily::BinaryCut) {
        binary_cut_partitions(Q, S, k, dps, out);
    } else {
        catalog_partitions(Q, catalog, S, k, out);
    }
    return out;
}

} // namespace tricount
