#include "tricount/cell.hpp"

#include <algorithm>

namespace tricount {

Rat ring_signed_area2(const std::vector<RatPoint>& ring) {
    Rat acc = 0;
    size_t m = ring.size();
    for (size_t i = 0; i < m; ++i) {
        const RatPoint& p = ring[i];
        const RatPoint& q = ring[(i + 1) % m];
        acc += p.x * q.y - q.x * p.y;
    }
    return acc;
}

Rat cell_area(const Cell& c) {
    Rat a = abs(ring_signed_area2(c.outer));
    for (const auto& h : c.holes) a -= abs(ring_signed_area2(h));
    a /= 2;
    return a;
}

namespace {

std::string canonical_ring_string(std::vector<RatPoint> ring) {
    if (ring_signed_area2(ring) < 0) std::reverse(ring.begin(), ring.end());
    auto it = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), it, ring.end());
    std::string s;
    for (const auto& p : ring) {
        s += ratpoint_to_string(p);
        s += ";";
    }
    return s;
}

void check_ring_simple(const std::vector<RatPoint>& ring, const char* what) {
    size_t m = ring.size();
    if (m < 3) throw InvalidInput(std::string(what) + ": ring needs at least 3 vertices");
    if (ring_signed_area2(ring) == 0)
        throw InvalidInput(std::string(what) + ": ring has zero area");
    for (size_t i = 0; i < m; ++i) {
        if (ring[i] == ring[(i + 1) % m])
            throw InvalidInput(std::string(what) + ": repeated consecutive vertex");
    }
    for (size_t i = 0; i < m; ++i) {
        Segment ei(ring[i], ring[(i + 1) % m]);
        for (size_t j = i + 1; j < m; ++j) {
            Segment ej(ring[j], ring[(j + 1) % m]);
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            CrossKind ck = segments_cross(ei, ej);
            if (adjacent) {
                if (ck != CrossKind::ShareEndpointOnly)
                    throw InvalidInput(std::string(what) + ": adjacent edges fold back");
            } else if (ck != CrossKind::Disjoint) {
                throw InvalidInput(std::string(what) + ": ring self-intersects");
            }
        }
    }
}

} // namespace

std::string cell_key(const std::vector<RatPoint>& outer,
                     const std::vector<std::vector<RatPoint>>& holes) {
    std::string s = canonical_ring_string(outer);
    std::vector<std::string> hs;
    hs.reserve(holes.size());
    for (const auto& h : holes) hs.push_back(canonical_ring_string(h));
    std::sort(hs.begin(), hs.end());
    for (const auto& h : hs) {
        s += "#";
        s += h;
    }
    return s;
}

Cell make_cell(std::vector<RatPoint> outer, std::vector<std::vector<RatPoint>> holes,
               const std::vector<Point>& S) {
    check_ring_simple(outer, "outer");
    if (ring_signed_area2(outer) < 0) std::reverse(outer.begin(), outer.end());
    for (auto& h : holes) {
        check_ring_simple(h, "hole");
        if (ring_signed_area2(h) > 0) std::reverse(h.begin(), h.end());
    }
    Cell c;
    c.outer = std::move(outer);
    c.holes = std::move(holes);
    c.key = cell_key(c.outer, c.holes);
    for (size_t i = 0; i < S.size(); ++i) {
        if (point_in_polygon(RatPoint(S[i]), c) != Region::Outside)
            c.contained_points.push_back((int)i);
    }
    return c;
}

std::vector<Segment> cell_edges(const Cell& c) {
    std::vector<Segment> out;
    auto add_ring = [&](const std::vector<RatPoint>& ring) {
        size_t m = ring.size();
        for (size_t i = 0; i < m; ++i) out.emplace_back(ring[i], ring[(i + 1) % m]);
    };
    add_ring(c.outer);
    for (const auto& h : c.holes) add_ring(h);
    return out;
}

Region point_in_polygon(const RatPoint& p, const Cell& c) {
    auto ring_boundary = [&](const std::vector<RatPoint>& ring) {
        size_t m = ring.size();
        for (size_t i = 0; i < m; ++i) {
            if (on_closed_segment(p, Segment(ring[i], ring[(i + 1) % m]))) return true;
        }
        return false;
    };
    if (ring_boundary(c.outer)) return Region::Boundary;
    for (const auto& h : c.holes)
        if (ring_boundary(h)) return Region::Boundary;

    // Even-odd ray cast to +x over all rings; the half-open vertex rule keeps
    // the count exact with no epsilon handling.
    long crossings = 0;
    auto ring_cast = [&](const std::vector<RatPoint>& ring) {
        size_t m = ring.size();
        for (size_t i = 0; i < m; ++i) {
            const RatPoint& a = ring[i];
            const RatPoint& b = ring[(i + 1) % m];
            bool above_a = cmp(a.y, p.y) > 0;
            bool above_b = cmp(b.y, p.y) > 0;
            if (above_a == above_b) continue;
            Rat xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (cmp(xint, p.x) > 0) ++crossings;
        }
    };
    ring_cast(c.outer);
    for (const auto& h : c.holes) ring_cast(h);
    return (crossings % 2 == 1) ? Region::Interior : Region::Outside;
}

namespace {

// Parameters splitting s at every contact with the cell boundary.
std::vector<Rat> boundary_events(const Segment& s, const Cell& c) {
    std::vector<Rat> events;
    events.push_back(Rat(0));
    events.push_back(Rat(1));
    for (const auto& e : cell_edges(c)) {
        for (auto& t : seg_intersection_params(s, e)) {
            if (cmp(t, 0) > 0 && cmp(t, 1) < 0) events.push_back(t);
        }
    }
    std::sort(events.begin(), events.end(), [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; });
    events.erase(std::unique(events.begin(), events.end()), events.end());
    return events;
}

// True iff no point of the closed segment lies in the cell's interior.
bool segment_avoids_interior(const Segment& s, const Cell& c) {
    auto events = boundary_events(s, c);
    for (size_t i = 0; i + 1 < events.size(); ++i) {
        Rat mid = (events[i] + events[i + 1]) / 2;
        if (point_in_polygon(point_on_segment(s, mid), c) == Region::Interior) return false;
    }
    if (point_in_polygon(s.a, c) == Region::Interior) return false;
    if (point_in_polygon(s.b, c) == Region::Interior) return false;
    return true;
}

} // namespace

bool segment_in_cell(const Segment& s, const Cell& c) {
    if (point_in_polygon(s.a, c) == Region::Outside) return false;
    if (point_in_polygon(s.b, c) == Region::Outside) return false;
    auto events = boundary_events(s, c);
    for (size_t i = 0; i + 1 < events.size(); ++i) {
        Rat mid = (events[i] + events[i + 1]) / 2;
        if (point_in_polygon(point_on_segment(s, mid), c) == Region::Outside) return false;
    }
    return true;
}

RatPoint interior_sample(const Cell& c) {
    size_t m = c.outer.size();
    // Ear centroids first, then midpoints of vertex pairs.
    for (size_t i = 0; i < m; ++i) {
        const RatPoint& u = c.outer[(i + m - 1) % m];
        const RatPoint& v = c.outer[i];
        const RatPoint& w = c.outer[(i + 1) % m];
        if (orient(u, v, w) <= 0) continue;
        RatPoint cand((u.x + v.x + w.x) / 3, (u.y + v.y + w.y) / 3);
        if (point_in_polygon(cand, c) == Region::Interior) return cand;
    }
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            RatPoint cand((c.outer[i].x + c.outer[j].x) / 2, (c.outer[i].y + c.outer[j].y) / 2);
            if (point_in_polygon(cand, c) == Region::Interior) return cand;
        }
    }
    throw InternalError("interior_sample: no interior point found");
}

bool interiors_disjoint(const Cell& a, const Cell& b) {
    for (const auto& e : cell_edges(a))
        if (!segment_avoids_interior(e, b)) return false;
    for (const auto& e : cell_edges(b))
        if (!segment_avoids_interior(e, a)) return false;
    if (point_in_polygon(interior_sample(a), b) == Region::Interior) return false;
    if (point_in_polygon(interior_sample(b), a) == Region::Interior) return false;
    return true;
}

bool cell_contains(const Cell& a, const Cell& b) {
    for (const auto& ring : b.holes)
        for (const auto& v : ring)
            if (point_in_polygon(v, a) == Region::Outside) return false;
    for (const auto& v : b.outer)
        if (point_in_polygon(v, a) == Region::Outside) return false;
    for (const auto& e : cell_edges(b))
        if (!segment_in_cell(e, a)) return false;
    if (point_in_polygon(interior_sample(b), a) == Region::Outside) return false;
    // The interior of b must not leak out through a's boundary.
    for (const auto& e : cell_edges(a))
        if (!segment_avoids_interior(e, b)) return false;
    return true;
}

} // namespace tricount
