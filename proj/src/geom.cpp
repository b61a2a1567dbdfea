#include "tricount/geom.hpp"

#include <algorithm>

namespace tricount {

int orient(const RatPoint& p, const RatPoint& q, const RatPoint& r) {
    Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

int orient(const Point& p, const Point& q, const Point& r) {
    // Fast path: differences bounded by 32 bits keep the cross product inside
    // a signed 128-bit integer.
    if (p.x.fits_sint_p() && p.y.fits_sint_p() && q.x.fits_sint_p() && q.y.fits_sint_p() &&
        r.x.fits_sint_p() && r.y.fits_sint_p()) {
        long ax = q.x.get_si() - p.x.get_si();
        long ay = q.y.get_si() - p.y.get_si();
        long bx = r.x.get_si() - p.x.get_si();
        long by = r.y.get_si() - p.y.get_si();
        __int128 cross = (__int128)ax * by - (__int128)ay * bx;
        return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
    }
    BigInt cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

bool on_closed_segment(const RatPoint& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    // Collinear: check the dominant coordinate range.
    if (s.a.x != s.b.x) {
        return (cmp(std::min(s.a.x, s.b.x), p.x) <= 0) && (cmp(p.x, std::max(s.a.x, s.b.x)) <= 0);
    }
    return (cmp(std::min(s.a.y, s.b.y), p.y) <= 0) && (cmp(p.y, std::max(s.a.y, s.b.y)) <= 0);
}

namespace {

// 0 = off the line, 1 = coincides with an endpoint, 2 = in the relative interior.
int on_segment_kind(const RatPoint& p, const Segment& s) {
    if (p == s.a || p == s.b) return 1;
    return on_closed_segment(p, s) ? 2 : 0;
}

// Parameter of collinear point p on s.
Rat param_of(const RatPoint& p, const Segment& s) {
    if (s.a.x != s.b.x) return (p.x - s.a.x) / (s.b.x - s.a.x);
    return (p.y - s.a.y) / (s.b.y - s.a.y);
}

} // namespace

CrossKind segments_cross(const Segment& s1, const Segment& s2) {
    int d1 = orient(s1.a, s1.b, s2.a);
    int d2 = orient(s1.a, s1.b, s2.b);
    int d3 = orient(s2.a, s2.b, s1.a);
    int d4 = orient(s2.a, s2.b, s1.b);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Same supporting line; compare parameter intervals on s1.
        Rat t0 = param_of(s2.a, s1);
        Rat t1 = param_of(s2.b, s1);
        if (cmp(t0, t1) > 0) swap(t0, t1);
        Rat lo = std::max(Rat(0), t0);
        Rat hi = std::min(Rat(1), t1);
        int c = cmp(lo, hi);
        if (c > 0) return CrossKind::Disjoint;
        if (c < 0) return CrossKind::OverlapOrTouchInterior;
        return CrossKind::ShareEndpointOnly; // single shared point is an endpoint of both
    }

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return CrossKind::ProperCross;

    // Non-collinear contact, if any, is a single point.
    int k1 = on_segment_kind(s2.a, s1);
    int k2 = on_segment_kind(s2.b, s1);
    int k3 = on_segment_kind(s1.a, s2);
    int k4 = on_segment_kind(s1.b, s2);
    if (k1 == 2 || k2 == 2 || k3 == 2 || k4 == 2) return CrossKind::OverlapOrTouchInterior;
    if (k1 == 1 || k2 == 1 || k3 == 1 || k4 == 1) return CrossKind::ShareEndpointOnly;
    return CrossKind::Disjoint;
}

Region point_in_triangle(const RatPoint& p, const RatPoint& a, const RatPoint& b,
                         const RatPoint& c) {
    if (orient(a, b, c) == 0) throw DegenerateTriangle("point_in_triangle: collinear corners");
    int s1 = orient(a, b, p);
    int s2 = orient(b, c, p);
    int s3 = orient(c, a, p);
    if ((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0) || (s1 > 0 && s3 < 0) || (s1 < 0 && s3 > 0) ||
        (s2 > 0 && s3 < 0) || (s2 < 0 && s3 > 0))
        return Region::Outside;
    if (s1 != 0 && s2 != 0 && s3 != 0) return Region::Interior;
    return Region::Boundary;
}

std::vector<Rat> seg_intersection_params(const Segment& s, const Segment& e) {
    std::vector<Rat> out;
    int d1 = orient(s.a, s.b, e.a);
    int d2 = orient(s.a, s.b, e.b);
    int d3 = orient(e.a, e.b, s.a);
    int d4 = orient(e.a, e.b, s.b);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        Rat t0 = param_of(e.a, s);
        Rat t1 = param_of(e.b, s);
        if (cmp(t0, t1) > 0) swap(t0, t1);
        Rat lo = std::max(Rat(0), t0);
        Rat hi = std::min(Rat(1), t1);
        if (cmp(lo, hi) <= 0) {
            out.push_back(lo);
            if (lo != hi) out.push_back(hi);
        }
        return out;
    }

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        // Proper crossing: solve s.a + t*(s.b - s.a) on e's line.
        Rat ex = e.b.x - e.a.x, ey = e.b.y - e.a.y;
        Rat sx = s.b.x - s.a.x, sy = s.b.y - s.a.y;
        Rat denom = sx * ey - sy * ex;
        Rat t = ((e.a.x - s.a.x) * ey - (e.a.y - s.a.y) * ex) / denom;
        out.push_back(t);
        return out;
    }

    // Touching cases: single contact point at an endpoint of one segment.
    if (on_closed_segment(e.a, s)) out.push_back(param_of(e.a, s));
    if (on_closed_segment(e.b, s)) out.push_back(param_of(e.b, s));
    if (on_closed_segment(s.a, e)) out.push_back(Rat(0));
    if (on_closed_segment(s.b, e)) out.push_back(Rat(1));
    std::sort(out.begin(), out.end(), [](const Rat& a, const Rat& b) { return cmp(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RatPoint point_on_segment(const Segment& s, const Rat& t) {
    return RatPoint(s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y));
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

std::string ratpoint_to_string(const RatPoint& p) {
    return p.x.get_str() + "," + p.y.get_str();
}

} // namespace tricount
