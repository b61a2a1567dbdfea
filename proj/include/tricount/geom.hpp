#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "tricount/errors.hpp"

namespace tricount {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Planar point with arbitrary-precision integer coordinates.
struct Point {
    BigInt x;
    BigInt y;

    Point() = default;
    Point(BigInt px, BigInt py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Point& a, const Point& b) {
        int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

/// Planar point with exact rational coordinates, always kept canonical
/// (lowest terms, positive denominator) so value equality is representation
/// equality and point sets deduplicate correctly.
struct RatPoint {
    Rat x;
    Rat y;

    RatPoint() = default;
    RatPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {
        x.canonicalize();
        y.canonicalize();
    }
    RatPoint(long px, long py) : x(px), y(py) {}
    explicit RatPoint(const Point& p) : x(p.x), y(p.y) {}

    friend bool operator==(const RatPoint& a, const RatPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }
    friend bool operator<(const RatPoint& a, const RatPoint& b) {
        int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

/// Closed straight-line segment with distinct rational endpoints.
struct Segment {
    RatPoint a;
    RatPoint b;

    Segment(RatPoint pa, RatPoint pb) : a(std::move(pa)), b(std::move(pb)) {
        if (a == b) throw InvalidInput("Segment endpoints must be distinct");
    }
};

/// Sign of the cross product (q-p) x (r-p): +1 counter-clockwise, 0 collinear,
/// -1 clockwise. Exact.
int orient(const RatPoint& p, const RatPoint& q, const RatPoint& r);
int orient(const Point& p, const Point& q, const Point& r);

enum class CrossKind {
    Disjoint,
    ShareEndpointOnly,
    ProperCross,
    OverlapOrTouchInterior,
};

/// Exact classification of how two segments meet. ProperCross means the
/// relative interiors intersect in a single point; OverlapOrTouchInterior
/// covers collinear overlap of positive length and any contact involving a
/// segment's relative interior (T-junctions included).
CrossKind segments_cross(const Segment& s1, const Segment& s2);

enum class Region {
    Interior,
    Boundary,
    Outside,
};

/// Exact point-vs-triangle classification via the three orientation signs.
/// Throws DegenerateTriangle when the corners are collinear.
Region point_in_triangle(const RatPoint& p, const RatPoint& a, const RatPoint& b,
                         const RatPoint& c);

/// Parameters t in [0,1] (sorted, deduplicated) at which segment s meets
/// segment e; a collinear overlap contributes its two end parameters.
std::vector<Rat> seg_intersection_params(const Segment& s, const Segment& e);

/// Point at parameter t on s, i.e. a + t*(b-a).
RatPoint point_on_segment(const Segment& s, const Rat& t);

/// True iff p lies on the closed segment s.
bool on_closed_segment(const RatPoint& p, const Segment& s);

std::string rat_to_string(const Rat& r);
std::string ratpoint_to_string(const RatPoint& p);

} // namespace tricount
