#include "tricount/exact_counter.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <map>
#include <set>

namespace tricount {

BigInt catalan(unsigned m) {
    std::vector<BigInt> c(m + 1);
    c[0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
        BigInt acc = 0;
        for (unsigned i = 0; i < k; ++i) acc += c[i] * c[k - 1 - i];
        c[k] = acc;
    }
    return c[m];
}

namespace {

// p strictly between a and b on the same line?
bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    if (p == a || p == b) return false;
    int cx = cmp(a.x, b.x);
    if (cx != 0) {
        return (cmp(std::min(a.x, b.x), p.x) < 0) && (cmp(p.x, std::max(a.x, b.x)) < 0);
    }
    return (cmp(std::min(a.y, b.y), p.y) < 0) && (cmp(p.y, std::max(a.y, b.y)) < 0);
}

bool on_closed_segment_int(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return cmp(std::min(a.x, b.x), p.x) <= 0 && cmp(p.x, std::max(a.x, b.x)) <= 0 &&
           cmp(std::min(a.y, b.y), p.y) <= 0 && cmp(p.y, std::max(a.y, b.y)) <= 0;
}

// Candidate edge: its open interior contains no other point of S.
std::vector<Edge> candidate_edges(const std::vector<Point>& S) {
    int n = (int)S.size();
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool ok = true;
            for (int m = 0; m < n && ok; ++m) {
                if (m == i || m == j) continue;
                if (strictly_inside_segment(S[m], S[i], S[j])) ok = false;
            }
            if (ok) out.emplace_back(i, j);
        }
    }
    return out;
}

// Candidate edges sharing an endpoint are always compatible (a collinear
// overlap would put a third point inside one of them).
bool edges_compatible(const std::vector<Point>& S, const Edge& e, const Edge& f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        return true;
    const Point& a = S[e.first];
    const Point& b = S[e.second];
    const Point& c = S[f.first];
    const Point& d = S[f.second];
    int d1 = orient(a, b, c);
    int d2 = orient(a, b, d);
    int d3 = orient(c, d, a);
    int d4 = orient(c, d, b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return false;
    if (on_closed_segment_int(c, a, b) || on_closed_segment_int(d, a, b) ||
        on_closed_segment_int(a, c, d) || on_closed_segment_int(b, c, d))
        return false;
    return true;
}

bool all_collinear(const std::vector<Point>& S) {
    for (size_t i = 2; i < S.size(); ++i)
        if (orient(S[0], S[1], S[i]) != 0) return false;
    return S.size() >= 2;
}

bool triangle_is_face(const std::vector<Point>& S, int a, int b, int c) {
    if (orient(S[a], S[b], S[c]) == 0) return false;
    RatPoint ra(S[a]), rb(S[b]), rc(S[c]);
    for (int m = 0; m < (int)S.size(); ++m) {
        if (m == a || m == b || m == c) continue;
        if (point_in_triangle(RatPoint(S[m]), ra, rb, rc) != Region::Outside) return false;
    }
    return true;
}

void check_input(const std::vector<Point>& S) {
    if (S.size() < 3) throw InvalidInput("need at least 3 points");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : S)
        if (!seen.insert({p.x.get_str(), p.y.get_str()}).second)
            throw InvalidInput("duplicate points");
}

} // namespace

std::vector<Edge> initial_triangulation(const std::vector<Point>& S) {
    check_input(S);
    if (all_collinear(S)) throw NoTriangulation("all points collinear");
    std::vector<Edge> chosen;
    for (const Edge& e : candidate_edges(S)) {
        bool ok = true;
        for (const Edge& f : chosen) {
            if (!edges_compatible(S, e, f)) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(e);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<std::vector<Edge>> flips(const std::vector<Edge>& t, const std::vector<Point>& S) {
    int n = (int)S.size();
    std::vector<std::vector<int>> adj(n);
    std::set<Edge> in_t(t.begin(), t.end());
    for (const Edge& e : t) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::vector<std::vector<Edge>> out;
    for (const Edge& e : t) {
        int a = e.first, b = e.second;
        std::vector<int> opp;
        for (int c : adj[a]) {
            if (c == b) continue;
            if (!in_t.count({std::min(b, c), std::max(b, c)})) continue;
            if (triangle_is_face(S, a, b, c)) opp.push_back(c);
        }
        if (opp.size() != 2) continue;
        int c = opp[0], d = opp[1];
        // The quadrilateral is convex exactly when the diagonals cross.
        int d1 = orient(S[c], S[d], S[a]);
        int d2 = orient(S[c], S[d], S[b]);
        int d3 = orient(S[a], S[b], S[c]);
        int d4 = orient(S[a], S[b], S[d]);
        if (!(((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
              ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))))
            continue;
        std::vector<Edge> nt;
        nt.reserve(t.size());
        for (const Edge& f : t)
            if (f != e) nt.push_back(f);
        nt.emplace_back(std::min(c, d), std::max(c, d));
        std::sort(nt.begin(), nt.end());
        out.push_back(std::move(nt));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void enumerate_triangulations(const std::vector<Point>& S,
                              const std::function<void(const std::vector<Edge>&)>& cb,
                              unsigned long cap, const std::vector<Edge>* seed) {
    std::vector<Edge> start = seed ? *seed : initial_triangulation(S);
    std::set<std::vector<Edge>> visited;
    std::deque<std::vector<Edge>> frontier;
    visited.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        std::vector<Edge> cur = std::move(frontier.front());
        frontier.pop_front();
        cb(cur);
        for (auto& nb : flips(cur, S)) {
            if (visited.size() >= cap && !visited.count(nb))
                throw CapacityExceeded("triangulation cap exceeded");
            if (visited.insert(nb).second) frontier.push_back(nb);
        }
    }
}

BigInt count_triangulations(const std::vector<Point>& S, unsigned long cap) {
    BigInt count = 0;
    enumerate_triangulations(S, [&](const std::vector<Edge>&) { count += 1; }, cap);
    return count;
}

namespace {

using Bits = std::bitset<128>;

void bron_kerbosch(const std::vector<Bits>& nbr, Bits P, Bits X, BigInt& count) {
    if (P.none() && X.none()) {
        count += 1;
        return;
    }
    // Pivot: vertex of P|X with the most neighbors in P.
    Bits PX = P | X;
    int pivot = -1;
    size_t best = 0;
    for (int v = 0; v < (int)nbr.size(); ++v) {
        if (!PX[v]) continue;
        size_t deg = (P & nbr[v]).count();
        if (pivot < 0 || deg > best) {
            pivot = v;
            best = deg;
        }
    }
    Bits ext = P & ~nbr[pivot];
    for (int v = 0; v < (int)nbr.size(); ++v) {
        if (!ext[v]) continue;
        bron_kerbosch(nbr, P & nbr[v], X & nbr[v], count);
        P.reset(v);
        X.set(v);
    }
}

} // namespace

BigInt brute_force_oracle(const std::vector<Point>& S) {
    check_input(S);
    if (S.size() > 12) throw CapacityExceeded("brute_force_oracle: more than 12 points");
    auto cand = candidate_edges(S);
    size_t m = cand.size();
    if (m > 128) throw CapacityExceeded("brute_force_oracle: candidate edge overflow");
    std::vector<Bits> nbr(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (edges_compatible(S, cand[i], cand[j])) {
                nbr[i].set(j);
                nbr[j].set(i);
            }
        }
    }
    Bits P;
    for (size_t i = 0; i < m; ++i) P.set(i);
    BigInt count = 0;
    bron_kerbosch(nbr, P, Bits(), count);
    return count;
}

int hull_point_count(const std::vector<Point>& S) {
    if (all_collinear(S)) return (int)S.size();
    std::vector<Point> pts = S;
    std::sort(pts.begin(), pts.end());
    auto build = [&](std::vector<Point>& chain, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orient(chain[chain.size() - 2], chain[chain.size() - 1], *it) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
    };
    std::vector<Point> lower, upper;
    build(lower, pts.begin(), pts.end());
    build(upper, pts.rbegin(), pts.rend());
    std::vector<RatPoint> ring;
    for (size_t i = 0; i + 1 < lower.size(); ++i) ring.emplace_back(lower[i]);
    for (size_t i = 0; i + 1 < upper.size(); ++i) ring.emplace_back(upper[i]);
    Cell hull = make_cell(ring, {}, {});
    int h = 0;
    for (const auto& p : S)
        if (point_in_polygon(RatPoint(p), hull) != Region::Interior) ++h;
    return h;
}

namespace {

bool index_edge_valid(const std::vector<Point>& S, const std::vector<int>& P, int gi, int gj) {
    for (int m : P) {
        if (m == gi || m == gj) continue;
        if (strictly_inside_segment(S[m], S[gi], S[gj])) return false;
    }
    return true;
}

bool cell_is_convex(const Cell& Q) {
    if (!Q.holes.empty()) return false;
    size_t m = Q.outer.size();
    for (size_t i = 0; i < m; ++i) {
        if (orient(Q.outer[i], Q.outer[(i + 1) % m], Q.outer[(i + 2) % m]) < 0) return false;
    }
    return true;
}

} // namespace

bool is_maximal_in_cell(const std::vector<Edge>& pt, const Cell& Q, const std::vector<Point>& S) {
    const std::vector<int>& P = Q.contained_points;
    std::set<int> pset(P.begin(), P.end());
    std::set<Edge> in_pt(pt.begin(), pt.end());
    for (const Edge& e : pt) {
        if (!pset.count(e.first) || !pset.count(e.second))
            throw InvalidInput("is_maximal_in_cell: edge endpoint outside cell");
        if (!segment_in_cell(Segment(RatPoint(S[e.first]), RatPoint(S[e.second])), Q))
            throw InvalidInput("is_maximal_in_cell: edge not contained in cell");
    }
    for (size_t a = 0; a < P.size(); ++a) {
        for (size_t b = a + 1; b < P.size(); ++b) {
            Edge e(P[a], P[b]);
            if (in_pt.count(e)) continue;
            if (!index_edge_valid(S, P, e.first, e.second)) continue;
            bool ok = true;
            for (const Edge& f : pt) {
                if (!edges_compatible(S, e, f)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (segment_in_cell(Segment(RatPoint(S[e.first]), RatPoint(S[e.second])), Q))
                return false;
        }
    }
    return true;
}

BigInt count_maximal_in_cell(const Cell& Q, const std::vector<Point>& S, unsigned long cap) {
    const std::vector<int>& P = Q.contained_points;
    if (P.size() <= 2) return 1;
    std::vector<Point> SP;
    SP.reserve(P.size());
    for (int i : P) SP.push_back(S[i]);
    if (all_collinear(SP)) return 1;

    // Convex cell: every segment between contained points stays inside, so
    // maximal triangulations within Q are exactly the full triangulations.
    if (cell_is_convex(Q)) return count_triangulations(SP, cap);

    std::set<std::vector<Edge>> fragments;
    enumerate_triangulations(
        SP,
        [&](const std::vector<Edge>& t) {
            std::vector<Edge> frag;
            for (const Edge& e : t) {
                Segment seg{RatPoint(SP[e.first]), RatPoint(SP[e.second])};
                if (segment_in_cell(seg, Q))
                    frag.emplace_back(P[e.first], P[e.second]);
            }
            std::sort(frag.begin(), frag.end());
            if (fragments.count(frag)) return;
            if (is_maximal_in_cell(frag, Q, S)) fragments.insert(std::move(frag));
        },
        cap);
    return BigInt((unsigned long)fragments.size());
}

} // namespace tricount
