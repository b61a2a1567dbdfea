#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tricount/cut_toolkit.hpp"
#include "tricount/exact_counter.hpp"
#include "tricount/io.hpp"

using namespace tricount;

namespace {

WeightedTriangle wt(long ax, long ay, long bx, long by, long cx, long cy, Rat w = Rat(1)) {
    return WeightedTriangle{{RatPoint(ax, ay), RatPoint(bx, by), RatPoint(cx, cy)}, w};
}

// Three unit triangles in a row, far enough apart not to touch.
std::vector<WeightedTriangle> three_in_a_row() {
    return {wt(0, 0, 1, 0, 0, 1), wt(4, 0, 5, 0, 4, 1), wt(8, 0, 9, 0, 8, 1)};
}

CutPolygon box_around_middle() {
    return CutPolygon{{RatPoint(3, -1), RatPoint(6, -1), RatPoint(6, 2), RatPoint(3, 2)}};
}

std::vector<WeightedTriangle> faces_of(const std::vector<Point>& S) {
    auto t = initial_triangulation(S);
    // Triangles with all three edges present and no point inside are faces.
    std::vector<WeightedTriangle> out;
    std::set<Edge> es(t.begin(), t.end());
    int n = (int)S.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!es.count({i, j}) || !es.count({j, k}) || !es.count({i, k})) continue;
                if (orient(S[i], S[j], S[k]) == 0) continue;
                bool face = true;
                for (int m = 0; m < n && face; ++m) {
                    if (m == i || m == j || m == k) continue;
                    if (point_in_triangle(RatPoint(S[m]), RatPoint(S[i]), RatPoint(S[j]),
                                          RatPoint(S[k])) != Region::Outside)
                        face = false;
                }
                if (face)
                    out.push_back(WeightedTriangle{
                        {RatPoint(S[i]), RatPoint(S[j]), RatPoint(S[k])}, Rat(1)});
            }
    return out;
}

} // namespace

TEST_CASE("verify_cut: box around the middle triangle") {
    auto rep = verify_cut(box_around_middle(), three_in_a_row(), Rat(1, 3), 4);
    CHECK(rep.destroyed_weight == 0);
    CHECK(rep.inside_weight == Rat(1, 3));
    CHECK(rep.outside_weight == Rat(2, 3));
    CHECK(rep.verdict);
}

TEST_CASE("verify_cut: crossing two of three fails the alpha clause") {
    // A long skinny box whose boundary slices through the first two triangles.
    CutPolygon cut{{RatPoint(Rat(1, 2), Rat(-1, 2)), RatPoint(Rat(9, 2), Rat(-1, 2)),
                    RatPoint(Rat(9, 2), Rat(1, 2)), RatPoint(Rat(1, 2), Rat(1, 2))}};
    auto rep = verify_cut(cut, three_in_a_row(), Rat(1, 3), 4);
    CHECK(rep.destroyed_weight == Rat(2, 3));
    CHECK_FALSE(rep.destroyed_ok);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("verify_cut: containing everything fails the inside clause") {
    CutPolygon cut{{RatPoint(-1, -1), RatPoint(10, -1), RatPoint(10, 2), RatPoint(-1, 2)}};
    auto rep = verify_cut(cut, three_in_a_row(), Rat(1, 3), 4);
    CHECK(rep.inside_weight == 1);
    CHECK_FALSE(rep.inside_ok);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("verify_cut: cut off to the side fails the outside clause") {
    CutPolygon cut{{RatPoint(20, 20), RatPoint(21, 20), RatPoint(21, 21), RatPoint(20, 21)}};
    auto rep = verify_cut(cut, three_in_a_row(), Rat(1, 3), 4);
    CHECK(rep.outside_weight == 1);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("verify_cut: edge budget clause") {
    auto rep = verify_cut(box_around_middle(), three_in_a_row(), Rat(1, 3), 3);
    CHECK_FALSE(rep.within_edge_budget);
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("verify_cut: weight classes partition the total exactly") {
    for (const auto& cut : {box_around_middle(),
                            CutPolygon{{RatPoint(-1, -1), RatPoint(2, -1), RatPoint(2, 2),
                                        RatPoint(-1, 2)}}}) {
        auto rep = verify_cut(cut, three_in_a_row(), Rat(1, 2), 4);
        CHECK(rep.destroyed_weight + rep.inside_weight + rep.outside_weight == 1);
    }
}

TEST_CASE("verify_cut: verdict invariant under weight scaling") {
    auto T = three_in_a_row();
    auto rep1 = verify_cut(box_around_middle(), T, Rat(1, 3), 4);
    for (auto& t : T) t.weight *= 17;
    auto rep2 = verify_cut(box_around_middle(), T, Rat(1, 3), 4);
    CHECK(rep1.verdict == rep2.verdict);
    CHECK(rep1.inside_weight == rep2.inside_weight);
}

TEST_CASE("verify_cut rejects overlapping triangles") {
    std::vector<WeightedTriangle> bad = {wt(0, 0, 4, 0, 0, 4), wt(1, 1, 5, 1, 1, 5),
                                         wt(10, 10, 11, 10, 10, 11)};
    CHECK_THROWS_AS(verify_cut(box_around_middle(), bad, Rat(1, 2), 4), InvalidInput);
}

TEST_CASE("search_cut: one-third hypothesis enforced") {
    std::vector<WeightedTriangle> one = {wt(0, 0, 1, 0, 0, 1)};
    CHECK_THROWS_AS(search_cut(one, Rat(1, 2), 4, CutCandidateFamily::AxisRectangles),
                    InvalidInput);
}

TEST_CASE("search_cut finds the box-around-one cut for three triangles") {
    auto found = search_cut(three_in_a_row(), Rat(1, 3), 4, CutCandidateFamily::AxisRectangles);
    REQUIRE(found.has_value());
    auto rep = verify_cut(*found, three_in_a_row(), Rat(1, 3), 4);
    CHECK(rep.verdict);
}

TEST_CASE("search_cut on triangulation faces of 9 random points") {
    auto S = generate_points(GenKind::Random, 9, 2);
    auto T = faces_of(S);
    REQUIRE(T.size() >= 3);
    auto found = search_cut(T, Rat(1, 2), 4, CutCandidateFamily::AxisRectangles);
    REQUIRE(found.has_value());
    CHECK(verify_cut(*found, T, Rat(1, 2), 4).verdict);
}
