#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "tricount/io.hpp"

using namespace tricount;

TEST_CASE("text parsing with comments and blank lines") {
    auto S = parse_points("# header\n0 0\n\n3 -4   \n# tail\n-1 7\n");
    REQUIRE(S.size() == 3);
    CHECK(S[0] == Point{0, 0});
    CHECK(S[1] == Point{3, -4});
    CHECK(S[2] == Point{-1, 7});
}

TEST_CASE("json array parsing") {
    auto S = parse_points("[[0,0],[3,-4],[-1,7]]");
    REQUIRE(S.size() == 3);
    CHECK(S[1] == Point{3, -4});
    auto S2 = parse_points("{\"points\": [[1,2],[3,4]]}");
    CHECK(S2.size() == 2);
}

TEST_CASE("format/parse round trip") {
    auto S = generate_points(GenKind::Random, 12, 42);
    CHECK(parse_points(format_points(S)) == S);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_points("1 2\n3\n"), InvalidInput);
    CHECK_THROWS_AS(parse_points("1 2\n1 2\n"), InvalidInput); // duplicate
    CHECK_THROWS_AS(parse_points("a b\n"), InvalidInput);
    CHECK_THROWS_AS(parse_points("[[1,2],[1]]"), InvalidInput);
    CHECK_THROWS_AS(parse_points("[[1,2],"), InvalidInput);
    CHECK_THROWS_AS(parse_points("1 2 3\n"), InvalidInput);
}

TEST_CASE("generators are deterministic and well formed") {
    for (auto kind : {GenKind::Convex, GenKind::Grid, GenKind::Random}) {
        auto a = generate_points(kind, 10, 7);
        auto b = generate_points(kind, 10, 7);
        CHECK(a == b);
        CHECK(a.size() == 10);
        CHECK(std::set<Point>(a.begin(), a.end()).size() == 10);
    }
    CHECK(generate_points(GenKind::Random, 10, 7) != generate_points(GenKind::Random, 10, 8));
}

TEST_CASE("convex generator yields strictly convex position") {
    auto S = generate_points(GenKind::Convex, 9, 3);
    // Every triple has nonzero orientation and the hull uses all points.
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            for (size_t k = j + 1; k < S.size(); ++k)
                CHECK(orient(S[i], S[j], S[k]) != 0);
}

TEST_CASE("random generator never returns a fully collinear set") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        auto S = generate_points(GenKind::Random, 4, seed);
        bool noncollinear = false;
        for (size_t k = 2; k < S.size() && !noncollinear; ++k)
            noncollinear = orient(S[0], S[1], S[k]) != 0;
        CHECK(noncollinear);
    }
}

TEST_CASE("gen kind parsing") {
    CHECK(parse_gen_kind("convex") == GenKind::Convex);
    CHECK(parse_gen_kind("grid") == GenKind::Grid);
    CHECK(parse_gen_kind("random") == GenKind::Random);
    CHECK_THROWS_AS(parse_gen_kind("banana"), InvalidInput);
}

TEST_CASE("count table json is valid and carries the root") {
    auto S = generate_points(GenKind::Convex, 6, 0);
    DPConfig cfg;
    auto res = approx_count(S, cfg);
    auto j = nlohmann::json::parse(count_table_to_json(res.table));
    REQUIRE(j.is_array());
    bool found = false;
    for (const auto& c : j)
        if (c["root"].get<bool>()) {
            found = true;
            CHECK(c["tr"] == res.count.get_str());
            CHECK(c["provenance"] == "base_case");
        }
    CHECK(found);
}
