#include <doctest.h>

#include <random>

#include "bitonic/layout.hpp"
#include "bitonic/validate.hpp"
#include "fixtures.hpp"

using namespace bitonic;
using namespace bitonic::geometry;

TEST_CASE("orientation and segment predicates") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orientation({0, 0}, {1, 1}, {3, 3}) == 0);
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK(segments_intersect({0, 0}, {2, 2}, {2, 2}, {3, 5}));
    CHECK(segments_intersect({0, 0}, {2, 2}, {1, 1}, {1, 5}));
    CHECK_FALSE(segments_intersect({0, 0}, {1, 1}, {2, 2}, {3, 3}));
    CHECK_FALSE(segments_intersect({0, 0}, {0, 2}, {1, 0}, {1, 2}));
    CHECK(orientation({0, 0}, {3'000'000'000'000LL, 1}, {1, 0}) == -1);
}

TEST_CASE("pieces may share one endpoint only") {
    CHECK_FALSE(pieces_conflict({0, 0}, {1, 2}, {0, 0}, {-1, 2}));
    CHECK_FALSE(pieces_conflict({0, 0}, {1, 2}, {1, 2}, {1, 4}));
    CHECK(pieces_conflict({0, 0}, {1, 2}, {0, 0}, {1, 2}));
    CHECK(pieces_conflict({0, 0}, {2, 4}, {0, 0}, {1, 2}));   // overlap from a shared end
    CHECK_FALSE(pieces_conflict({0, 0}, {1, 2}, {1, 2}, {2, 4}));  // collinear, end to end
    CHECK(pieces_conflict({0, 0}, {2, 2}, {1, 1}, {0, 3}));   // touches the interior
    CHECK(pieces_conflict({0, 0}, {2, 2}, {0, 2}, {2, 0}));
}

TEST_CASE("drawing violations") {
    const auto tri = fixtures::triangle();
    GridDrawing good{{{3, 0}, {0, 1}, {1, 2}}, {}};
    CHECK(check_upward_planar(tri, good).ok());

    GridDrawing down{{{0, 2}, {1, 1}, {0, 3}}, {}};
    auto rep = check_upward_planar(tri, down);
    CHECK_FALSE(rep.upward);
    CHECK_FALSE(rep.ok());

    GridDrawing coincident{{{0, 0}, {1, 1}, {1, 1}}, {}};
    CHECK_FALSE(check_upward_planar(tri, coincident).ok());

    // a drawn on the edge s -> t.
    GridDrawing through{{{0, 0}, {1, 1}, {2, 2}}, {}};
    rep = check_upward_planar(tri, through);
    CHECK_FALSE(rep.planar);

    const auto f1 = fixtures::f1();
    // v2 -> v1 crosses s -> v3.
    GridDrawing crossing{{{0, 0}, {-1, 2}, {2, 1}, {1, 3}, {0, 5}}, {}};
    rep = check_upward_planar(f1, crossing);
    CHECK(rep.upward);
    CHECK_FALSE(rep.planar);
    CHECK(rep.to_text().find("planar no") != std::string::npos);

    CHECK_THROWS_AS((void)check_upward_planar(tri, GridDrawing{{{0, 0}, {1, 1}}, {}}), LayoutError);
}

TEST_CASE("report text and json") {
    const auto f1 = fixtures::f1();
    const auto rep = check_upward_planar(f1, draw_polyline(f1));
    const std::string text = rep.to_text();
    CHECK(text.find("upward yes") != std::string::npos);
    CHECK(text.find("planar yes") != std::string::npos);
    CHECK(text.find("bends 1 (max 1 per edge)") != std::string::npos);
    CHECK(rep.to_json().find("\"planar\":true") != std::string::npos);
}

TEST_CASE("bounds") {
    ValidationReport rep;
    rep.width = 4;
    rep.height = 2;
    CHECK(check_bounds(rep, 3, DrawingMode::StraightLine));
    rep.width = 5;
    CHECK_FALSE(check_bounds(rep, 3, DrawingMode::StraightLine));
    rep.width = 12;
    rep.height = 6;
    rep.bends_total = 2;
    rep.bends_max_per_edge = 1;
    CHECK(check_bounds(rep, 5, DrawingMode::Polyline));
    CHECK_FALSE(check_bounds(rep, 5, DrawingMode::StraightLine));
    rep.bends_total = 3;
    CHECK_FALSE(check_bounds(rep, 5, DrawingMode::Polyline));
    rep.bends_total = 2;
    rep.bends_max_per_edge = 2;
    CHECK_FALSE(check_bounds(rep, 5, DrawingMode::Polyline));
    rep.bends_max_per_edge = 1;
    rep.height = 7;
    CHECK_FALSE(check_bounds(rep, 5, DrawingMode::Polyline));
    // A single edge is held to the straight-line limits.
    ValidationReport edge;
    edge.width = 2;
    edge.height = 1;
    CHECK(check_bounds(edge, 2, DrawingMode::Polyline));
    edge.height = 2;
    CHECK_FALSE(check_bounds(edge, 2, DrawingMode::Polyline));
}

TEST_CASE("sweep and pairwise agree") {
    std::mt19937_64 rng(12345);
    std::size_t bad = 0, good = 0;
    for (const auto& g : fixtures::generated(120, 4, 80, 5150)) {
        auto d = draw_polyline(g);
        const auto run = [&](const PolylineDrawing& x) {
            const auto a = check_upward_planar(g, x, CrossingCheck::Pairwise);
            const auto b = check_upward_planar(g, x, CrossingCheck::Sweep);
            REQUIRE(a.upward == b.upward);
            REQUIRE(a.planar == b.planar);
            (a.planar ? good : bad) += 1;
        };
        run(d);
        // Nudge one vertex; the result may or may not stay planar.
        std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
        std::uniform_int_distribution<int> delta(-3, 3);
        for (int k = 0; k < 4; ++k) {
            auto p = d;
            const auto v = pick(rng);
            p.position[v].x += delta(rng);
            p.position[v].y += delta(rng) % 2;
            run(p);
        }
        // Random positions that respect the vertex order stay upward but
        // are rarely planar.
        auto r = d;
        std::uniform_int_distribution<Coord> coord(0, 40);
        for (auto& pt : r.position) pt.x = coord(rng);
        run(r);
    }
    CHECK(good > 100);
    CHECK(bad > 100);
}
