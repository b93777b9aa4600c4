#include <doctest.h>

#include <set>

#include "bitonic/faces.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bitonic;

TEST_CASE("triangle has one inner face from s to t") {
    const auto g = fixtures::triangle();
    const auto fi = compute_faces(g);
    CHECK(fi.face_count() == 2);
    CHECK(fi.inner_face_count() == 1);
    const FaceId f = fi.corner_face(0, 1);
    CHECK(f != fi.outer_face());
    CHECK(fi.face_source(f) == 0);
    CHECK(fi.face_sink(f) == 2);
    std::set<EdgeId> edges;
    for (const Dart& d : fi.boundary(f)) edges.insert(d.edge);
    CHECK(edges.size() == 3);
    CHECK(face_sink(fi, 0, 1) == 2);
}

TEST_CASE("F1 faces") {
    const auto g = fixtures::f1();
    const auto fi = compute_faces(g);
    // Seven edges on five vertices: four faces, three of them inner.
    CHECK(fi.face_count() == 4);
    CHECK(fi.inner_face_count() == 3);
    CHECK(face_sink(fi, 0, 1) == 1);  // v2 reaches v1
    CHECK(face_sink(fi, 0, 2) == 3);  // v2 reaches v3
    CHECK(face_sink(fi, 2, 1) == 4);  // v1 and v3 meet only at t
    CHECK(fi.face_right_of(g.find_edge(0, 1)) == fi.face_left_of(g.find_edge(0, 2)));
    CHECK(fi.face_left_of(g.find_edge(0, 1)) == fi.outer_face());
    CHECK(fi.face_right_of(g.find_edge(0, 3)) == fi.outer_face());
}

TEST_CASE("outer face is bounded by s and t") {
    for (const auto& g : fixtures::named()) {
        const auto fi = compute_faces(g);
        CHECK(fi.face_source(fi.outer_face()) == g.source());
        CHECK(fi.face_sink(fi.outer_face()) == g.sink());
    }
}

TEST_CASE("every dart lies on exactly one face") {
    for (const auto& g : fixtures::generated(60, 3, 60)) {
        const auto fi = compute_faces(g);
        std::vector<int> seen(2 * g.edge_count(), 0);
        for (FaceId f = 0; f < fi.face_count(); ++f)
            for (const Dart& d : fi.boundary(f)) ++seen[2 * d.edge + (d.forward ? 0 : 1)];
        for (int c : seen) REQUIRE(c == 1);
    }
}

TEST_CASE("face_sink decides the path between consecutive successors") {
    for (const auto& g : fixtures::generated(80, 3, 50, 77)) {
        const auto fi = compute_faces(g);
        const auto r = oracle::closure(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            for (std::size_t i = 1; i < g.out_degree(u); ++i) {
                const VertexId a = g.successor(u, i - 1), b = g.successor(u, i);
                const VertexId w = face_sink(fi, u, i);
                CHECK((w == b) == static_cast<bool>(r[a][b]));
                CHECK((w == a) == static_cast<bool>(r[b][a]));
                // Corner faces start at u.
                CHECK(fi.face_source(fi.corner_face(u, i)) == u);
            }
        }
    }
}
