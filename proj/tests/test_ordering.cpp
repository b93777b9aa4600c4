#include <doctest.h>

#include <algorithm>

#include "bitonic/faces.hpp"
#include "bitonic/ordering.hpp"
#include "bitonic/splitting.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bitonic;

namespace {

std::vector<std::size_t> ranks_of(const EmbeddedStGraph& g, const BitonicOrdering& ord, VertexId u) {
    std::vector<std::size_t> seq;
    for (VertexId v : g.successors(u)) seq.push_back(ord.rank[v]);
    return seq;
}

// G plus the augmentation edges, each drawn inside the face it was added
// for: appended to S(a) when a precedes b around their common predecessor,
// prepended otherwise.
EmbeddedStGraph with_augmentation(const EmbeddedStGraph& g, const std::vector<Edge>& extra) {
    auto succ = g.successor_lists();
    std::vector<std::vector<VertexId>> front(g.vertex_count()), back(g.vertex_count());
    for (const Edge& e : extra) {
        bool a_first = false, found = false;
        for (VertexId u = 0; u < g.vertex_count() && !found; ++u)
            for (std::size_t i = 1; i < g.out_degree(u); ++i) {
                if (g.successor(u, i - 1) == e.tail && g.successor(u, i) == e.head) a_first = found = true;
                if (g.successor(u, i - 1) == e.head && g.successor(u, i) == e.tail) found = true;
            }
        REQUIRE(found);
        (a_first ? back : front)[e.tail].push_back(e.head);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(front[v].size() <= 1);
        REQUIRE(back[v].size() <= 1);
        succ[v].insert(succ[v].begin(), front[v].begin(), front[v].end());
        succ[v].insert(succ[v].end(), back[v].begin(), back[v].end());
    }
    return build_graph(g.vertex_count(), g.source(), g.sink(), succ);
}

}  // namespace

TEST_CASE("is_bitonic") {
    using V = std::vector<std::size_t>;
    CHECK(is_bitonic(V{}));
    CHECK(is_bitonic(V{4}));
    CHECK(is_bitonic(V{1, 2, 3}));
    CHECK(is_bitonic(V{3, 2, 1}));
    CHECK(is_bitonic(V{1, 5, 4, 2}));
    CHECK_FALSE(is_bitonic(V{2, 1, 3}));
    CHECK_FALSE(is_bitonic(V{1, 3, 2, 4}));
    for (const auto& v : {V{2, 1, 3}, V{1, 5, 4, 2}, V{4, 3, 5, 1}, V{1, 2}})
        CHECK(is_bitonic(v) == oracle::bitonic_by_apex(v));
}

TEST_CASE("triangle is accepted with the only st-ordering") {
    const auto g = fixtures::triangle();
    const auto result = find_bitonic_ordering(g);
    REQUIRE(std::holds_alternative<BitonicOrdering>(result));
    const auto& ord = std::get<BitonicOrdering>(result);
    CHECK(ord.rank == std::vector<std::size_t>{1, 2, 3});
    CHECK(ord.augment_edges.empty());
    CHECK(verify_bitonic_ordering(g, ord));
    CHECK_FALSE(verify_bitonic_ordering(g, BitonicOrdering{{1, 3, 2}, {}}));
    CHECK_FALSE(verify_bitonic_ordering(g, BitonicOrdering{{1, 2, 2}, {}}));
    CHECK_FALSE(verify_bitonic_ordering(g, BitonicOrdering{{1, 2}, {}}));
}

TEST_CASE("F1 is rejected at s") {
    const auto result = find_bitonic_ordering(fixtures::f1());
    REQUIRE(std::holds_alternative<RejectionWitness>(result));
    CHECK(std::get<RejectionWitness>(result) == RejectionWitness{0, 1, 2});
    CHECK(format_witness(std::get<RejectionWitness>(result)) == "reject 0 1 2\n");
}

TEST_CASE("split F1 is accepted") {
    const auto g = fixtures::split_f1();
    const auto result = find_bitonic_ordering(g);
    REQUIRE(std::holds_alternative<BitonicOrdering>(result));
    const auto& ord = std::get<BitonicOrdering>(result);
    // Augmentation: d -> v2 at s (after the apex v1), v1 -> v3 at v2.
    CHECK(ord.augment_edges == std::vector<Edge>{{5, 2}, {1, 3}});
    // s, d, v2, v1, v3, t
    CHECK(ord.sequence() == std::vector<VertexId>{0, 5, 2, 1, 3, 4});
    CHECK(ranks_of(g, ord, 0) == std::vector<std::size_t>{4, 3, 2});
    CHECK(verify_bitonic_ordering(g, ord));
    CHECK(format_ordering(ord) == "# augment 5 2\n# augment 1 3\n1 0\n2 5\n3 2\n4 1\n5 3\n6 4\n");
}

TEST_CASE("brute force on the fixtures") {
    CHECK(exists_bitonic_bruteforce(fixtures::triangle()));
    CHECK(exists_bitonic_bruteforce(fixtures::single_edge()));
    CHECK_FALSE(exists_bitonic_bruteforce(fixtures::f1()));
    CHECK(exists_bitonic_bruteforce(fixtures::split_f1()));
    CHECK_FALSE(exists_bitonic_bruteforce(fixtures::fan(5)));
    CHECK_THROWS_AS((void)exists_bitonic_bruteforce(fixtures::sixteen()), GraphError);
}

TEST_CASE("recognition matches brute force and every ordering verifies") {
    auto corpus = fixtures::generated(300, 2, 9, 4242);
    for (const auto& g : fixtures::named())
        if (g.vertex_count() <= 9) corpus.push_back(g);
    std::size_t accepted = 0, rejected = 0;
    for (const auto& g : corpus) {
        const auto result = find_bitonic_ordering(g);
        const bool ok = std::holds_alternative<BitonicOrdering>(result);
        REQUIRE(ok == exists_bitonic_bruteforce(g));
        if (ok) {
            ++accepted;
            CHECK(verify_bitonic_ordering(g, std::get<BitonicOrdering>(result)));
        } else {
            ++rejected;
        }
    }
    CHECK(accepted > 20);
    CHECK(rejected > 20);
}

TEST_CASE("witnesses are forbidden configurations") {
    for (const auto& g : fixtures::generated(200, 4, 40, 99)) {
        const auto result = find_bitonic_ordering(g);
        if (!std::holds_alternative<RejectionWitness>(result)) continue;
        const auto w = std::get<RejectionWitness>(result);
        const auto r = oracle::closure(g);
        REQUIRE(w.i < w.j);
        REQUIRE(w.j < g.out_degree(w.u));
        const auto v = [&](std::size_t k) { return g.successor(w.u, k - 1); };
        CHECK(r[v(w.i + 1)][v(w.i)]);
        CHECK(r[v(w.j)][v(w.j + 1)]);
    }
}

TEST_CASE("augmented graph stays a planar st-graph ordered by rank") {
    std::size_t checked = 0;
    for (const auto& g : fixtures::generated(200, 3, 60, 31)) {
        const auto result = find_bitonic_ordering(g);
        if (!std::holds_alternative<BitonicOrdering>(result)) continue;
        const auto& ord = std::get<BitonicOrdering>(result);
        const auto aug = with_augmentation(g, ord.augment_edges);
        for (const Edge& e : aug.edges()) REQUIRE(ord.rank[e.tail] < ord.rank[e.head]);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("accepted graphs have an apex at every vertex") {
    for (const auto& g : fixtures::generated(200, 3, 12, 555)) {
        if (!std::holds_alternative<BitonicOrdering>(find_bitonic_ordering(g))) continue;
        const auto r = oracle::closure(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const std::size_t m = g.out_degree(u);
            bool found = m == 0;
            for (std::size_t h = 1; h <= m && !found; ++h) {
                bool ok = true;
                for (std::size_t i = 1; i < m; ++i) {
                    const VertexId a = g.successor(u, i - 1), b = g.successor(u, i);
                    if (i < h && r[b][a]) ok = false;
                    if (i >= h && r[a][b]) ok = false;
                }
                found = ok;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("reduced graphs are always accepted") {
    std::size_t reduced = 0;
    const auto check_reduced = [&](const EmbeddedStGraph& g) {
        const auto r = oracle::closure(g);
        for (const Edge& e : g.edges())
            for (VertexId w : g.successors(e.tail))
                if (w != e.head && r[w][e.head]) return;
        ++reduced;
        CHECK(std::holds_alternative<BitonicOrdering>(find_bitonic_ordering(g)));
    };
    for (const auto& g : fixtures::generated(300, 3, 40, 8080)) {
        check_reduced(g);
        check_reduced(apply_splits(g, transitive_split_plan(g, compute_faces(g))).graph);
    }
    CHECK(reduced >= 300);
}
