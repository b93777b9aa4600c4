#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bitonic/generator.hpp"
#include "bitonic/graph.hpp"
#include "bitonic/graph_io.hpp"

namespace fixtures {

using bitonic::EmbeddedStGraph;
using bitonic::VertexId;

// s=0, a=1, t=2.
inline EmbeddedStGraph triangle() { return bitonic::build_graph(3, 0, 2, {{1, 2}, {2}, {}}); }

inline EmbeddedStGraph single_edge() { return bitonic::build_graph(2, 0, 1, {{1}, {}}); }

// s=0, v1=1, v2=2, v3=3, t=4; v2 reaches both of its neighbours in S(s).
inline EmbeddedStGraph f1() { return bitonic::build_graph(5, 0, 4, {{1, 2, 3}, {4}, {1, 3}, {4}, {}}); }

// f1 with (s, v3) subdivided by d=5.
inline EmbeddedStGraph split_f1() {
    return bitonic::build_graph(6, 0, 4, {{1, 2, 5}, {4}, {1, 3}, {4}, {}, {3}});
}

// Fan over a path: x=0, t=1, c_0=2, ..., c_{k-3}=k-1. S(c_0)=[x,t] and
// S(c_j)=[x,c_{j-1},t]; every c_j with j >= 1 carries its own forbidden
// configuration, k-3 in total on k vertices.
inline EmbeddedStGraph fan(std::size_t k) {
    std::vector<std::vector<VertexId>> succ(k);
    succ[0] = {1};
    succ[2] = {0, 1};
    for (std::size_t j = 3; j < k; ++j) succ[j] = {0, static_cast<VertexId>(j - 1), 1};
    return bitonic::build_graph(k, static_cast<VertexId>(k - 1), 1, succ);
}

// Seven vertices, accepted; several vertices are placed with a single
// predecessor.
inline EmbeddedStGraph seven() {
    // s=0 a=1 b=2 c=3 d=4 e=5 t=6
    return bitonic::build_graph(7, 0, 6, {{5, 2, 1}, {2, 6}, {3, 4}, {5, 4}, {6}, {6}, {}});
}

// Sixteen vertices and thirty edges that need splits; frozen from the
// generator so that it stays put if the generator changes.
inline const char* kSixteenText = R"(16 0 15
0: 6 4 1 2 9 13 3 10
1: 4
2: 9
3: 10 5
4: 6 7 15 8 12 9
5: 10
6: 15 11
7: 15
8: 12
9: 12
10: 13
11: 15
12: 14 15
13: 15
14: 15
15:
)";

inline EmbeddedStGraph sixteen() { return bitonic::parse_graph_text(kSixteenText); }

inline std::vector<EmbeddedStGraph> named() {
    std::vector<EmbeddedStGraph> all{triangle(), single_edge(), f1(), split_f1(), seven(), sixteen()};
    for (std::size_t k = 4; k <= 12; ++k) all.push_back(fan(k));
    return all;
}

inline bitonic::GeneratorConfig config(std::size_t n, std::uint64_t seed, int mix = 0) {
    bitonic::GeneratorConfig cfg;
    cfg.n_target = n;
    cfg.seed = seed;
    // Rotate through mixes so that small corpora see both chord-heavy and
    // sparse graphs.
    static const std::array<std::array<double, 3>, 3> mixes{{{0.6, 0.25, 0.15}, {0.4, 0.5, 0.1}, {0.7, 0.0, 0.3}}};
    cfg.op_mix = mixes[static_cast<std::size_t>(mix) % mixes.size()];
    return cfg;
}

// count graphs with n_lo <= n <= n_hi.
inline std::vector<EmbeddedStGraph> generated(std::size_t count, std::size_t n_lo, std::size_t n_hi,
                                              std::uint64_t seed0 = 1000) {
    std::vector<EmbeddedStGraph> all;
    all.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = n_lo + i % (n_hi - n_lo + 1);
        all.push_back(bitonic::generate_random_st_graph(config(n, seed0 + i, static_cast<int>(i % 3))));
    }
    return all;
}

}  // namespace fixtures
