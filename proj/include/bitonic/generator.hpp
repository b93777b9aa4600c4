#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "bitonic/graph.hpp"

namespace bitonic {

/// Name of the pseudo-random stream, recorded in generated files.
inline constexpr const char* kGeneratorStream = "mt19937_64";

struct GeneratorConfig {
    std::size_t n_target = 2;
    std::uint64_t seed = 1;
    /// Weights of vertex insertion into a face, chord insertion across a face,
    /// and edge subdivision. Must sum to 1.
    std::array<double, 3> op_mix{0.6, 0.25, 0.15};
    /// Run build_graph after every mutation.
    bool validate_each_step = false;
};

/// Random planar st-graph with exactly n_target vertices, grown from the
/// single edge (s, t). The outer face counts as two faces, left and right of
/// the drawing. Vertices are numbered in breadth-first topological order, so
/// s = 0 and t = n_target - 1. Identical configs give identical
/// graphs on every platform: the stream is mt19937_64 and bounded draws use
/// rejection sampling on its raw output.
///
/// Throws std::invalid_argument if n_target < 2 or the mix is not a
/// probability vector.
EmbeddedStGraph generate_random_st_graph(const GeneratorConfig& cfg);

/// "# generator mt19937_64 seed S n N" header line for generated files.
std::string generator_header(const GeneratorConfig& cfg);

}  // namespace bitonic
