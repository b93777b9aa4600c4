#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bitonic/faces.hpp"
#include "bitonic/graph.hpp"

namespace bitonic {

/// A bitonic st-ordering: rank[v] in 1..n, plus the augmentation edges that
/// certified it. The augmentation edges are never inserted into the graph.
struct BitonicOrdering {
    std::vector<std::size_t> rank;
    std::vector<Edge> augment_edges;

    /// Vertices sorted by rank.
    std::vector<VertexId> sequence() const;

    friend bool operator==(const BitonicOrdering&, const BitonicOrdering&) = default;
};

/// A forbidden configuration at u: with S(u) = v_1..v_m and 1-based
/// positions i < j, both v_{i+1} ~> v_i and v_j ~> v_{j+1} exist.
struct RejectionWitness {
    VertexId u;
    std::size_t i;
    std::size_t j;

    friend bool operator==(const RejectionWitness&, const RejectionWitness&) = default;
};

using OrderingResult = std::variant<BitonicOrdering, RejectionWitness>;

/// True iff seq strictly increases up to some apex and strictly decreases
/// after it. Elements must be pairwise distinct.
bool is_bitonic(std::span<const std::size_t> seq);

/// Recognition and ordering. Walks every successor list once, filling gaps
/// between unrelated consecutive successors with augmentation edges directed
/// towards the apex, then topologically sorts G plus those edges (smallest
/// ready vertex id first). Returns the first forbidden configuration found
/// otherwise, scanning vertices by id and successor pairs left to right.
OrderingResult find_bitonic_ordering(const EmbeddedStGraph& g, const FaceIndex& fi);
OrderingResult find_bitonic_ordering(const EmbeddedStGraph& g);

/// Independent check that rank is an st-ordering under which every
/// successor list is bitonic. Ignores augment_edges.
bool verify_bitonic_ordering(const EmbeddedStGraph& g, const BitonicOrdering& ord);

inline constexpr std::size_t kBruteForceVertexLimit = 11;

/// Enumerates all topological orderings looking for a bitonic one.
/// Throws GraphError(TooLarge) above vertex_limit vertices.
bool exists_bitonic_bruteforce(const EmbeddedStGraph& g, std::size_t vertex_limit = kBruteForceVertexLimit);

/// "rank v" lines in rank order, augmentation edges as "# augment a b".
std::string format_ordering(const BitonicOrdering& ord);
/// "reject u i j"
std::string format_witness(const RejectionWitness& w);

}  // namespace bitonic
