#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitonic/faces.hpp"
#include "bitonic/graph.hpp"

namespace bitonic {

/// Prefix path counts at u for h = 1..m (index h - 1):
/// left[h-1]  = |{ i < h : v_{i+1} ~> v_i }|,
/// right[h-1] = |{ i < h : v_i ~> v_{i+1} }|.
struct PathCounts {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

PathCounts left_right_counts(const EmbeddedStGraph& g, const FaceIndex& fi, VertexId u);

/// Edges to split so that the graph admits a bitonic st-ordering.
/// apex[u] is the chosen 1-based apex position (0 when u has no successors);
/// split_edges are ordered by tail, then by position at the tail.
struct SplitPlan {
    std::vector<std::size_t> apex;
    std::vector<EdgeId> split_edges;

    friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
};

/// Minimum split set. Per vertex, picks the smallest apex minimising the
/// number of consecutive-successor paths pointing away from it, then splits
/// the transitive edge of every such path.
SplitPlan minimum_split_plan(const EmbeddedStGraph& g, const FaceIndex& fi);
SplitPlan minimum_split_plan(const EmbeddedStGraph& g);

/// Baseline: split every transitive edge, leaving a reduced st-graph.
/// apex is left empty.
SplitPlan transitive_split_plan(const EmbeddedStGraph& g, const FaceIndex& fi);

/// A graph with split edges subdivided by dummy vertices numbered from the
/// original vertex count upwards. dummy_of[d - original_vertex_count] is the
/// original edge of dummy d.
struct SplitResult {
    EmbeddedStGraph graph;
    std::size_t original_vertex_count = 0;
    std::vector<Edge> dummy_of;

    bool is_dummy(VertexId v) const { return v >= original_vertex_count; }
    const Edge& original_edge(VertexId dummy) const { return dummy_of[dummy - original_vertex_count]; }
};

/// Replaces each listed edge (u, v) by (u, d), (d, v); d takes the place of v
/// in S(u) and of u in the incoming order of v.
/// Throws GraphError(EdgeNotFound) for an edge id outside g or a repeated edge.
SplitResult apply_splits(const EmbeddedStGraph& g, const std::vector<EdgeId>& split_edges);
SplitResult apply_splits(const EmbeddedStGraph& g, const SplitPlan& plan);

/// Inverse of apply_splits: contracts every dummy vertex.
EmbeddedStGraph contract_splits(const SplitResult& r);

inline constexpr std::size_t kBruteForceEdgeLimit = 16;

/// Smallest k <= budget such that splitting some k edges yields a graph that
/// find_bitonic_ordering accepts; budget + 1 if there is none.
/// Throws GraphError(TooLarge) above edge_limit edges.
std::size_t minimum_splits_bruteforce(const EmbeddedStGraph& g, std::size_t budget,
                                      std::size_t edge_limit = kBruteForceEdgeLimit);

/// "split u v" lines plus "total k".
std::string format_plan(const EmbeddedStGraph& g, const SplitPlan& plan);
/// Graph text of the split graph followed by "dummy d u v" lines.
std::string format_split_result(const SplitResult& r);

}  // namespace bitonic
