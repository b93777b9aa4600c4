#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitonic {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Edge {
    VertexId tail;
    VertexId head;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphErrc {
    InvalidInput,
    NotAcyclic,
    MultipleSourcesOrSinks,
    NotPlanarEmbedding,
    NotBimodal,
    ParallelEdge,
    StNotOnOuterFace,
    FaceWithMultipleSinks,
    EdgeNotFound,
    TooLarge,
};

const char* to_string(GraphErrc code);

/// Raised whenever an input violates one of the planar st-graph invariants.
/// what() starts with the error name so that it can be shown verbatim.
class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrc code, const std::string& detail);

    GraphErrc code() const noexcept { return code_; }

private:
    GraphErrc code_;
};

/// An embedded planar st-graph.
///
/// The embedding is a rotation system with y pointing up: out_edges(u) lists
/// the outgoing edges of u clockwise, i.e. from left to right; in_edges(v)
/// lists the incoming edges of v from left to right. The full clockwise
/// rotation at v is therefore out_edges(v) followed by in_edges(v) reversed.
/// Instances are immutable once built and only created through build_graph.
class EmbeddedStGraph {
public:
    EmbeddedStGraph() = default;

    std::size_t vertex_count() const noexcept { return out_off_.empty() ? 0 : out_off_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    VertexId source() const noexcept { return s_; }
    VertexId sink() const noexcept { return t_; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const EdgeId> out_edges(VertexId u) const {
        return {out_ids_.data() + out_off_[u], out_off_[u + 1] - out_off_[u]};
    }
    std::span<const EdgeId> in_edges(VertexId v) const {
        return {in_ids_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
    }
    std::size_t out_degree(VertexId u) const { return out_off_[u + 1] - out_off_[u]; }
    std::size_t in_degree(VertexId v) const { return in_off_[v + 1] - in_off_[v]; }

    /// i-th successor of u, 0-based.
    VertexId successor(VertexId u, std::size_t i) const { return edges_[out_ids_[out_off_[u] + i]].head; }
    std::vector<VertexId> successors(VertexId u) const;

    /// Index of e within out_edges(tail) and within in_edges(head).
    std::size_t position_at_tail(EdgeId e) const { return pos_tail_[e]; }
    std::size_t position_at_head(EdgeId e) const { return pos_head_[e]; }

    /// Edge u -> v, or kNoEdge. Linear in the out-degree of u.
    EdgeId find_edge(VertexId u, VertexId v) const;

    /// The successor lists, the form build_graph consumes.
    std::vector<std::vector<VertexId>> successor_lists() const;

    friend bool operator==(const EmbeddedStGraph& a, const EmbeddedStGraph& b) {
        return a.s_ == b.s_ && a.t_ == b.t_ && a.successor_lists() == b.successor_lists();
    }

private:
    friend EmbeddedStGraph build_graph(std::size_t, VertexId, VertexId,
                                       const std::vector<std::vector<VertexId>>&);

    VertexId s_ = 0;
    VertexId t_ = 0;
    std::vector<Edge> edges_;
    // Adjacency in compressed rows: out_edges(u) is out_ids_[out_off_[u] ..
    // out_off_[u + 1]), likewise for in_edges.
    std::vector<std::uint32_t> out_off_, in_off_;
    std::vector<EdgeId> out_ids_, in_ids_;
    std::vector<std::uint32_t> pos_tail_;
    std::vector<std::uint32_t> pos_head_;
};

/// Builds and validates an embedded planar st-graph from clockwise successor
/// lists. Edge ids are assigned in order of (tail, position at tail). The
/// left-to-right order of incoming edges is derived from the successor lists
/// and cross-checked by tracing every face of the resulting rotation system.
///
/// Throws GraphError naming the first violated invariant.
EmbeddedStGraph build_graph(std::size_t n, VertexId s, VertexId t,
                            const std::vector<std::vector<VertexId>>& out_rotation);

/// Directed reachability by graph search; true for u == v.
bool reachable(const EmbeddedStGraph& g, VertexId u, VertexId v);

/// All vertices reachable from u (including u) as a membership mask.
std::vector<char> reachable_set(const EmbeddedStGraph& g, VertexId u);

}  // namespace bitonic
