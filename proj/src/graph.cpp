#include "bitonic/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bitonic/faces.hpp"

namespace bitonic {

const char* to_string(GraphErrc code) {
    switch (code) {
        case GraphErrc::InvalidInput: return "InvalidInput";
        case GraphErrc::NotAcyclic: return "NotAcyclic";
        case GraphErrc::MultipleSourcesOrSinks: return "MultipleSourcesOrSinks";
        case GraphErrc::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case GraphErrc::NotBimodal: return "NotBimodal";
        case GraphErrc::ParallelEdge: return "ParallelEdge";
        case GraphErrc::StNotOnOuterFace: return "StNotOnOuterFace";
        case GraphErrc::FaceWithMultipleSinks: return "FaceWithMultipleSinks";
        case GraphErrc::EdgeNotFound: return "EdgeNotFound";
        case GraphErrc::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

GraphError::GraphError(GraphErrc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

std::vector<VertexId> EmbeddedStGraph::successors(VertexId u) const {
    std::vector<VertexId> result;
    result.reserve(out_degree(u));
    for (EdgeId e : out_edges(u)) result.push_back(edges_[e].head);
    return result;
}

EdgeId EmbeddedStGraph::find_edge(VertexId u, VertexId v) const {
    for (EdgeId e : out_edges(u))
        if (edges_[e].head == v) return e;
    return kNoEdge;
}

std::vector<std::vector<VertexId>> EmbeddedStGraph::successor_lists() const {
    std::vector<std::vector<VertexId>> lists(vertex_count());
    for (VertexId u = 0; u < vertex_count(); ++u) lists[u] = successors(u);
    return lists;
}

namespace {

std::string vtx(VertexId v) { return "vertex " + std::to_string(v); }

// Kahn's algorithm; returns an empty vector if the graph has a cycle.
std::vector<VertexId> topological_order(std::size_t n, const std::vector<Edge>& edges,
                                        const std::vector<std::uint32_t>& out_off) {
    std::vector<std::uint32_t> indeg(n, 0);
    for (const Edge& e : edges) ++indeg[e.head];
    std::vector<VertexId> order;
    order.reserve(n);
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::uint32_t e = out_off[order[i]]; e < out_off[order[i] + 1]; ++e)
            if (--indeg[edges[e].head] == 0) order.push_back(edges[e].head);
    }
    if (order.size() != n) order.clear();
    return order;
}

}  // namespace

EmbeddedStGraph build_graph(std::size_t n, VertexId s, VertexId t,
                            const std::vector<std::vector<VertexId>>& out_rotation) {
    if (n < 2) throw GraphError(GraphErrc::InvalidInput, "need at least two vertices");
    if (n >= static_cast<std::size_t>(kNoVertex) / 2)
        throw GraphError(GraphErrc::TooLarge, "vertex count " + std::to_string(n));
    if (out_rotation.size() != n)
        throw GraphError(GraphErrc::InvalidInput, "expected " + std::to_string(n) + " successor lists, got " +
                                                      std::to_string(out_rotation.size()));
    if (s >= n || t >= n) throw GraphError(GraphErrc::InvalidInput, "s or t out of range");
    if (s == t) throw GraphError(GraphErrc::InvalidInput, "s and t coincide");

    EmbeddedStGraph g;
    g.s_ = s;
    g.t_ = t;
    g.out_off_.assign(n + 1, 0);

    std::vector<VertexId> last_seen(n, kNoVertex);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : out_rotation[u]) {
            if (v >= n)
                throw GraphError(GraphErrc::InvalidInput, "successor " + std::to_string(v) + " of " + vtx(u) +
                                                              " out of range");
            if (v == u) throw GraphError(GraphErrc::NotAcyclic, "self-loop at " + vtx(u));
            if (last_seen[v] == u)
                throw GraphError(GraphErrc::ParallelEdge,
                                 "edge " + std::to_string(u) + " -> " + std::to_string(v) + " repeated");
            last_seen[v] = u;
            g.edges_.push_back({u, v});
        }
        g.out_off_[u + 1] = static_cast<std::uint32_t>(g.edges_.size());
    }
    const std::size_t m = g.edges_.size();
    if (m >= static_cast<std::size_t>(kNoEdge) / 2)
        throw GraphError(GraphErrc::TooLarge, "edge count " + std::to_string(m));

    g.out_ids_.resize(m);
    for (EdgeId e = 0; e < m; ++e) g.out_ids_[e] = e;
    g.in_off_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) ++g.in_off_[e.head + 1];
    for (std::size_t v = 0; v < n; ++v) g.in_off_[v + 1] += g.in_off_[v];

    const std::vector<VertexId> topo = topological_order(n, g.edges_, g.out_off_);
    if (topo.empty()) throw GraphError(GraphErrc::NotAcyclic, "directed cycle present");

    {
        std::vector<std::uint32_t> indeg(n, 0);
        for (const Edge& e : g.edges_) ++indeg[e.head];
        for (VertexId v = 0; v < n; ++v) {
            if (indeg[v] == 0 && v != s)
                throw GraphError(GraphErrc::MultipleSourcesOrSinks, vtx(v) + " is a source other than s");
            if (g.out_degree(v) == 0 && v != t)
                throw GraphError(GraphErrc::MultipleSourcesOrSinks, vtx(v) + " is a sink other than t");
        }
        if (indeg[s] != 0) throw GraphError(GraphErrc::MultipleSourcesOrSinks, "s has incoming edges");
        if (g.out_degree(t) != 0) throw GraphError(GraphErrc::MultipleSourcesOrSinks, "t has outgoing edges");
    }

    // Derive the left-to-right order of incoming edges. Every inner face is
    // named by the out-edge to whose right it starts; the outer face is split
    // into a left and a right half. Processing vertices in topological order,
    // the faces on both sides of each incoming edge are known, and consecutive
    // incoming edges must share the face they close.
    const FaceId outer_left = static_cast<FaceId>(m);
    const FaceId outer_right = static_cast<FaceId>(m + 1);
    std::vector<FaceId> left(m, kNoFace), right(m, kNoFace);
    std::vector<VertexId> closed_at(m, kNoVertex);
    std::vector<EdgeId> by_left(m + 2, kNoEdge);
    std::vector<char> is_right(m + 2, 0);
    // Incoming edges grouped by head in id order, before sorting.
    std::vector<EdgeId> by_head(m);
    {
        std::vector<std::uint32_t> fill(g.in_off_.begin(), g.in_off_.end() - 1);
        for (EdgeId e = 0; e < m; ++e) by_head[fill[g.edges_[e].head]++] = e;
    }
    g.in_ids_.assign(m, kNoEdge);

    for (VertexId v : topo) {
        FaceId lf = outer_left, rf = outer_right;
        if (v != s) {
            const std::span<const EdgeId> incoming(by_head.data() + g.in_off_[v], g.in_degree(v));
            for (EdgeId e : incoming) {
                if (by_left[left[e]] != kNoEdge)
                    throw GraphError(GraphErrc::NotBimodal,
                                     "incoming edges at " + vtx(v) + " cannot be ordered consecutively");
                by_left[left[e]] = e;
                is_right[right[e]] = 1;
            }
            EdgeId first = kNoEdge;
            for (EdgeId e : incoming) {
                if (!is_right[left[e]]) {
                    if (first != kNoEdge)
                        throw GraphError(GraphErrc::NotBimodal,
                                         "incoming edges at " + vtx(v) + " split into several blocks");
                    first = e;
                }
            }
            EdgeId* chain = g.in_ids_.data() + g.in_off_[v];
            std::size_t chained = 0;
            EdgeId e = first;
            for (; e != kNoEdge && chained < incoming.size();) {
                chain[chained++] = e;
                const EdgeId next = by_left[right[e]];
                if (next != kNoEdge) {
                    if (right[e] >= m || closed_at[right[e]] != kNoVertex)
                        throw GraphError(GraphErrc::NotPlanarEmbedding,
                                         "face closed twice near " + vtx(v));
                    closed_at[right[e]] = v;
                }
                e = next;
            }
            for (EdgeId e : incoming) {
                by_left[left[e]] = kNoEdge;
                is_right[right[e]] = 0;
            }
            if (first == kNoEdge || chained != incoming.size() || e != kNoEdge)
                throw GraphError(GraphErrc::NotBimodal,
                                 "incoming edges at " + vtx(v) + " do not form one consecutive block");
            lf = left[chain[0]];
            rf = right[chain[chained - 1]];
        }
        if (v == t) {
            if (lf != outer_left || rf != outer_right)
                throw GraphError(GraphErrc::StNotOnOuterFace, "t is not reached by the outer face");
            continue;
        }
        const auto out = g.out_edges(v);
        for (std::size_t i = 0; i < out.size(); ++i) {
            left[out[i]] = i == 0 ? lf : out[i - 1];
            right[out[i]] = i + 1 == out.size() ? rf : out[i];
        }
    }
    for (VertexId u = 0; u < n; ++u) {
        const auto out = g.out_edges(u);
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
            if (closed_at[out[i]] == kNoVertex)
                throw GraphError(GraphErrc::NotPlanarEmbedding,
                                 "face at corner " + std::to_string(i + 1) + " of " + vtx(u) + " never closes");
    }

    g.pos_tail_.assign(m, 0);
    g.pos_head_.assign(m, 0);
    for (VertexId v = 0; v < n; ++v) {
        const auto out = g.out_edges(v);
        const auto in = g.in_edges(v);
        for (std::size_t i = 0; i < out.size(); ++i) g.pos_tail_[out[i]] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < in.size(); ++i) g.pos_head_[in[i]] = static_cast<std::uint32_t>(i);
    }

    // Cross-check against the traced rotation system.
    std::vector<FaceId> malformed;
    const FaceIndex fi = detail::trace_faces(g, &malformed);
    const auto euler = static_cast<long long>(n) - static_cast<long long>(m) + static_cast<long long>(fi.face_count());
    if (euler != 2)
        throw GraphError(GraphErrc::NotPlanarEmbedding,
                         "Euler characteristic " + std::to_string(euler) + " over " + std::to_string(fi.face_count()) +
                             " traced faces");
    if (!malformed.empty())
        throw GraphError(GraphErrc::NotPlanarEmbedding, "a face lacks a unique source and sink");
    if (fi.face_sink(fi.outer_face()) != t || fi.face_source(fi.outer_face()) != s)
        throw GraphError(GraphErrc::StNotOnOuterFace, "outer face is not bounded by s and t");
    for (VertexId u = 0; u < n; ++u) {
        const auto out = g.out_edges(u);
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            const FaceId f = fi.corner_face(u, i + 1);
            if (f == fi.outer_face())
                throw GraphError(GraphErrc::StNotOnOuterFace,
                                 "corner " + std::to_string(i + 1) + " of " + vtx(u) + " lies on the outer face");
            if (fi.face_source(f) != u || fi.face_sink(f) != closed_at[out[i]])
                throw GraphError(GraphErrc::NotPlanarEmbedding, "inconsistent face at " + vtx(u));
        }
    }
    return g;
}

std::vector<char> reachable_set(const EmbeddedStGraph& g, VertexId u) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(x)) {
            const VertexId y = g.edge(e).head;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

bool reachable(const EmbeddedStGraph& g, VertexId u, VertexId v) {
    if (u == v) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(x)) {
            const VertexId y = g.edge(e).head;
            if (y == v) return true;
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return false;
}

}  // namespace bitonic
