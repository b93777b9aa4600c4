#include "bitonic/faces.hpp"

#include <string>

namespace bitonic {

namespace detail {

namespace {

// Darts are numbered 2e (tail -> head) and 2e + 1 (head -> tail). next[d] is
// the dart following d with the face kept on the right: at the target of d,
// the dart counterclockwise after the reverse of d.
std::vector<std::uint32_t> dart_successors(const EmbeddedStGraph& g) {
    std::vector<std::uint32_t> next(2 * g.edge_count());
    std::vector<std::uint32_t> rot;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        rot.clear();
        for (EdgeId e : g.out_edges(v)) rot.push_back(2 * e);
        const auto in = g.in_edges(v);
        for (std::size_t k = in.size(); k-- > 0;) rot.push_back(2 * in[k] + 1);
        for (std::size_t j = 0; j < rot.size(); ++j) next[rot[j] ^ 1u] = rot[(j + rot.size() - 1) % rot.size()];
    }
    return next;
}

VertexId origin(const EmbeddedStGraph& g, std::uint32_t d) {
    const Edge& e = g.edge(d >> 1);
    return (d & 1) ? e.head : e.tail;
}

}  // namespace

FaceIndex trace_faces(const EmbeddedStGraph& g, std::vector<FaceId>* malformed) {
    FaceIndex fi;
    const std::size_t m = g.edge_count();
    const std::vector<std::uint32_t> next = dart_successors(g);
    std::vector<FaceId> face_of(2 * m, kNoFace);
    fi.offset_.push_back(0);
    fi.darts_.reserve(2 * m);

    for (std::uint32_t start = 0; start < 2 * m; ++start) {
        if (face_of[start] != kNoFace) continue;
        const auto f = static_cast<FaceId>(fi.source_.size());
        VertexId source = kNoVertex, sink = kNoVertex;
        int sources = 0, sinks = 0;
        std::uint32_t d = start;
        do {
            face_of[d] = f;
            fi.darts_.push_back({d >> 1, (d & 1) == 0});
            const std::uint32_t nd = next[d];
            // Vertex between d and nd: both forward-in means the boundary edges
            // both enter it; backward then forward means both leave it.
            const bool in_fwd = (d & 1) == 0;
            const bool out_fwd = (nd & 1) == 0;
            const VertexId x = origin(g, nd);
            if (in_fwd && !out_fwd) {
                ++sinks;
                sink = x;
            } else if (!in_fwd && out_fwd) {
                ++sources;
                source = x;
            }
            d = nd;
        } while (d != start && face_of[d] == kNoFace);
        if (d != start) {
            // Only possible on a corrupted rotation; keep the partial face.
            ++sources;
        }
        fi.offset_.push_back(static_cast<std::uint32_t>(fi.darts_.size()));
        if (sources != 1 || sinks != 1) {
            if (malformed) malformed->push_back(f);
            source = sink = kNoVertex;
        }
        fi.source_.push_back(source);
        fi.sink_.push_back(sink);
    }

    fi.right_.resize(m);
    fi.left_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        fi.right_[e] = face_of[2 * e];
        fi.left_[e] = face_of[2 * e + 1];
    }
    const std::size_t n = g.vertex_count();
    fi.out_offset_.assign(n + 1, 0);
    fi.corner_.assign(m, kNoFace);
    for (VertexId u = 0; u < n; ++u) {
        fi.out_offset_[u + 1] = fi.out_offset_[u] + static_cast<std::uint32_t>(g.out_degree(u));
        const auto out = g.out_edges(u);
        for (std::size_t i = 0; i + 1 < out.size(); ++i) fi.corner_[fi.out_offset_[u] + i] = fi.right_[out[i]];
    }
    if (m > 0) fi.outer_ = fi.left_[g.out_edges(g.source())[0]];
    return fi;
}

}  // namespace detail

FaceIndex compute_faces(const EmbeddedStGraph& g) {
    std::vector<FaceId> malformed;
    FaceIndex fi = detail::trace_faces(g, &malformed);
    for (FaceId f : malformed) {
        if (f == fi.outer_face()) continue;
        throw GraphError(GraphErrc::FaceWithMultipleSinks,
                         "face " + std::to_string(f) + " lacks a unique source and sink");
    }
    return fi;
}

VertexId face_sink(const FaceIndex& fi, VertexId u, std::size_t i) {
    return fi.face_sink(fi.corner_face(u, i));
}

}  // namespace bitonic
