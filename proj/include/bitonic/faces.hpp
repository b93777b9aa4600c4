#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bitonic/graph.hpp"

namespace bitonic {

using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = static_cast<FaceId>(-1);

class FaceIndex;

namespace detail {
// Traces faces without throwing; faces lacking a unique source or sink are
// appended to malformed (when non-null) and annotated with kNoVertex.
FaceIndex trace_faces(const EmbeddedStGraph& g, std::vector<FaceId>* malformed);
}  // namespace detail

/// One step along a face boundary: edge e traversed tail->head (forward) or
/// head->tail. Faces are traced keeping the face on the right-hand side.
struct Dart {
    EdgeId edge;
    bool forward;

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// Face structure of an embedded planar st-graph.
///
/// Every inner face has one face-source u and one face-sink; its boundary is
/// two directed paths from u to the sink. The inner faces are in bijection
/// with the corners between consecutive outgoing edges, and the corner table
/// is a flat array indexed by edge id: corner_face(e) is the face to the right
/// of out-edge e, which is an inner face whose source is the tail of e.
class FaceIndex {
public:
    std::size_t face_count() const noexcept { return source_.size(); }
    std::size_t inner_face_count() const noexcept { return source_.empty() ? 0 : source_.size() - 1; }
    FaceId outer_face() const noexcept { return outer_; }

    std::span<const Dart> boundary(FaceId f) const {
        return {darts_.data() + offset_[f], darts_.data() + offset_[f + 1]};
    }
    VertexId face_source(FaceId f) const { return source_[f]; }
    VertexId face_sink(FaceId f) const { return sink_[f]; }

    FaceId face_right_of(EdgeId e) const { return right_[e]; }
    FaceId face_left_of(EdgeId e) const { return left_[e]; }

    /// Inner face between the i-th and (i+1)-th successor of u (1-based i,
    /// 1 <= i < out_degree(u)).
    FaceId corner_face(VertexId u, std::size_t i) const { return corner_[out_offset_[u] + i - 1]; }

    std::size_t out_degree(VertexId u) const { return out_offset_[u + 1] - out_offset_[u]; }

private:
    friend FaceIndex detail::trace_faces(const EmbeddedStGraph&, std::vector<FaceId>*);

    std::vector<std::uint32_t> offset_;
    std::vector<Dart> darts_;
    std::vector<VertexId> source_;
    std::vector<VertexId> sink_;
    std::vector<FaceId> right_;
    std::vector<FaceId> left_;
    std::vector<FaceId> corner_;
    std::vector<std::uint32_t> out_offset_;
    FaceId outer_ = kNoFace;
};

/// Traces every face once, annotates inner faces with their source and sink
/// and fills the corner table. Linear in the edge count.
/// Throws GraphError(FaceWithMultipleSinks) if an inner face does not have
/// exactly one source and one sink.
FaceIndex compute_faces(const EmbeddedStGraph& g);

/// Sink of the inner face at the corner between (u, v_i) and (u, v_{i+1}),
/// 1-based i. The result is v_{i+1} iff v_i ~> v_{i+1}, v_i iff v_{i+1} ~> v_i,
/// and some other vertex iff there is no path between them.
VertexId face_sink(const FaceIndex& fi, VertexId u, std::size_t i);

}  // namespace bitonic
