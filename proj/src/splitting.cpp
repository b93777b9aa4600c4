#include "bitonic/splitting.hpp"

#include <algorithm>
#include <sstream>

#include "bitonic/graph_io.hpp"
#include "bitonic/ordering.hpp"

namespace bitonic {

PathCounts left_right_counts(const EmbeddedStGraph& g, const FaceIndex& fi, VertexId u) {
    const std::size_t m = g.out_degree(u);
    PathCounts pc;
    pc.left.assign(m, 0);
    pc.right.assign(m, 0);
    for (std::size_t h = 2; h <= m; ++h) {
        const VertexId w = face_sink(fi, u, h - 1);
        pc.left[h - 1] = pc.left[h - 2] + (w == g.successor(u, h - 2) ? 1 : 0);
        pc.right[h - 1] = pc.right[h - 2] + (w == g.successor(u, h - 1) ? 1 : 0);
    }
    return pc;
}

SplitPlan minimum_split_plan(const EmbeddedStGraph& g, const FaceIndex& fi) {
    const std::size_t n = g.vertex_count();
    SplitPlan plan;
    plan.apex.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        const auto out = g.out_edges(u);
        const std::size_t m = out.size();
        if (m == 0) continue;
        // c tracks L(u, i) - R(u, i); keep the first strict minimum.
        std::size_t h = 1;
        long c = 0, c_min = 0;
        for (std::size_t i = 2; i <= m; ++i) {
            const VertexId w = face_sink(fi, u, i - 1);
            if (w == g.successor(u, i - 2)) ++c;
            if (w == g.successor(u, i - 1)) --c;
            if (c < c_min) {
                c_min = c;
                h = i;
            }
        }
        plan.apex[u] = h;
        for (std::size_t i = 1; i < h; ++i)
            if (face_sink(fi, u, i) == g.successor(u, i - 1)) plan.split_edges.push_back(out[i - 1]);
        for (std::size_t i = h; i < m; ++i)
            if (face_sink(fi, u, i) == g.successor(u, i)) plan.split_edges.push_back(out[i]);
    }
    return plan;
}

SplitPlan minimum_split_plan(const EmbeddedStGraph& g) { return minimum_split_plan(g, compute_faces(g)); }

SplitPlan transitive_split_plan(const EmbeddedStGraph& g, const FaceIndex& fi) {
    SplitPlan plan;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto out = g.out_edges(u);
        const std::size_t m = out.size();
        for (std::size_t i = 1; i <= m; ++i) {
            const VertexId v = g.successor(u, i - 1);
            // (u, v_i) is transitive iff it alone forms one side of an
            // adjacent face that u opens.
            const bool right_side = i < m && face_sink(fi, u, i) == v;
            const bool left_side = i > 1 && face_sink(fi, u, i - 1) == v;
            if (right_side || left_side) plan.split_edges.push_back(out[i - 1]);
        }
    }
    return plan;
}

SplitResult apply_splits(const EmbeddedStGraph& g, const std::vector<EdgeId>& split_edges) {
    const std::size_t n = g.vertex_count();
    auto succ = g.successor_lists();
    SplitResult result;
    result.original_vertex_count = n;
    result.dummy_of.reserve(split_edges.size());
    std::vector<char> used(g.edge_count(), 0);
    for (EdgeId e : split_edges) {
        if (e >= g.edge_count())
            throw GraphError(GraphErrc::EdgeNotFound, "edge id " + std::to_string(e) + " not in graph");
        if (used[e]) throw GraphError(GraphErrc::EdgeNotFound, "edge id " + std::to_string(e) + " split twice");
        used[e] = 1;
        const Edge& edge = g.edge(e);
        const auto d = static_cast<VertexId>(n + result.dummy_of.size());
        succ[edge.tail][g.position_at_tail(e)] = d;
        result.dummy_of.push_back(edge);
    }
    for (const Edge& edge : result.dummy_of) succ.push_back({edge.head});
    result.graph = build_graph(succ.size(), g.source(), g.sink(), succ);
    return result;
}

SplitResult apply_splits(const EmbeddedStGraph& g, const SplitPlan& plan) {
    return apply_splits(g, plan.split_edges);
}

EmbeddedStGraph contract_splits(const SplitResult& r) {
    const std::size_t n = r.original_vertex_count;
    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : r.graph.successors(u)) succ[u].push_back(r.is_dummy(v) ? r.original_edge(v).head : v);
    }
    return build_graph(n, r.graph.source(), r.graph.sink(), succ);
}

std::size_t minimum_splits_bruteforce(const EmbeddedStGraph& g, std::size_t budget, std::size_t edge_limit) {
    const std::size_t m = g.edge_count();
    if (m > edge_limit)
        throw GraphError(GraphErrc::TooLarge,
                         std::to_string(m) + " edges exceed the limit of " + std::to_string(edge_limit));
    const auto accepted = [&](const std::vector<EdgeId>& subset) {
        const SplitResult r = apply_splits(g, subset);
        return std::holds_alternative<BitonicOrdering>(find_bitonic_ordering(r.graph));
    };
    for (std::size_t k = 0; k <= std::min(budget, m); ++k) {
        std::vector<EdgeId> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<EdgeId>(i);
        while (true) {
            if (accepted(subset)) return k;
            // Next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return budget + 1;
}

std::string format_plan(const EmbeddedStGraph& g, const SplitPlan& plan) {
    std::ostringstream out;
    for (EdgeId e : plan.split_edges) out << "split " << g.edge(e).tail << ' ' << g.edge(e).head << '\n';
    out << "total " << plan.split_edges.size() << '\n';
    return out.str();
}

std::string format_split_result(const SplitResult& r) {
    std::ostringstream out;
    out << to_text(r.graph);
    for (std::size_t k = 0; k < r.dummy_of.size(); ++k)
        out << "dummy " << r.original_vertex_count + k << ' ' << r.dummy_of[k].tail << ' ' << r.dummy_of[k].head
            << '\n';
    return out.str();
}

}  // namespace bitonic
