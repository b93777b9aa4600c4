#include "bitonic/ordering.hpp"

#include <functional>
#include <queue>
#include <sstream>

namespace bitonic {

std::vector<VertexId> BitonicOrdering::sequence() const {
    std::vector<VertexId> seq(rank.size());
    for (VertexId v = 0; v < rank.size(); ++v) seq[rank[v] - 1] = v;
    return seq;
}

bool is_bitonic(std::span<const std::size_t> seq) {
    std::size_t i = 1;
    while (i < seq.size() && seq[i - 1] < seq[i]) ++i;
    while (i < seq.size() && seq[i - 1] > seq[i]) ++i;
    return i >= seq.size();
}

OrderingResult find_bitonic_ordering(const EmbeddedStGraph& g, const FaceIndex& fi) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> augment;
    for (VertexId u = 0; u < n; ++u) {
        const std::size_t m = g.out_degree(u);
        bool decreasing = false;
        std::size_t apex = 0;
        for (std::size_t i = 1; i < m; ++i) {
            const VertexId vi = g.successor(u, i - 1);
            const VertexId vnext = g.successor(u, i);
            const VertexId w = face_sink(fi, u, i);
            if (w == vnext && decreasing) return RejectionWitness{u, apex, i};
            if (w == vi && !decreasing) {
                decreasing = true;
                apex = i;
            }
            if (w != vi && w != vnext) augment.push_back(decreasing ? Edge{vnext, vi} : Edge{vi, vnext});
        }
    }

    // Topological sort of G plus the augmentation edges.
    std::vector<std::uint32_t> indeg(n, 0);
    std::vector<std::uint32_t> extra_offset(n + 1, 0);
    for (const Edge& e : g.edges()) ++indeg[e.head];
    for (const Edge& e : augment) {
        ++indeg[e.head];
        ++extra_offset[e.tail + 1];
    }
    for (std::size_t v = 0; v < n; ++v) extra_offset[v + 1] += extra_offset[v];
    std::vector<VertexId> extra(augment.size());
    {
        std::vector<std::uint32_t> fill(extra_offset.begin(), extra_offset.end() - 1);
        for (const Edge& e : augment) extra[fill[e.tail]++] = e.head;
    }

    BitonicOrdering ord;
    ord.rank.assign(n, 0);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::size_t next_rank = 1;
    const auto relax = [&](VertexId v) {
        if (--indeg[v] == 0) ready.push(v);
    };
    while (!ready.empty()) {
        const VertexId u = ready.top();
        ready.pop();
        ord.rank[u] = next_rank++;
        for (EdgeId e : g.out_edges(u)) relax(g.edge(e).head);
        for (std::uint32_t k = extra_offset[u]; k < extra_offset[u + 1]; ++k) relax(extra[k]);
    }
    if (next_rank != n + 1)
        throw std::logic_error("augmented graph is cyclic; face structure does not match the graph");
    ord.augment_edges = std::move(augment);
    return ord;
}

OrderingResult find_bitonic_ordering(const EmbeddedStGraph& g) {
    return find_bitonic_ordering(g, compute_faces(g));
}

bool verify_bitonic_ordering(const EmbeddedStGraph& g, const BitonicOrdering& ord) {
    const std::size_t n = g.vertex_count();
    if (ord.rank.size() != n) return false;
    std::vector<char> used(n + 1, 0);
    for (std::size_t r : ord.rank) {
        if (r < 1 || r > n || used[r]) return false;
        used[r] = 1;
    }
    if (ord.rank[g.source()] != 1 || ord.rank[g.sink()] != n) return false;
    for (const Edge& e : g.edges())
        if (ord.rank[e.tail] >= ord.rank[e.head]) return false;
    std::vector<std::size_t> seq;
    for (VertexId u = 0; u < n; ++u) {
        seq.clear();
        for (EdgeId e : g.out_edges(u)) seq.push_back(ord.rank[g.edge(e).head]);
        if (!is_bitonic(seq)) return false;
    }
    return true;
}

namespace {

struct TopoEnumerator {
    const EmbeddedStGraph& g;
    std::vector<std::uint32_t> indeg;
    std::vector<std::size_t> rank;
    std::vector<std::size_t> seq;
    std::size_t placed = 0;

    bool all_bitonic() {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            seq.clear();
            for (EdgeId e : g.out_edges(u)) seq.push_back(rank[g.edge(e).head]);
            if (!is_bitonic(seq)) return false;
        }
        return true;
    }

    bool search() {
        const std::size_t n = g.vertex_count();
        if (placed == n) return all_bitonic();
        for (VertexId v = 0; v < n; ++v) {
            if (rank[v] != 0 || indeg[v] != 0) continue;
            rank[v] = ++placed;
            for (EdgeId e : g.out_edges(v)) --indeg[g.edge(e).head];
            const bool found = search();
            for (EdgeId e : g.out_edges(v)) ++indeg[g.edge(e).head];
            rank[v] = 0;
            --placed;
            if (found) return true;
        }
        return false;
    }
};

}  // namespace

bool exists_bitonic_bruteforce(const EmbeddedStGraph& g, std::size_t vertex_limit) {
    if (g.vertex_count() > vertex_limit)
        throw GraphError(GraphErrc::TooLarge, std::to_string(g.vertex_count()) + " vertices exceed the limit of " +
                                                  std::to_string(vertex_limit));
    TopoEnumerator en{g, std::vector<std::uint32_t>(g.vertex_count(), 0),
                      std::vector<std::size_t>(g.vertex_count(), 0), {}, 0};
    for (const Edge& e : g.edges()) ++en.indeg[e.head];
    return en.search();
}

std::string format_ordering(const BitonicOrdering& ord) {
    std::ostringstream out;
    for (const Edge& e : ord.augment_edges) out << "# augment " << e.tail << ' ' << e.head << '\n';
    const auto seq = ord.sequence();
    for (std::size_t k = 0; k < seq.size(); ++k) out << k + 1 << ' ' << seq[k] << '\n';
    return out.str();
}

std::string format_witness(const RejectionWitness& w) {
    return "reject " + std::to_string(w.u) + ' ' + std::to_string(w.i) + ' ' + std::to_string(w.j) + '\n';
}

}  // namespace bitonic
