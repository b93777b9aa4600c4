// Random planar st-graphs by local mutation.
//
// Each face keeps its two boundary paths from source to sink. A mutation
// picks a face, a vertex a on one side and a vertex b on the other side that
// comes after a's side in the face order, and draws a new path a -> b through
// the face (a chord, or a chord subdivided by a new vertex). Vertices on
// opposite sides of a face are unrelated by paths unless one is the source
// or sink, so a -> b never closes a cycle. The outer face is kept as two
// halves whose only boundary is the leftmost or rightmost s-t path; a path
// drawn there runs between two vertices of that path in order.
//
// Pseudo-random stream: std::mt19937_64 seeded with cfg.seed. Bounded
// integers come from rejection sampling on the raw 64-bit output and unit
// reals from the top 53 bits, so the sequence does not depend on the
// standard library's distributions. The finished graph is renumbered in
// breadth-first topological order, so s = 0 and t = n - 1.

#include "bitonic/generator.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bitonic {

namespace {

class Stream {
public:
    explicit Stream(std::uint64_t seed) : rng_(seed) {}

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        for (;;) {
            const std::uint64_t r = rng_();
            if (r < limit) return r % bound;
        }
    }

    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
};

enum class Kind : std::uint8_t { Inner, OuterLeft, OuterRight };

struct Face {
    Kind kind = Kind::Inner;
    std::vector<VertexId> left, right;
};

struct EdgeInfo {
    std::uint32_t face_left = 0, face_right = 0;
    std::size_t slot = 0;  // index into Builder::edges
};

std::uint64_t key(VertexId a, VertexId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

class Builder {
public:
    Builder() : succ_{{1}, {}} {
        faces_.push_back({Kind::OuterLeft, {}, {0, 1}});
        faces_.push_back({Kind::OuterRight, {0, 1}, {}});
        edges_.push_back({0, 1});
        info_[key(0, 1)] = {0, 1, 0};
    }

    std::size_t vertex_count() const { return succ_.size(); }
    std::size_t face_count() const { return faces_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<VertexId>>& successors() const { return succ_; }

    // Draws a path from a to b through face f, subdivided by a new vertex if
    // subdivide is set. Returns false if the chord would be a parallel edge.
    bool add_path(std::uint32_t f, bool a_on_left, std::size_t ia, std::size_t ib, bool subdivide) {
        Face& face = faces_[f];
        if (face.kind == Kind::Inner) return add_inner(f, a_on_left, ia, ib, subdivide);
        const std::vector<VertexId>& p = face.kind == Kind::OuterLeft ? face.right : face.left;
        const VertexId a = p[ia], b = p[ib];
        if (!subdivide && (ib == ia + 1 || info_.count(key(a, b)))) return false;
        const VertexId w = subdivide ? new_vertex() : kNoVertex;
        const VertexId first = subdivide ? w : b;
        const bool outer_left = face.kind == Kind::OuterLeft;
        insert_successor(a, p[ia + 1], first, !outer_left);

        Face inner;
        inner.kind = Kind::Inner;
        std::vector<VertexId> seg(p.begin() + static_cast<std::ptrdiff_t>(ia),
                                  p.begin() + static_cast<std::ptrdiff_t>(ib) + 1);
        std::vector<VertexId> path = subdivide ? std::vector<VertexId>{a, w, b} : std::vector<VertexId>{a, b};
        std::vector<VertexId> outer(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ia));
        outer.insert(outer.end(), path.begin(), path.end());
        outer.insert(outer.end(), p.begin() + static_cast<std::ptrdiff_t>(ib) + 1, p.end());
        if (outer_left) {
            inner.left = path;
            inner.right = std::move(seg);
            faces_[f].right = std::move(outer);
        } else {
            inner.left = std::move(seg);
            inner.right = path;
            faces_[f].left = std::move(outer);
        }
        const auto g = static_cast<std::uint32_t>(faces_.size());
        faces_.push_back(std::move(inner));
        if (subdivide) succ_[w] = {b};
        relabel(g);
        // The new path has the outer half on its outer side.
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            auto& e = edge_info(path[k], path[k + 1]);
            if (outer_left) e.face_left = f;
            else e.face_right = f;
        }
        return true;
    }

    void split_edge(std::size_t slot) {
        const auto [a, b] = edges_[slot];
        const EdgeInfo old = info_.at(key(a, b));
        const VertexId w = new_vertex();
        for (auto& v : succ_[a])
            if (v == b) v = w;
        succ_[w] = {b};
        info_.erase(key(a, b));
        edges_[slot] = {a, w};
        info_[key(a, w)] = {old.face_left, old.face_right, slot};
        edges_.push_back({w, b});
        info_[key(w, b)] = {old.face_left, old.face_right, edges_.size() - 1};
        insert_after(faces_[old.face_left].right, a, w);
        insert_after(faces_[old.face_right].left, a, w);
    }

    const Face& face(std::uint32_t f) const { return faces_[f]; }

private:
    bool add_inner(std::uint32_t f, bool a_on_left, std::size_t ia, std::size_t ib, bool subdivide) {
        Face& face = faces_[f];
        const std::vector<VertexId>& from = a_on_left ? face.left : face.right;
        const std::vector<VertexId>& to = a_on_left ? face.right : face.left;
        const VertexId a = from[ia], b = to[ib];
        if (!subdivide && info_.count(key(a, b))) return false;
        const VertexId w = subdivide ? new_vertex() : kNoVertex;
        const VertexId first = subdivide ? w : b;
        insert_successor(a, from[ia + 1], first, a_on_left);
        if (subdivide) succ_[w] = {b};

        std::vector<VertexId> tail_path = subdivide ? std::vector<VertexId>{a, w, b} : std::vector<VertexId>{a, b};
        // Part below the new path: from's prefix up to a, then the path; to's
        // prefix up to b.
        std::vector<VertexId> lower_from(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(ia));
        lower_from.insert(lower_from.end(), tail_path.begin(), tail_path.end());
        std::vector<VertexId> lower_to(to.begin(), to.begin() + static_cast<std::ptrdiff_t>(ib) + 1);
        // Part above: the path then to's suffix after b; from's suffix from a.
        std::vector<VertexId> upper_to = tail_path;
        upper_to.insert(upper_to.end(), to.begin() + static_cast<std::ptrdiff_t>(ib) + 1, to.end());
        std::vector<VertexId> upper_from(from.begin() + static_cast<std::ptrdiff_t>(ia), from.end());

        Face upper;
        upper.kind = Kind::Inner;
        if (a_on_left) {
            face.left = std::move(lower_from);
            face.right = std::move(lower_to);
            upper.left = std::move(upper_from);
            upper.right = std::move(upper_to);
        } else {
            face.right = std::move(lower_from);
            face.left = std::move(lower_to);
            upper.right = std::move(upper_from);
            upper.left = std::move(upper_to);
        }
        const auto g = static_cast<std::uint32_t>(faces_.size());
        faces_.push_back(std::move(upper));
        relabel(g);
        // The lower face lies right of a left-to-right path.
        for (std::size_t k = 0; k + 1 < tail_path.size(); ++k) {
            auto& e = edge_info(tail_path[k], tail_path[k + 1]);
            if (a_on_left) e.face_right = f;
            else e.face_left = f;
        }
        return true;
    }

    VertexId new_vertex() {
        succ_.emplace_back();
        return static_cast<VertexId>(succ_.size() - 1);
    }

    EdgeInfo& edge_info(VertexId a, VertexId b) {
        auto [it, fresh] = info_.try_emplace(key(a, b));
        if (fresh) {
            it->second.slot = edges_.size();
            edges_.push_back({a, b});
        }
        return it->second;
    }

    // Places x next to neighbour in S(a): right of it if after is set.
    void insert_successor(VertexId a, VertexId neighbour, VertexId x, bool after) {
        auto& list = succ_[a];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == neighbour) {
                list.insert(list.begin() + static_cast<std::ptrdiff_t>(after ? i + 1 : i), x);
                return;
            }
        throw std::logic_error("generator: boundary edge missing from rotation");
    }

    static void insert_after(std::vector<VertexId>& path, VertexId a, VertexId w) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (path[i] == a) {
                path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
                return;
            }
        throw std::logic_error("generator: split edge missing from face boundary");
    }

    // Points the edges on the boundary of face g at g.
    void relabel(std::uint32_t g) {
        const Face& face = faces_[g];
        for (std::size_t k = 0; k + 1 < face.left.size(); ++k) edge_info(face.left[k], face.left[k + 1]).face_right = g;
        for (std::size_t k = 0; k + 1 < face.right.size(); ++k)
            edge_info(face.right[k], face.right[k + 1]).face_left = g;
    }

    std::vector<std::vector<VertexId>> succ_;
    std::vector<Face> faces_;
    std::vector<Edge> edges_;
    std::unordered_map<std::uint64_t, EdgeInfo> info_;

public:
    const std::vector<Edge>& edges() const { return edges_; }
};

constexpr int kMaxChordFailures = 64;

// Numbers vertices in breadth-first topological order from s, keeping
// neighbouring vertices close in memory.
EmbeddedStGraph renumber(const std::vector<std::vector<VertexId>>& succ) {
    const std::size_t n = succ.size();
    std::vector<std::uint32_t> indeg(n, 0);
    for (const auto& list : succ)
        for (VertexId v : list) ++indeg[v];
    std::vector<VertexId> order{0};
    order.reserve(n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (VertexId v : succ[order[i]])
            if (--indeg[v] == 0) order.push_back(v);
    if (order.size() != n) throw std::logic_error("generator: graph is not acyclic");
    std::vector<VertexId> id(n);
    for (std::size_t i = 0; i < n; ++i) id[order[i]] = static_cast<VertexId>(i);
    std::vector<std::vector<VertexId>> lists(n);
    for (std::size_t i = 0; i < n; ++i) {
        lists[i].reserve(succ[order[i]].size());
        for (VertexId v : succ[order[i]]) lists[i].push_back(id[v]);
    }
    return build_graph(n, id[0], id[1], lists);
}

}  // namespace

EmbeddedStGraph generate_random_st_graph(const GeneratorConfig& cfg) {
    if (cfg.n_target < 2) throw std::invalid_argument("generator needs n_target >= 2");
    if (cfg.n_target > std::numeric_limits<VertexId>::max() / 4)
        throw std::invalid_argument("generator n_target too large");
    double total = 0;
    for (double p : cfg.op_mix) {
        if (!(p >= 0)) throw std::invalid_argument("generator op_mix entries must be non-negative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("generator op_mix must sum to 1");

    Stream rng(cfg.seed);
    Builder b;
    int chord_failures = 0;
    while (b.vertex_count() < cfg.n_target) {
        const double r = rng.unit();
        int op = r < cfg.op_mix[0] ? 0 : (r < cfg.op_mix[0] + cfg.op_mix[1] ? 1 : 2);
        if (op == 1 && chord_failures >= kMaxChordFailures) op = 0;
        if (op == 2 && cfg.op_mix[2] <= 0) op = 0;

        if (op == 2) {
            b.split_edge(rng.below(b.edge_count()));
        } else {
            const auto f = static_cast<std::uint32_t>(rng.below(b.face_count()));
            const Face& face = b.face(f);
            bool added = false;
            if (face.kind == Kind::Inner) {
                // a from one side, excluding the sink; b from the other,
                // excluding the source.
                const bool a_on_left = rng.below(2) == 0;
                const auto& from = a_on_left ? face.left : face.right;
                const auto& to = a_on_left ? face.right : face.left;
                const std::size_t ia = rng.below(from.size() - 1);
                const std::size_t ib = 1 + rng.below(to.size() - 1);
                added = b.add_path(f, a_on_left, ia, ib, op == 0);
            } else {
                const auto& p = face.kind == Kind::OuterLeft ? face.right : face.left;
                std::size_t ia = rng.below(p.size());
                std::size_t ib = rng.below(p.size() - 1);
                if (ib >= ia) ++ib;
                if (ia > ib) std::swap(ia, ib);
                added = b.add_path(f, false, ia, ib, op == 0);
            }
            if (op == 1) chord_failures = added ? 0 : chord_failures + 1;
        }
        if (cfg.validate_each_step) (void)build_graph(b.vertex_count(), 0, 1, b.successors());
    }
    return renumber(b.successors());
}

std::string generator_header(const GeneratorConfig& cfg) {
    return std::string("# generator ") + kGeneratorStream + " seed " + std::to_string(cfg.seed) + " n " +
           std::to_string(cfg.n_target) + "\n";
}

}  // namespace bitonic
