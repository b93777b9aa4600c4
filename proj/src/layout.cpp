#include "bitonic/layout.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bitonic/faces.hpp"

namespace bitonic {

const char* to_string(LayoutErrc code) {
    switch (code) {
        case LayoutErrc::OrderingInvalid: return "OrderingInvalid";
        case LayoutErrc::NonIntegerCoordinate: return "NonIntegerCoordinate";
        case LayoutErrc::MissingCoordinate: return "MissingCoordinate";
        case LayoutErrc::MalformedDrawing: return "MalformedDrawing";
        case LayoutErrc::Internal: return "Internal";
    }
    return "Unknown";
}

LayoutError::LayoutError(LayoutErrc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

std::size_t PolylineDrawing::bend_count() const {
    std::size_t total = 0;
    for (const auto& b : bends) total += b.size();
    return total;
}

PolylineDrawing to_polyline(const EmbeddedStGraph& g, const GridDrawing& d) {
    return PolylineDrawing{d.position, std::vector<std::vector<Point>>(g.edge_count()), d.translation};
}

namespace {

constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

// Contour of the shifting method. Slots 0..n-1 are the graph vertices, n and
// n+1 the artificial left and right ends. While a vertex is on the contour
// its x is the offset to its contour predecessor; once covered it is the
// offset to its parent, the vertex that covered it.
struct Contour {
    std::vector<Coord> x, y;
    std::vector<std::uint32_t> next, prev, parent;
    std::vector<char> on_contour;

    explicit Contour(std::size_t slots)
        : x(slots, 0), y(slots, 0), next(slots, kNil), prev(slots, kNil), parent(slots, kNil), on_contour(slots, 0) {}

    void link(std::uint32_t a, std::uint32_t b) {
        next[a] = b;
        prev[b] = a;
    }
};

[[noreturn]] void internal(const std::string& what) { throw LayoutError(LayoutErrc::Internal, what); }

}  // namespace

GridDrawing draw_straightline(const EmbeddedStGraph& g, const BitonicOrdering& ord) {
    if (!verify_bitonic_ordering(g, ord))
        throw LayoutError(LayoutErrc::OrderingInvalid, "not a bitonic st-ordering of the graph");
    const std::size_t n = g.vertex_count();
    GridDrawing out;
    out.position.assign(n, {});
    if (n == 2) {
        out.position[g.source()] = {0, 0};
        out.position[g.sink()] = {0, 1};
        return out;
    }

    const auto left_end = static_cast<std::uint32_t>(n);
    const auto right_end = static_cast<std::uint32_t>(n + 1);
    const std::vector<VertexId> seq = ord.sequence();
    Contour c(n + 2);

    const VertexId s = seq[0];
    c.x[left_end] = 0;
    c.y[left_end] = 0;
    c.x[s] = 1;
    c.y[s] = 1;
    c.x[right_end] = 1;
    c.y[right_end] = 0;
    c.link(left_end, s);
    c.link(s, right_end);
    c.on_contour[left_end] = c.on_contour[s] = c.on_contour[right_end] = 1;

    for (std::size_t k = 2; k <= n; ++k) {
        const VertexId v = seq[k - 1];
        const auto in = g.in_edges(v);
        std::uint32_t wl = g.edge(in.front()).tail;
        std::uint32_t wr = g.edge(in.back()).tail;

        if (in.size() == 1) {
            // Single predecessor u: borrow the contour neighbour on each side
            // where every successor of u on that side is already placed.
            const VertexId u = wl;
            const std::size_t pos = g.position_at_tail(in.front());
            const std::size_t m = g.out_degree(u);
            const bool left_support = pos == 0 || ord.rank[g.successor(u, pos - 1)] <= k;
            const bool right_support = pos + 1 == m || ord.rank[g.successor(u, pos + 1)] <= k;
            if (!left_support && !right_support)
                internal("vertex " + std::to_string(v) + " has neither left nor right support");
            if (!c.on_contour[u]) internal("predecessor of " + std::to_string(v) + " not on the contour");
            if (left_support) wl = c.prev[u];
            if (right_support) wr = c.next[u];
        }

        // Walk the contour from wl to wr, checking that the predecessors of v
        // appear on it in embedding order, and add up the offsets.
        Coord d = 2;
        {
            if (!c.on_contour[wl]) internal("predecessor of " + std::to_string(v) + " not on the contour");
            std::size_t expect = (in.size() > 1) ? 1 : 0;
            if (in.size() > 1 && wl != g.edge(in.front()).tail) internal("contour order broken");
            std::uint32_t w = wl;
            while (w != wr) {
                w = c.next[w];
                if (w == kNil) internal("contour walk left the contour");
                if (w == right_end && wr != right_end) internal("right end reached before the last predecessor");
                d += c.x[w];
                if (in.size() > 1 && expect < in.size() && w == g.edge(in[expect]).tail) ++expect;
            }
            if (in.size() > 1 && expect != in.size())
                internal("predecessors of " + std::to_string(v) + " are not consecutive on the contour");
        }

        const Coord num_x = d + c.y[wr] - c.y[wl];
        if (num_x % 2 != 0)
            throw LayoutError(LayoutErrc::NonIntegerCoordinate,
                              "odd distance while placing vertex " + std::to_string(v));
        const Coord xv = num_x / 2;
        const Coord yv = (d + c.y[wr] + c.y[wl]) / 2;

        Coord offset = 1 - xv;
        for (std::uint32_t w = c.next[wl]; w != wr; w = c.next[w]) {
            c.parent[w] = v;
            c.on_contour[w] = 0;
            offset += c.x[w];
            c.x[w] = offset;
        }
        c.x[wr] = d - xv;
        c.x[v] = xv;
        c.y[v] = yv;
        c.link(wl, v);
        c.link(v, wr);
        c.on_contour[v] = 1;
    }

    // Absolute positions: prefix sums along the final contour, then every
    // covered vertex relative to its parent, parents first.
    std::vector<Coord> abs_x(n + 2, 0);
    {
        Coord acc = 0;
        for (std::uint32_t w = left_end; w != kNil; w = c.next[w]) {
            acc += c.x[w];
            abs_x[w] = acc;
        }
    }
    for (std::size_t k = n; k >= 1; --k) {
        const VertexId v = seq[k - 1];
        if (c.parent[v] != kNil) abs_x[v] = c.x[v] + abs_x[c.parent[v]];
    }

    Coord min_x = std::numeric_limits<Coord>::max(), min_y = std::numeric_limits<Coord>::max();
    for (VertexId v = 0; v < n; ++v) {
        min_x = std::min(min_x, abs_x[v]);
        min_y = std::min(min_y, c.y[v]);
    }
    out.translation = {-min_x, -min_y};
    for (VertexId v = 0; v < n; ++v) out.position[v] = {abs_x[v] - min_x, c.y[v] - min_y};
    return out;
}

PolylineRun run_polyline_pipeline(const EmbeddedStGraph& g, const PolylineOptions& options) {
    PolylineRun run;
    const FaceIndex fi = compute_faces(g);
    run.plan = options.strategy == SplitStrategy::Minimum ? minimum_split_plan(g, fi) : transitive_split_plan(g, fi);
    run.split = apply_splits(g, run.plan);
    auto result = find_bitonic_ordering(run.split.graph);
    if (!std::holds_alternative<BitonicOrdering>(result))
        internal("split graph still has a forbidden configuration");
    run.ordering = std::get<BitonicOrdering>(std::move(result));
    run.grid = draw_straightline(run.split.graph, run.ordering);

    const std::size_t n = g.vertex_count();
    PolylineDrawing& d = run.drawing;
    d.position.assign(run.grid.position.begin(), run.grid.position.begin() + static_cast<std::ptrdiff_t>(n));
    d.bends.assign(g.edge_count(), {});
    d.translation = run.grid.translation;
    for (std::size_t k = 0; k < run.plan.split_edges.size(); ++k) {
        const EdgeId e = run.plan.split_edges[k];
        const Point bend = run.grid.position[n + k];
        const Point a = d.position[g.edge(e).tail];
        const Point b = d.position[g.edge(e).head];
        const Coord cross = (b.x - a.x) * (bend.y - a.y) - (b.y - a.y) * (bend.x - a.x);
        if (options.drop_collinear_bends && cross == 0) continue;
        d.bends[e].push_back(bend);
    }
    return run;
}

PolylineDrawing draw_polyline(const EmbeddedStGraph& g, const PolylineOptions& options) {
    return run_polyline_pipeline(g, options).drawing;
}

std::string format_drawing(const EmbeddedStGraph& g, const PolylineDrawing& d) {
    std::ostringstream out;
    out << "# translate " << d.translation.x << ' ' << d.translation.y << '\n';
    for (VertexId v = 0; v < d.position.size(); ++v) out << v << ' ' << d.position[v].x << ' ' << d.position[v].y << '\n';
    for (EdgeId e = 0; e < d.bends.size(); ++e)
        for (const Point& p : d.bends[e])
            out << "bend " << g.edge(e).tail << ' ' << g.edge(e).head << ' ' << p.x << ' ' << p.y << '\n';
    return out.str();
}

std::string format_drawing(const EmbeddedStGraph& g, const GridDrawing& d) {
    return format_drawing(g, to_polyline(g, d));
}

PolylineDrawing parse_drawing(std::string_view text, const EmbeddedStGraph& g) {
    const std::size_t n = g.vertex_count();
    PolylineDrawing d;
    d.position.assign(n, {});
    d.bends.assign(g.edge_count(), {});
    std::vector<char> have(n, 0);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    const auto fail = [&](const std::string& what) {
        throw LayoutError(LayoutErrc::MalformedDrawing, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') {
            std::string key;
            if (ls >> key && key == "translate") ls >> d.translation.x >> d.translation.y;
            continue;
        }
        if (first == "bend") {
            long long u = 0, v = 0;
            Point p;
            if (!(ls >> u >> v >> p.x >> p.y)) fail("expected 'bend u v x y'");
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                fail("bend endpoint out of range");
            const EdgeId e = g.find_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            if (e == kNoEdge)
                throw GraphError(GraphErrc::EdgeNotFound,
                                 "bend on non-edge " + std::to_string(u) + " -> " + std::to_string(v));
            d.bends[e].push_back(p);
            continue;
        }
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(first, &used);
        } catch (const std::exception&) {
            fail("expected 'v x y'");
        }
        if (used != first.size() || v < 0 || static_cast<std::size_t>(v) >= n) fail("vertex out of range");
        Point p;
        if (!(ls >> p.x >> p.y)) fail("expected 'v x y'");
        d.position[static_cast<std::size_t>(v)] = p;
        have[static_cast<std::size_t>(v)] = 1;
    }
    for (VertexId v = 0; v < n; ++v)
        if (!have[v]) throw LayoutError(LayoutErrc::MissingCoordinate, "no coordinate for vertex " + std::to_string(v));
    return d;
}

}  // namespace bitonic
