#include "bitonic/validate.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bitonic {

namespace geometry {

__extension__ typedef __int128 Wide;

int orientation(Point a, Point b, Point c) {
    const Wide v = static_cast<Wide>(b.x - a.x) * (c.y - a.y) - static_cast<Wide>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
}

namespace {

// c lies within the bounding box of [a, b]; meaningful when collinear.
bool in_box(Point a, Point b, Point c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
        if (o1 != 0 || o2 != 0) return true;
    }
    if (o1 == 0 && in_box(a, b, c)) return true;
    if (o2 == 0 && in_box(a, b, d)) return true;
    if (o3 == 0 && in_box(c, d, a)) return true;
    if (o4 == 0 && in_box(c, d, b)) return true;
    return false;
}

bool pieces_conflict(Point a, Point b, Point c, Point d) {
    const bool ac = a == c, ad = a == d, bc = b == c, bd = b == d;
    const int shared = ac + ad + bc + bd;
    if (shared >= 2) return true;
    if (shared == 0) return segments_intersect(a, b, c, d);
    // Exactly one shared endpoint p; the pieces conflict only if they leave p
    // in the same direction.
    const Point p = (ac || ad) ? a : b;
    const Point u = (p == a) ? b : a;
    const Point w = (p == c) ? d : c;
    if (orientation(p, u, w) != 0) return false;
    const Wide dot = static_cast<Wide>(u.x - p.x) * (w.x - p.x) + static_cast<Wide>(u.y - p.y) * (w.y - p.y);
    return dot > 0;
}

}  // namespace geometry

namespace {

using geometry::Wide;

struct Piece {
    Point lo, hi;  // lo.y <= hi.y
    EdgeId edge;
    std::size_t index;
};

std::string describe(const EmbeddedStGraph& g, const Piece& p) {
    const Edge& e = g.edge(p.edge);
    return "edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) + " piece " + std::to_string(p.index);
}

constexpr std::size_t kMaxReported = 20;

void pairwise(const EmbeddedStGraph& g, const std::vector<Piece>& pieces, ValidationReport& rep) {
    std::size_t reported = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        const Coord pminx = std::min(p.lo.x, p.hi.x), pmaxx = std::max(p.lo.x, p.hi.x);
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            const Piece& q = pieces[j];
            if (q.hi.y < p.lo.y || q.lo.y > p.hi.y) continue;
            if (std::max(q.lo.x, q.hi.x) < pminx || std::min(q.lo.x, q.hi.x) > pmaxx) continue;
            if (geometry::pieces_conflict(p.lo, p.hi, q.lo, q.hi)) {
                rep.planar = false;
                if (reported++ < kMaxReported)
                    rep.violations.push_back("crossing: " + describe(g, p) + " and " + describe(g, q));
            }
        }
    }
}

// Shamos-Hoey style sweep from bottom to top over strictly rising pieces.
// Stops at the first conflict.
class Sweep {
public:
    Sweep(const EmbeddedStGraph& g, const std::vector<Piece>& pieces) : g_(g), pieces_(pieces), status_(Less{this}) {}

    std::optional<std::string> run() {
        struct Event {
            Point p;
            std::vector<std::uint32_t> starts, ends;
        };
        std::vector<std::pair<Point, std::pair<std::uint32_t, bool>>> raw;
        raw.reserve(2 * pieces_.size());
        for (std::uint32_t i = 0; i < pieces_.size(); ++i) {
            raw.push_back({pieces_[i].lo, {i, true}});
            raw.push_back({pieces_[i].hi, {i, false}});
        }
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
            if (a.first.y != b.first.y) return a.first.y < b.first.y;
            if (a.first.x != b.first.x) return a.first.x < b.first.x;
            return a.second < b.second;
        });
        iters_.resize(pieces_.size());
        for (std::size_t i = 0; i < raw.size();) {
            Event ev{raw[i].first, {}, {}};
            for (; i < raw.size() && raw[i].first == ev.p; ++i)
                (raw[i].second.second ? ev.starts : ev.ends).push_back(raw[i].second.first);
            if (auto bad = handle(ev.p, ev.starts, ev.ends)) return bad;
        }
        return std::nullopt;
    }

private:
    struct Less {
        const Sweep* self;
        using is_transparent = void;
        bool operator()(std::uint32_t a, std::uint32_t b) const { return self->before(a, b); }
        bool operator()(std::uint32_t a, const Point& p) const { return self->x_cmp(a, p) < 0; }
        bool operator()(const Point& p, std::uint32_t a) const { return self->x_cmp(a, p) > 0; }
    };

    // Sign of x(piece at p.y) - p.x.
    int x_cmp(std::uint32_t a, const Point& p) const {
        const Piece& s = pieces_[a];
        const Coord dy = s.hi.y - s.lo.y;
        const Wide lhs = static_cast<Wide>(s.lo.x) * dy + static_cast<Wide>(s.hi.x - s.lo.x) * (p.y - s.lo.y);
        const Wide rhs = static_cast<Wide>(p.x) * dy;
        return (lhs > rhs) - (lhs < rhs);
    }

    // Order just above the current sweep line.
    bool before(std::uint32_t a, std::uint32_t b) const {
        if (a == b) return false;
        const Piece& s = pieces_[a];
        const Piece& t = pieces_[b];
        const Coord dys = s.hi.y - s.lo.y, dyt = t.hi.y - t.lo.y;
        const Wide xs = static_cast<Wide>(s.lo.x) * dys + static_cast<Wide>(s.hi.x - s.lo.x) * (y_ - s.lo.y);
        const Wide xt = static_cast<Wide>(t.lo.x) * dyt + static_cast<Wide>(t.hi.x - t.lo.x) * (y_ - t.lo.y);
        const Wide l = xs * dyt, r = xt * dys;
        if (l != r) return l < r;
        const Wide ds = static_cast<Wide>(s.hi.x - s.lo.x) * dyt, dt = static_cast<Wide>(t.hi.x - t.lo.x) * dys;
        if (ds != dt) return ds < dt;
        return a < b;
    }

    std::optional<std::string> check(std::uint32_t a, std::uint32_t b) const {
        const Piece& p = pieces_[a];
        const Piece& q = pieces_[b];
        if (geometry::pieces_conflict(p.lo, p.hi, q.lo, q.hi))
            return "crossing: " + describe(g_, p) + " and " + describe(g_, q);
        return std::nullopt;
    }

    std::optional<std::string> handle(const Point& p, const std::vector<std::uint32_t>& starts,
                                      const std::vector<std::uint32_t>& ends) {
        // Pieces through p at height p.y: those ending here plus any that
        // pass through p, which is a conflict.
        for (auto it = status_.lower_bound(p); it != status_.end() && x_cmp(*it, p) == 0; ++it) {
            if (pieces_[*it].hi == p) continue;
            const std::uint32_t other = !starts.empty() ? starts.front() : ends.front();
            return "crossing: " + describe(g_, pieces_[*it]) + " passes through an endpoint of " +
                   describe(g_, pieces_[other]);
        }
        for (std::uint32_t a : ends) status_.erase(iters_[a]);
        y_ = p.y;
        if (starts.empty()) {
            auto right = status_.lower_bound(p);
            if (right != status_.end() && right != status_.begin())
                if (auto bad = check(*std::prev(right), *right)) return bad;
            return std::nullopt;
        }
        for (std::uint32_t a : starts) iters_[a] = status_.insert(a).first;
        auto first = iters_[starts.front()], last = iters_[starts.front()];
        for (std::uint32_t a : starts) {
            if (before(a, *first)) first = iters_[a];
            if (before(*last, a)) last = iters_[a];
        }
        for (auto it = first; it != last;) {
            const auto nx = std::next(it);
            if (auto bad = check(*it, *nx)) return bad;
            it = nx;
        }
        if (first != status_.begin())
            if (auto bad = check(*std::prev(first), *first)) return bad;
        if (auto nx = std::next(last); nx != status_.end())
            if (auto bad = check(*last, *nx)) return bad;
        return std::nullopt;
    }

    const EmbeddedStGraph& g_;
    const std::vector<Piece>& pieces_;
    Coord y_ = std::numeric_limits<Coord>::min();
    std::set<std::uint32_t, Less> status_;
    std::vector<std::set<std::uint32_t, Less>::iterator> iters_;
};

}  // namespace

ValidationReport check_upward_planar(const EmbeddedStGraph& g, const PolylineDrawing& d, CrossingCheck method) {
    if (d.position.size() != g.vertex_count())
        throw LayoutError(LayoutErrc::MissingCoordinate, "drawing has " + std::to_string(d.position.size()) +
                                                             " vertex coordinates for " +
                                                             std::to_string(g.vertex_count()) + " vertices");
    if (!d.bends.empty() && d.bends.size() != g.edge_count())
        throw LayoutError(LayoutErrc::MalformedDrawing, "bend table does not match the edge count");

    ValidationReport rep;
    Coord min_x = std::numeric_limits<Coord>::max(), max_x = std::numeric_limits<Coord>::min();
    Coord min_y = min_x, max_y = max_x;
    // Every drawn point with the element it belongs to: vertex v, or bend
    // k of edge e.
    std::vector<std::pair<Point, std::pair<std::uint64_t, std::uint64_t>>> points;
    const auto add_point = [&](Point p, std::uint64_t a, std::uint64_t b) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
        points.push_back({p, {a, b}});
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) add_point(d.position[v], 0, v);

    std::vector<Piece> pieces;
    pieces.reserve(g.edge_count() + d.bend_count());
    bool horizontal = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::vector<Point> none;
        const auto& bends = d.bends.empty() ? none : d.bends[e];
        rep.bends_total += bends.size();
        rep.bends_max_per_edge = std::max(rep.bends_max_per_edge, bends.size());
        Point prev = d.position[g.edge(e).tail];
        for (std::size_t k = 0; k <= bends.size(); ++k) {
            const Point next = k < bends.size() ? bends[k] : d.position[g.edge(e).head];
            if (k < bends.size()) add_point(next, 1 + e, k);
            if (next.y <= prev.y) {
                rep.upward = false;
                if (rep.violations.size() < kMaxReported)
                    rep.violations.push_back("not upward: edge " + std::to_string(g.edge(e).tail) + "->" +
                                             std::to_string(g.edge(e).head) + " piece " + std::to_string(k));
            }
            if (next.y == prev.y) horizontal = true;
            pieces.push_back(prev.y <= next.y ? Piece{prev, next, e, k} : Piece{next, prev, e, k});
            prev = next;
        }
    }
    rep.width = max_x - min_x;
    rep.height = max_y - min_y;

    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        if (a.first.y != b.first.y) return a.first.y < b.first.y;
        if (a.first.x != b.first.x) return a.first.x < b.first.x;
        return a.second < b.second;
    });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first == points[i - 1].first) {
            rep.planar = false;
            rep.violations.push_back("coincident points at (" + std::to_string(points[i].first.x) + ", " +
                                     std::to_string(points[i].first.y) + ")");
            break;
        }
    }

    if (method == CrossingCheck::Auto) method = pieces.size() <= 3000 ? CrossingCheck::Pairwise : CrossingCheck::Sweep;
    if (method == CrossingCheck::Sweep && (horizontal || !rep.planar)) method = CrossingCheck::Pairwise;
    if (method == CrossingCheck::Pairwise) {
        pairwise(g, pieces, rep);
    } else if (auto bad = Sweep(g, pieces).run()) {
        rep.planar = false;
        rep.violations.push_back(*bad);
    }
    return rep;
}

ValidationReport check_upward_planar(const EmbeddedStGraph& g, const GridDrawing& d, CrossingCheck method) {
    return check_upward_planar(g, to_polyline(g, d), method);
}

bool check_bounds(const ValidationReport& report, std::size_t n, DrawingMode mode) {
    const auto nn = static_cast<Coord>(n);
    if (mode == DrawingMode::StraightLine || n < 3)
        return report.bends_total == 0 && report.width <= 2 * nn - 2 && report.height <= nn - 1;
    return report.bends_max_per_edge <= 1 && static_cast<Coord>(report.bends_total) <= nn - 3 &&
           report.width <= 4 * nn - 8 && report.height <= 2 * nn - 4;
}

bool check_bounds(const EmbeddedStGraph& g, const PolylineDrawing& d, DrawingMode mode) {
    return check_bounds(check_upward_planar(g, d), g.vertex_count(), mode);
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    out << "upward " << (upward ? "yes" : "no") << '\n'
        << "planar " << (planar ? "yes" : "no") << '\n'
        << "box " << width << 'x' << height << '\n'
        << "bends " << bends_total << " (max " << bends_max_per_edge << " per edge)\n";
    for (const auto& v : violations) out << "violation " << v << '\n';
    return out.str();
}

std::string ValidationReport::to_json() const {
    nlohmann::json doc;
    doc["upward"] = upward;
    doc["planar"] = planar;
    doc["width"] = width;
    doc["height"] = height;
    doc["bends_total"] = bends_total;
    doc["bends_max_per_edge"] = bends_max_per_edge;
    doc["violations"] = violations;
    return doc.dump() + "\n";
}

}  // namespace bitonic
