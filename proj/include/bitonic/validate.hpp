#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitonic/graph.hpp"
#include "bitonic/layout.hpp"

namespace bitonic {

struct ValidationReport {
    bool upward = true;
    bool planar = true;
    Coord width = 0;
    Coord height = 0;
    std::size_t bends_total = 0;
    std::size_t bends_max_per_edge = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    std::string to_text() const;
    std::string to_json() const;
};

enum class CrossingCheck {
    Auto,       ///< pairwise for small drawings, sweep otherwise
    Pairwise,   ///< all pairs of edge pieces
    Sweep,      ///< sweep line; falls back to pairwise for horizontal pieces
};

/// Verifies that every edge piece strictly rises from tail to head and that
/// no two pieces meet except at a shared endpoint. Exact integer arithmetic.
/// Throws LayoutError(MissingCoordinate) if the drawing does not cover g.
ValidationReport check_upward_planar(const EmbeddedStGraph& g, const PolylineDrawing& d,
                                     CrossingCheck method = CrossingCheck::Auto);
ValidationReport check_upward_planar(const EmbeddedStGraph& g, const GridDrawing& d,
                                     CrossingCheck method = CrossingCheck::Auto);

enum class DrawingMode { StraightLine, Polyline };

/// Box and bend limits: (2n-2) x (n-1) without bends for straight-line mode;
/// (4n-8) x (2n-4), at most n-3 bends and one per edge for poly-line mode.
/// n is the vertex count of the drawn graph. The poly-line limits are
/// degenerate for a single edge (n = 2), which is held to the straight-line
/// limits instead.
bool check_bounds(const ValidationReport& report, std::size_t n, DrawingMode mode);
bool check_bounds(const EmbeddedStGraph& g, const PolylineDrawing& d, DrawingMode mode);

/// Segment predicates, exposed for testing.
namespace geometry {

/// Sign of (b - a) x (c - a).
int orientation(Point a, Point b, Point c);

/// Closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d);

/// Whether two pieces meet anywhere other than a single shared endpoint.
bool pieces_conflict(Point a, Point b, Point c, Point d);

}  // namespace geometry

}  // namespace bitonic
