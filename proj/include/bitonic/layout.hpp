#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitonic/graph.hpp"
#include "bitonic/ordering.hpp"
#include "bitonic/splitting.hpp"

namespace bitonic {

using Coord = std::int64_t;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class LayoutErrc {
    OrderingInvalid,
    NonIntegerCoordinate,
    MissingCoordinate,
    MalformedDrawing,
    Internal,
};

const char* to_string(LayoutErrc code);

class LayoutError : public std::runtime_error {
public:
    LayoutError(LayoutErrc code, const std::string& detail);

    LayoutErrc code() const noexcept { return code_; }

private:
    LayoutErrc code_;
};

/// Straight-line drawing: one grid point per vertex.
struct GridDrawing {
    std::vector<Point> position;
    /// Amount added to the raw coordinates to move them into the
    /// non-negative quadrant.
    Point translation;

    friend bool operator==(const GridDrawing&, const GridDrawing&) = default;
};

/// Poly-line drawing; bends[e] lists the bend points of edge e from tail to
/// head.
struct PolylineDrawing {
    std::vector<Point> position;
    std::vector<std::vector<Point>> bends;
    Point translation;

    std::size_t bend_count() const;

    friend bool operator==(const PolylineDrawing&, const PolylineDrawing&) = default;
};

PolylineDrawing to_polyline(const EmbeddedStGraph& g, const GridDrawing& d);

/// Upward planar straight-line drawing from a bitonic st-ordering by the
/// shifting method, with two artificial contour ends that are removed at the
/// end. Fits in (2n-2) x (n-1).
///
/// Throws LayoutError(OrderingInvalid) if ord is not a bitonic st-ordering of g.
GridDrawing draw_straightline(const EmbeddedStGraph& g, const BitonicOrdering& ord);

enum class SplitStrategy { Minimum, AllTransitive };

struct PolylineOptions {
    SplitStrategy strategy = SplitStrategy::Minimum;
    bool drop_collinear_bends = true;
};

/// Every intermediate of the poly-line pipeline.
struct PolylineRun {
    SplitPlan plan;
    SplitResult split;
    BitonicOrdering ordering;
    GridDrawing grid;
    PolylineDrawing drawing;
};

PolylineRun run_polyline_pipeline(const EmbeddedStGraph& g, const PolylineOptions& options = {});

/// Upward planar poly-line drawing with at most one bend per edge: split,
/// order, draw straight-line, then turn dummy vertices back into bends.
PolylineDrawing draw_polyline(const EmbeddedStGraph& g, const PolylineOptions& options = {});

/// Drawing file: "v x y" per vertex, then "bend u v x y" per bend, in edge
/// order. The translation is recorded as a "# translate dx dy" comment.
std::string format_drawing(const EmbeddedStGraph& g, const PolylineDrawing& d);
std::string format_drawing(const EmbeddedStGraph& g, const GridDrawing& d);

/// Throws LayoutError(MissingCoordinate) if a vertex of g has no line and
/// GraphError(EdgeNotFound) for a bend on a non-edge.
PolylineDrawing parse_drawing(std::string_view text, const EmbeddedStGraph& g);

/// SVG rendering: circles for vertices, squares for bends, one polyline per
/// edge; y grows upwards on screen. Throws std::invalid_argument if scale < 1.
std::string emit_svg(const EmbeddedStGraph& g, const PolylineDrawing& d, int scale);
std::string emit_svg(const EmbeddedStGraph& g, const GridDrawing& d, int scale);

}  // namespace bitonic
