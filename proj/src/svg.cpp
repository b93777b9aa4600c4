#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bitonic/layout.hpp"

namespace bitonic {

std::string emit_svg(const EmbeddedStGraph& g, const PolylineDrawing& d, int scale) {
    if (scale < 1) throw std::invalid_argument("svg scale must be at least 1");
    Coord max_x = 0, max_y = 0;
    for (const Point& p : d.position) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    for (const auto& bends : d.bends)
        for (const Point& p : bends) {
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    const Coord margin = scale;
    const Coord width = max_x * scale + 2 * margin;
    const Coord height = max_y * scale + 2 * margin;
    const auto sx = [&](Coord x) { return margin + x * scale; };
    const auto sy = [&](Coord y) { return margin + (max_y - y) * scale; };
    const Coord radius = std::max<Coord>(1, scale / 4);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Point a = d.position[g.edge(e).tail];
        const Point b = d.position[g.edge(e).head];
        out << "<polyline points=\"" << sx(a.x) << ',' << sy(a.y);
        if (e < d.bends.size())
            for (const Point& p : d.bends[e]) out << ' ' << sx(p.x) << ',' << sy(p.y);
        out << ' ' << sx(b.x) << ',' << sy(b.y) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"black\">\n";
    for (const auto& bends : d.bends)
        for (const Point& p : bends)
            out << "<rect x=\"" << sx(p.x) - radius / 2 << "\" y=\"" << sy(p.y) - radius / 2 << "\" width=\"" << radius
                << "\" height=\"" << radius << "\"/>\n";
    out << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
    for (VertexId v = 0; v < d.position.size(); ++v)
        out << "<circle cx=\"" << sx(d.position[v].x) << "\" cy=\"" << sy(d.position[v].y) << "\" r=\"" << radius
            << "\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string emit_svg(const EmbeddedStGraph& g, const GridDrawing& d, int scale) {
    return emit_svg(g, to_polyline(g, d), scale);
}

}  // namespace bitonic
