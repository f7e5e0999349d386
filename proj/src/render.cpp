#include "laby/render.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laby {

namespace {

std::string fixed(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

}  // namespace

std::string render_svg(const RenderSpec& spec, const Pattern& grid, const TypedPath* corridor,
                       const std::vector<PolylinePoint>* polyline) {
    if (spec.canvas < 64) throw std::invalid_argument("canvas must be at least 64 px");
    if (spec.target == RenderSpec::Target::PathCorridor) {
        if (!corridor || !spec.kind)
            throw std::invalid_argument("corridor rendering needs a path and its kind");
        if (corridor->kind != *spec.kind)
            throw std::invalid_argument("corridor path kind does not match the render spec");
    }
    if (spec.target == RenderSpec::Target::ArcPolyline && !polyline)
        throw std::invalid_argument("polyline rendering needs polyline data");

    const int m = grid.width();
    const double cell = static_cast<double>(spec.canvas) / m;

    std::set<SquareIndex> corridor_cells;
    if (corridor)
        corridor_cells.insert(corridor->squares.begin(), corridor->squares.end());

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.canvas
       << "\" height=\"" << spec.canvas << "\" viewBox=\"0 0 " << spec.canvas << " " << spec.canvas
       << "\">\n";

    // one rect per cell; rows count from the bottom, the SVG y axis runs down
    for (int row = m - 1; row >= 0; --row) {
        for (int col = 0; col < m; ++col) {
            const std::string* fill = &spec.palette.black;
            if (grid.is_white(col, row))
                fill = corridor_cells.count({col, row}) ? &spec.palette.corridor
                                                        : &spec.palette.white;
            os << "  <rect x=\"" << fixed(col * cell) << "\" y=\"" << fixed((m - 1 - row) * cell)
               << "\" width=\"" << fixed(cell) << "\" height=\"" << fixed(cell) << "\" fill=\""
               << *fill << "\" stroke=\"" << spec.palette.grid_stroke
               << "\" stroke-width=\"0.5\"/>\n";
        }
    }

    if (polyline && !polyline->empty()) {
        os << "  <polyline fill=\"none\" stroke=\"" << spec.palette.polyline
           << "\" stroke-width=\"" << fixed(cell / 3.0) << "\" points=\"";
        for (std::size_t i = 0; i < polyline->size(); ++i) {
            double x = (*polyline)[i].first.to_double() * spec.canvas;
            double y = (1.0 - (*polyline)[i].second.to_double()) * spec.canvas;
            if (i) os << ' ';
            os << fixed(x) << ',' << fixed(y);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace laby
