#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laby/path_engine.hpp"
#include "laby/pattern.hpp"

namespace laby {

struct Palette {
    std::string white = "#ffffff";
    std::string black = "#000000";
    std::string corridor = "#c8c8c8";
    std::string grid_stroke = "#b0b0b0";
    std::string polyline = "#707070";
};

struct RenderSpec {
    enum class Target { Pattern, Set, PathCorridor, ArcPolyline };

    Target target = Target::Pattern;
    int canvas = 512;  // pixels per side, >= 64
    std::optional<PathType> kind;
    Palette palette;
};

// Deterministic SVG 1.1 document: one rect per grid cell (white, black, or
// corridor gray), optionally a stroked polyline on top. Byte-identical output
// for identical inputs.
std::string render_svg(const RenderSpec& spec, const Pattern& grid,
                       const TypedPath* corridor = nullptr,
                       const std::vector<PolylinePoint>* polyline = nullptr);

}  // namespace laby
