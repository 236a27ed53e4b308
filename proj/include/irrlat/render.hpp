#pragma once

#include "irrlat/constructions.hpp"
#include "irrlat/ehrhart.hpp"

#include <string>

namespace irrlat {

// Header "t,count", one exact-integer row per sample, trailing newline.
// Byte-stable across runs and platforms.
std::string emit_csv(const EhrhartSeries& series);

EhrhartSeries parse_csv(const std::string& text);

struct SvgOptions {
    Int dilation = 1;
    int width_px = 720;
    bool show_lattice = true;
    bool show_pieces = true;
};

// Display only: the one place floating point is allowed. Coordinates are
// rendered at 12 significant digits and never parsed back.
std::string emit_svg(const Polygon& p, const SvgOptions& options = {});
std::string emit_svg(const AssembledPolygon& a, const SvgOptions& options = {});

}  // namespace irrlat
