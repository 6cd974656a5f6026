#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wallflip/walls.hpp"

namespace wallflip {

// 2-plane slice of the cone spanned by basis (B1, B2): the chart point (a, b)
// stands for a B1 + b B2.  Walls appear as line segments through the chart
// triangle, the optional path is highlighted, and `coords` annotates vertices
// with their exact ambient coordinates.  Floats enter only at pixel emission.
struct SlicePlot {
    NumClass basis1, basis2;
    std::optional<std::pair<NumClass, NumClass>> path;
    bool coords = false;
};

// Exact chart coordinates of x in the plane of (B1, B2); throws plot_plane if
// x does not lie in that plane or the basis is degenerate.
std::pair<Rat, Rat> chart_coordinates(const NumClass& x, const NumClass& b1, const NumClass& b2);

std::string render_slice_svg(const AmpleCone& cone, const WallSet& walls,
                             const SurfaceLattice& lat, const SlicePlot& plot);

}  // namespace wallflip
