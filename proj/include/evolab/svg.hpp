#pragma once

#include <string>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::svg {

struct Options {
    int width = 640;             // pixel width; height follows the aspect ratio
    bool vertex_markers = false;
    bool coorientation_arrows = false;
};

// Deterministic SVG: viewbox = bounding box of all vertices + 5% margin,
// one closed path per polygon, style cycling through a fixed palette.
// Throws EmptyInput.
std::string render(const std::vector<geom::Polygon>& polygons, const Options& opt = {});

}  // namespace evolab::svg
