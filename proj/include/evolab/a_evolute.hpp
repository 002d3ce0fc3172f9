#pragma once

#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::aevolute {

using geom::Polygon;
using geom::Vec2;

// Polygon with per-side orientation signs relative to the canonical
// coorientation-induced orientation. The A_o construction depends on them.
struct OrientedPolygon {
    Polygon base;
    std::vector<int> flags;  // +1 / -1 per side

    explicit OrientedPolygon(Polygon p)
        : base(std::move(p)), flags(base.size(), 1) {}
    OrientedPolygon(Polygon p, std::vector<int> f)
        : base(std::move(p)), flags(std::move(f)) {}
};

// Oriented angle-bisector evolute. Output line j sits between input sides
// j and j+1 (half-integer label j+1/2); output carries the
// canonical coorientation (all flags +1). Throws EvoluteParallelSides when
// input lines j-1 and j+1 are parallel.
OrientedPolygon a_o(const OrientedPolygon& P);
Polygon a_o(const Polygon& P);  // all flags +1

// turning-angle averaging: out[j] = (theta[j] + theta[j+1]) / 2
std::vector<double> angle_map(const std::vector<double>& theta);

// A_c-evolute: interior bisectors for the cyclic orientation of the vertex
// polygon, cyclic orientation re-imposed on the result.
std::vector<Vec2> a_c_vertices(const std::vector<Vec2>& verts);
Polygon a_c(const Polygon& P);

}  // namespace evolab::aevolute
