#pragma once

#include <optional>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::harmonics {

using geom::Polygon;
using geom::Vec2;

enum class Kind { cos, sin };

// Discrete harmonics C_m(n), S_m(n): lines (2pi j/n, cos/sin(2pi m j/n)),
// j = 1..n. Valid m: 0 <= m <= n/2 for cos (m = n/2 only when n even),
// 0 < m < n/2 for sin. Throws IndexOutOfRange.
Polygon harmonic_polygon(int n, int m, Kind kind);

// basis vectors in index space (j = i+1 convention, matching harmonic_polygon)
std::vector<double> harmonic_vector(int n, int m, Kind kind);

struct HarmonicDecomposition {
    int n = 0;
    double alpha1 = 0;  // direction of line 0, kept for phase consistency
    double a0 = 0;
    struct Term {
        int m;
        double a, b;
    };
    std::vector<Term> terms;        // 1 <= m < n/2
    std::optional<double> a_half;   // present iff n even

    std::vector<double> reconstruct_support() const;
    Polygon reconstruct() const;
};

// Exact inverse of the reconstruction on equiangular hedgehogs
// (all theta = 2pi/n). Throws NotEquiangular.
HarmonicDecomposition decompose_equiangular(const Polygon& P);

// arithmetic mean of vertices; equals (2/n) sum p_j e_{alpha_j} when equiangular
Vec2 vertex_centroid(const Polygon& P);

// (1/2pi) sum theta_{i+1/2} P_{i+1/2}; convex only (throws NotConvex)
Vec2 classical_steiner(const Polygon& P);

}  // namespace evolab::harmonics
