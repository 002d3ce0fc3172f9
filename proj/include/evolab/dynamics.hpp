#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::dynamics {

using geom::Polygon;
using geom::Vec2;

inline constexpr double kHomEps = 1e-8;

// translate the vertex centroid to the origin, then rescale so the maximum
// vertex distance from the origin is 1. Throws Collapsed when all vertices
// coincide within 1e-10 * (1 + max vertex radius).
Polygon normalize(const Polygon& P);

struct Homothety {
    Vec2 center;
    double ratio;  // signed; negative = scaling composed with point reflection
};

// least-squares center/ratio over corresponding vertices; present iff the
// residual is below kHomEps * diameter. Requires matching side directions
// (alpha equal mod pi).
std::optional<Homothety> homothety_check(const Polygon& P, const Polygon& Q);

double sup_vertex_distance(const Polygon& P, const Polygon& Q);

// best rotation about the origin aligning P's vertices with Q's
// (both expected centered), and its sup residual
struct RotationFit {
    double angle;
    double residual;
};
RotationFit rotation_alignment(const Polygon& P, const Polygon& Q);

enum class Transform { p_evolute, a_o_evolute, a_c_evolute, p_evolvent, a_evolvent };
enum class Classification {
    real_pair,
    imaginary_pair,
    complex_quadruple,
    collapsed,
    terminated,
    none,
};

const char* to_string(Transform t);
const char* to_string(Classification c);
std::optional<Transform> transform_from_string(const std::string& s);

struct IterationTrace {
    std::vector<Polygon> steps;        // normalized; steps[0] = normalized input
    std::vector<double> scale_log;     // per-step log growth factor
    std::vector<double> centroid_drift;
    Classification classification = Classification::none;
    std::optional<int> period_estimate;
    std::optional<std::string> terminal_event;
};

Polygon apply_transform(Transform t, const Polygon& P);

IterationTrace iterate(Transform t, const Polygon& P, int steps);

}  // namespace evolab::dynamics
