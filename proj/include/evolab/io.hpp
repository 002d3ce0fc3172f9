#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evolab/a_evolute.hpp"
#include "evolab/dynamics.hpp"
#include "evolab/involute.hpp"
#include "evolab/geometry.hpp"
#include "evolab/harmonics.hpp"
#include "evolab/p_evolute.hpp"
#include "evolab/smooth.hpp"

namespace evolab::io {

using nlohmann::json;

// 17 significant digits, round-trip safe
std::string fmt17(double x);

json polygon_to_json(const geom::Polygon& P);
// accepts {"lines":[{"alpha":..,"p":..},..]} or
// {"vertices":[[x,y],..],"coorientation":"ccw"|"cw"}
geom::Polygon polygon_from_json(const json& j);

json oriented_polygon_to_json(const aevolute::OrientedPolygon& P);
aevolute::OrientedPolygon oriented_polygon_from_json(const json& j);

json support_poly_to_json(const smooth::SupportPoly& s);
smooth::SupportPoly support_poly_from_json(const json& j);

json spectral_report_to_json(const pevolute::SpectralReport& r);

json p_family_to_json(const involute::PInvoluteFamily& f);
json a_family_to_json(const involute::AInvoluteFamily& f);

// pedal-direction orbit on the quotient torus: step, direction vector,
// then the 10-bin-per-dimension histogram counts
std::string ergodic_orbit_csv(int n, int steps, uint64_t seed);

json decomposition_to_json(const harmonics::HarmonicDecomposition& d);
std::string decomposition_to_csv(const harmonics::HarmonicDecomposition& d);

std::string matrix_to_csv(const Eigen::MatrixXd& M);

std::string trace_to_csv(const dynamics::IterationTrace& t);
std::string trace_to_jsonl(const dynamics::IterationTrace& t);

// sampled curve points of a support function, for plotting
std::string support_curve_csv(const smooth::SupportPoly& s, int samples);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

geom::Polygon load_polygon(const std::string& path);

}  // namespace evolab::io
