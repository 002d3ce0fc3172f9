#include "evolab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evolab/rng.hpp"

namespace evolab::io {

using geom::CoorientedLine;
using geom::Polygon;
using geom::Vec2;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json polygon_to_json(const Polygon& P) {
    json lines = json::array();
    for (const auto& l : P.lines()) lines.push_back({{"alpha", l.alpha}, {"p", l.p}});
    return {{"lines", lines}};
}

Polygon polygon_from_json(const json& j) {
    if (j.contains("lines")) {
        std::vector<CoorientedLine> lines;
        for (const auto& e : j.at("lines"))
            lines.emplace_back(e.at("alpha").get<double>(), e.at("p").get<double>());
        return Polygon(std::move(lines));
    }
    if (j.contains("vertices")) {
        std::vector<Vec2> verts;
        for (const auto& e : j.at("vertices"))
            verts.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        std::string co = j.value("coorientation", "ccw");
        return Polygon::from_vertices(verts, co == "cw" ? Polygon::Coorientation::cw
                                                        : Polygon::Coorientation::ccw);
    }
    throw Error("polygon_from_json: need 'lines' or 'vertices'");
}

json oriented_polygon_to_json(const aevolute::OrientedPolygon& P) {
    json j = polygon_to_json(P.base);
    j["orientation_flags"] = P.flags;
    return j;
}

aevolute::OrientedPolygon oriented_polygon_from_json(const json& j) {
    Polygon base = polygon_from_json(j);
    if (j.contains("orientation_flags")) {
        auto flags = j.at("orientation_flags").get<std::vector<int>>();
        return aevolute::OrientedPolygon(std::move(base), std::move(flags));
    }
    return aevolute::OrientedPolygon(std::move(base));
}

json support_poly_to_json(const smooth::SupportPoly& s) {
    json coeffs = json::array();
    for (const auto& [k, ab] : s.coeffs)
        coeffs.push_back({{"k", k}, {"a", ab.first}, {"b", ab.second}});
    return {{"q", s.q}, {"cycloidal", s.cycloidal}, {"coeffs", coeffs}};
}

smooth::SupportPoly support_poly_from_json(const json& j) {
    smooth::SupportPoly s;
    s.q = j.value("q", 1);
    s.cycloidal = j.value("cycloidal", false);
    for (const auto& e : j.at("coeffs"))
        s.set(e.at("k").get<int>(), e.value("a", 0.0), e.value("b", 0.0));
    return s;
}

json spectral_report_to_json(const pevolute::SpectralReport& r) {
    json ev = json::array();
    for (const auto& l : r.eigenvalues) ev.push_back({l.real(), l.imag()});
    const char* cls = nullptr;
    switch (r.max_modulus_class) {
        case pevolute::SpectralReport::MaxModClass::real_pair: cls = "real-pair"; break;
        case pevolute::SpectralReport::MaxModClass::imaginary_pair: cls = "imaginary-pair"; break;
        case pevolute::SpectralReport::MaxModClass::complex_quadruple: cls = "complex-quadruple"; break;
    }
    return {{"eigenvalues", ev},
            {"spectral_radius", r.spectral_radius},
            {"symmetry_residual", r.symmetry_residual},
            {"invariant_pair_residual", r.invariant_pair_residual},
            {"max_modulus_class", cls},
            {"ill_conditioned", r.ill_conditioned}};
}

namespace {

const char* family_kind_name(involute::FamilyKind k) {
    switch (k) {
        case involute::FamilyKind::none: return "none";
        case involute::FamilyKind::unique: return "unique";
        case involute::FamilyKind::one_parameter: return "one_parameter";
        case involute::FamilyKind::two_parameter: return "two_parameter";
    }
    return "?";
}

json isometry_to_json(const geom::Isometry& s) {
    using K = geom::Isometry::Kind;
    switch (s.kind()) {
        case K::identity:
            return {{"kind", "identity"}};
        case K::rotation:
            return {{"kind", "rotation"},
                    {"center", {s.center().x(), s.center().y()}},
                    {"angle", s.angle()}};
        case K::translation:
            return {{"kind", "translation"}, {"vector", {s.vector().x(), s.vector().y()}}};
        case K::reflection:
            return {{"kind", "reflection"},
                    {"axis", {{"alpha", s.axis().alpha}, {"p", s.axis().p}}}};
        case K::glide:
            return {{"kind", "glide"},
                    {"axis", {{"alpha", s.axis().alpha}, {"p", s.axis().p}}},
                    {"shift", s.glide_shift()}};
    }
    return {};
}

}  // namespace

json p_family_to_json(const involute::PInvoluteFamily& f) {
    json j = {{"kind", family_kind_name(f.kind())},
              {"composition", isometry_to_json(f.composition())}};
    try {
        j["evolvent"] = polygon_to_json(involute::p_evolvent(f.evolute()));
    } catch (const Error&) {
        // no distinguished member
    }
    return j;
}

json a_family_to_json(const involute::AInvoluteFamily& f) {
    json j = {{"kind", family_kind_name(f.kind())},
              {"composition", isometry_to_json(f.composition())}};
    if (auto odd = f.a_odd_evolvent()) j["a_odd_evolvent"] = polygon_to_json(*odd);
    if (f.evolute().size() % 2 == 1) {
        try {
            j["a_even_evolvent"] = polygon_to_json(
                involute::a_evolvent(f.evolute(), involute::Parity::even));
        } catch (const Error&) {
        }
    }
    return j;
}

std::string ergodic_orbit_csv(int n, int steps, uint64_t seed) {
    auto rng = SplitMix64::stream(seed, 0);
    std::vector<double> a(n);
    for (auto& v : a) v = rng.uniform(0.0, geom::kPi);
    std::vector<int> bins(100, 0);
    std::ostringstream os;
    os << "step";
    for (int i = 0; i < n; ++i) os << ",alpha" << i;
    os << '\n';
    for (int k = 0; k < steps; ++k) {
        a = involute::pedal_angle_map(a);
        if (k < 1000 || k % 100 == 0) {
            os << k;
            for (double v : a) os << ',' << fmt17(v);
            os << '\n';
        }
        double x = std::fmod(a[0] - a[n - 1] + geom::kPi, geom::kPi) / geom::kPi;
        double y = std::fmod(a[1 % n] - a[n - 1] + geom::kPi, geom::kPi) / geom::kPi;
        int bx = std::min(static_cast<int>(x * 10), 9);
        int by = std::min(static_cast<int>(y * 10), 9);
        ++bins[10 * bx + by];
    }
    os << "bin,count\n";
    for (int i = 0; i < 100; ++i) os << i << ',' << bins[i] << '\n';
    return os.str();
}

json decomposition_to_json(const harmonics::HarmonicDecomposition& d) {
    json terms = json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"m", t.m}, {"a", t.a}, {"b", t.b}});
    json j = {{"n", d.n}, {"alpha1", d.alpha1}, {"a0", d.a0}, {"terms", terms}};
    if (d.a_half) j["a_half"] = *d.a_half;
    return j;
}

std::string decomposition_to_csv(const harmonics::HarmonicDecomposition& d) {
    std::ostringstream os;
    os << "m,a,b,magnitude\n";
    os << "0," << fmt17(d.a0) << ",0," << fmt17(std::abs(d.a0)) << '\n';
    for (const auto& t : d.terms)
        os << t.m << ',' << fmt17(t.a) << ',' << fmt17(t.b) << ','
           << fmt17(std::hypot(t.a, t.b)) << '\n';
    if (d.a_half)
        os << (d.n / 2) << ',' << fmt17(*d.a_half) << ",0," << fmt17(std::abs(*d.a_half))
           << '\n';
    return os.str();
}

std::string matrix_to_csv(const Eigen::MatrixXd& M) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) os << ',';
            os << fmt17(M(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::string trace_to_csv(const dynamics::IterationTrace& t) {
    std::ostringstream os;
    os << "step,scale_log,centroid_drift,classification\n";
    for (size_t i = 0; i < t.scale_log.size(); ++i) {
        os << (i + 1) << ',' << fmt17(t.scale_log[i]) << ',' << fmt17(t.centroid_drift[i])
           << ',' << dynamics::to_string(t.classification) << '\n';
    }
    return os.str();
}

std::string trace_to_jsonl(const dynamics::IterationTrace& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.steps.size(); ++i) {
        json j = polygon_to_json(t.steps[i]);
        j["step"] = i;
        os << j.dump() << '\n';
    }
    return os.str();
}

std::string support_curve_csv(const smooth::SupportPoly& s, int samples) {
    std::ostringstream os;
    os << "alpha,x,y\n";
    double period = geom::kTwoPi * s.q;
    for (int i = 0; i < samples; ++i) {
        double a = period * i / samples;
        Vec2 p = smooth::curve_point(s, a);
        os << fmt17(a) << ',' << fmt17(p.x()) << ',' << fmt17(p.y()) << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

Polygon load_polygon(const std::string& path) {
    return polygon_from_json(json::parse(read_file(path)));
}

}  // namespace evolab::io
