#include "evolab/a_evolute.hpp"

#include <cmath>

namespace evolab::aevolute {

using geom::CoorientedLine;
using geom::kPi;
using geom::kTwoPi;
using geom::wrap_pi;

OrientedPolygon a_o(const OrientedPolygon& P) {
    const int n = P.base.size();
    if (static_cast<int>(P.flags.size()) != n)
        throw Error("a_o: flag count mismatch");

    // flags fold into the effective cooriented lines: a reversed side is
    // (alpha + pi, -p)
    std::vector<CoorientedLine> eff;
    eff.reserve(n);
    for (int i = 0; i < n; ++i) {
        const auto& l = P.base.line(i);
        eff.push_back(P.flags[i] > 0 ? l : l.reversed());
    }

    std::vector<CoorientedLine> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        const auto& a = eff[j];
        const auto& b = eff[(j + 1) % n];
        double th = wrap_pi(b.alpha - a.alpha);
        if (std::abs(std::sin(th)) <= geom::kParallelEps)
            throw DegenerateTurning("a_o: consecutive sides parallel");
        out.emplace_back(a.alpha + th / 2 + kPi / 2,
                         (b.p - a.p) / (2.0 * std::sin(th / 2)));
    }
    try {
        return OrientedPolygon(Polygon(std::move(out)));
    } catch (const DegenerateTurning&) {
        throw EvoluteParallelSides("a_o: evolute has parallel consecutive sides");
    }
}

Polygon a_o(const Polygon& P) { return a_o(OrientedPolygon(P)).base; }

std::vector<double> angle_map(const std::vector<double>& theta) {
    const int n = static_cast<int>(theta.size());
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = (theta[j] + theta[(j + 1) % n]) / 2.0;
    return out;
}

std::vector<Vec2> a_c_vertices(const std::vector<Vec2>& verts) {
    const int n = static_cast<int>(verts.size());
    if (n < 3) throw Error("a_c: need at least 3 vertices");

    // interior bisector at vertex i: through verts[i], direction e_out - e_in
    std::vector<Vec2> pts(n), dirs(n);
    for (int i = 0; i < n; ++i) {
        Vec2 prev = verts[(i - 1 + n) % n];
        Vec2 cur = verts[i];
        Vec2 next = verts[(i + 1) % n];
        Vec2 ein = cur - prev;
        Vec2 eout = next - cur;
        double lin = ein.norm(), lout = eout.norm();
        if (lin < geom::kIsoEps || lout < geom::kIsoEps)
            throw CoincidentVertices("a_c: consecutive vertices coincide");
        ein /= lin;
        eout /= lout;
        Vec2 d = eout - ein;
        if (d.norm() < 1e-12) {
            // straight continuation: the interior bisector is the perpendicular
            d = Vec2(-ein.y(), ein.x());
        }
        pts[i] = cur;
        dirs[i] = d.normalized();
    }

    std::vector<Vec2> out(n);
    for (int i = 0; i < n; ++i) {
        const Vec2 &p1 = pts[i], &d1 = dirs[i];
        const Vec2 &p2 = pts[(i + 1) % n], &d2 = dirs[(i + 1) % n];
        double det = d1.x() * (-d2.y()) - (-d2.x()) * d1.y();
        if (std::abs(det) < 1e-12)
            throw EvoluteParallelSides("a_c: consecutive bisectors parallel");
        Vec2 rhs = p2 - p1;
        double t = (rhs.x() * (-d2.y()) - (-d2.x()) * rhs.y()) / det;
        out[i] = p1 + t * d1;
    }
    return out;
}

Polygon a_c(const Polygon& P) {
    auto verts = P.vertices();
    const int n = static_cast<int>(verts.size());

    // recompute the bisector lines (same as a_c_vertices, but we keep the
    // lines: a collapsed evolute is still a valid set of concurrent lines)
    std::vector<Vec2> pts(n), dirs(n);
    for (int i = 0; i < n; ++i) {
        Vec2 prev = verts[(i - 1 + n) % n];
        Vec2 cur = verts[i];
        Vec2 next = verts[(i + 1) % n];
        Vec2 ein = cur - prev;
        Vec2 eout = next - cur;
        double lin = ein.norm(), lout = eout.norm();
        if (lin < geom::kIsoEps || lout < geom::kIsoEps)
            throw CoincidentVertices("a_c: consecutive vertices coincide");
        ein /= lin;
        eout /= lout;
        Vec2 d = eout - ein;
        if (d.norm() < 1e-12) d = Vec2(-ein.y(), ein.x());
        pts[i] = cur;
        dirs[i] = d.normalized();
    }

    std::vector<Vec2> W(n);
    for (int i = 0; i < n; ++i) {
        const Vec2 &p1 = pts[i], &d1 = dirs[i];
        const Vec2 &p2 = pts[(i + 1) % n], &d2 = dirs[(i + 1) % n];
        double det = -d1.x() * d2.y() + d2.x() * d1.y();
        if (std::abs(det) < 1e-12)
            throw EvoluteParallelSides("a_c: consecutive bisectors parallel");
        Vec2 rhs = p2 - p1;
        double t = (-rhs.x() * d2.y() + d2.x() * rhs.y()) / det;
        W[i] = p1 + t * d1;
    }

    // re-impose the cyclic orientation: side i runs from W_{i-1} to W_i
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int i = 0; i < n; ++i) {
        Vec2 u = W[i] - W[(i - 1 + n) % n];
        Vec2 d = u.norm() > geom::kIsoEps ? Vec2(u.normalized()) : dirs[i];
        double alpha = std::atan2(d.y(), d.x()) - kPi / 2;
        lines.emplace_back(alpha, pts[i].dot(geom::unit(alpha)));
    }
    try {
        return Polygon(std::move(lines));
    } catch (const DegenerateTurning&) {
        throw EvoluteParallelSides("a_c: evolute has parallel consecutive sides");
    }
}

}  // namespace evolab::aevolute
