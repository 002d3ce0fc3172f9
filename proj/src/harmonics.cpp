#include "evolab/harmonics.hpp"

#include <cmath>

namespace evolab::harmonics {

using geom::CoorientedLine;
using geom::kTwoPi;

std::vector<double> harmonic_vector(int n, int m, Kind kind) {
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i) {
        double ph = kTwoPi * m * (i + 1) / n;
        p[i] = kind == Kind::cos ? std::cos(ph) : std::sin(ph);
    }
    return p;
}

Polygon harmonic_polygon(int n, int m, Kind kind) {
    if (n < 3) throw Error("harmonic_polygon: n >= 3 required");
    bool ok = kind == Kind::cos ? (m >= 0 && 2 * m <= n)
                                : (m > 0 && 2 * m < n);
    if (!ok) throw IndexOutOfRange("harmonic_polygon: index m out of range");
    auto p = harmonic_vector(n, m, kind);
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int i = 0; i < n; ++i) lines.emplace_back(kTwoPi * (i + 1) / n, p[i]);
    return Polygon(std::move(lines));
}

std::vector<double> HarmonicDecomposition::reconstruct_support() const {
    std::vector<double> p(n, a0 / 2.0);
    for (const auto& t : terms) {
        for (int i = 0; i < n; ++i) {
            double ph = kTwoPi * t.m * (i + 1) / n;
            p[i] += t.a * std::cos(ph) + t.b * std::sin(ph);
        }
    }
    if (a_half) {
        for (int i = 0; i < n; ++i) p[i] += (*a_half / 2.0) * ((i + 1) % 2 == 0 ? 1.0 : -1.0);
    }
    return p;
}

Polygon HarmonicDecomposition::reconstruct() const {
    auto p = reconstruct_support();
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int i = 0; i < n; ++i) lines.emplace_back(alpha1 + kTwoPi * i / n, p[i]);
    return Polygon(std::move(lines));
}

HarmonicDecomposition decompose_equiangular(const Polygon& P) {
    const int n = P.size();
    auto turning = P.turning_angles();
    for (double th : turning.theta)
        if (std::abs(th - kTwoPi / n) > geom::kAngleEps)
            throw NotEquiangular("decompose_equiangular: turning angles not 2pi/n");
    auto p = P.support();
    HarmonicDecomposition d;
    d.n = n;
    d.alpha1 = P.line(0).alpha;
    double s = 0;
    for (double v : p) s += v;
    d.a0 = 2.0 * s / n;
    for (int m = 1; 2 * m < n; ++m) {
        double a = 0, b = 0;
        for (int i = 0; i < n; ++i) {
            double ph = kTwoPi * m * (i + 1) / n;
            a += p[i] * std::cos(ph);
            b += p[i] * std::sin(ph);
        }
        d.terms.push_back({m, 2.0 * a / n, 2.0 * b / n});
    }
    if (n % 2 == 0) {
        double h = 0;
        for (int i = 0; i < n; ++i) h += p[i] * ((i + 1) % 2 == 0 ? 1.0 : -1.0);
        d.a_half = 2.0 * h / n;
    }
    return d;
}

Vec2 vertex_centroid(const Polygon& P) {
    Vec2 c{0, 0};
    auto v = P.vertices();
    for (const auto& x : v) c += x;
    return c / static_cast<double>(v.size());
}

Vec2 classical_steiner(const Polygon& P) {
    auto turning = P.turning_angles();
    if (turning.k != 1) throw NotConvex("classical_steiner: total turning != 2pi");
    for (double th : turning.theta)
        if (th <= 0) throw NotConvex("classical_steiner: nonpositive turning angle");
    for (double l : P.side_lengths())
        if (l <= 0) throw NotConvex("classical_steiner: nonpositive side length");
    Vec2 s{0, 0};
    for (int i = 0; i < P.size(); ++i) s += turning.theta[i] * P.vertex_at(i);
    return s / kTwoPi;
}

}  // namespace evolab::harmonics
