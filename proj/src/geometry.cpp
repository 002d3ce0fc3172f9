#include "evolab/geometry.hpp"

#include <cmath>
#include <numeric>

namespace evolab::geom {

double wrap_two_pi(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double wrap_pi(double a) {
    double r = std::fmod(a + kPi, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r - kPi;  // (-pi, pi]
}

Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

bool CoorientedLine::same_unoriented(const CoorientedLine& o, double tol) const {
    double d = wrap_two_pi(o.alpha - alpha);
    if (d < tol || kTwoPi - d < tol) return std::abs(o.p - p) < tol;
    if (std::abs(d - kPi) < tol) return std::abs(o.p + p) < tol;
    return false;
}

Vec2 vertex(const CoorientedLine& a, const CoorientedLine& b) {
    double det = std::sin(b.alpha - a.alpha);
    if (std::abs(det) <= kParallelEps)
        throw ParallelLines("vertex: lines are parallel");
    return {(a.p * std::sin(b.alpha) - b.p * std::sin(a.alpha)) / det,
            (b.p * std::cos(a.alpha) - a.p * std::cos(b.alpha)) / det};
}

Vec2 reflect_point(const CoorientedLine& mirror, const Vec2& u) {
    return u - 2.0 * mirror.signed_distance(u) * mirror.normal();
}

CoorientedLine reflect_line(const CoorientedLine& mirror, const CoorientedLine& l) {
    double alpha = wrap_two_pi(2.0 * mirror.alpha - l.alpha);
    Vec2 x = reflect_point(mirror, l.foot());
    return {alpha, x.dot(unit(alpha))};
}

AlternatingSums alternating_sums(const std::vector<double>& alpha) {
    const int n = static_cast<int>(alpha.size());
    AlternatingSums out;
    double b = 0;
    for (int i = 0; i < n; ++i) b += (i % 2 == 0 ? alpha[i] : -alpha[i]);
    out.total = wrap_two_pi(b);
    if (n % 2 == 1) {
        out.bj.resize(n);
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int i = 1; i < n; ++i)
                s += (i % 2 == 1 ? -alpha[(j + i) % n] : alpha[(j + i) % n]);
            out.bj[j] = wrap_two_pi(s);
        }
    }
    return out;
}

Polygon::Polygon(std::vector<CoorientedLine> lines) : lines_(std::move(lines)) {
    const int n = size();
    if (n < 3) throw Error("Polygon: need at least 3 lines");
    for (int i = 0; i < n; ++i) {
        double s = std::sin(lines_[(i + 1) % n].alpha - lines_[i].alpha);
        if (std::abs(s) <= kParallelEps)
            throw DegenerateTurning("Polygon: consecutive lines parallel at index " +
                                    std::to_string(i));
    }
}

Polygon Polygon::from_vertices(const std::vector<Vec2>& verts, Coorientation co) {
    const int n = static_cast<int>(verts.size());
    if (n < 3) throw Error("from_vertices: need at least 3 vertices");
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int i = 0; i < n; ++i) {
        Vec2 d = verts[(i + 1) % n] - verts[i];
        double len = d.norm();
        if (len < kIsoEps) throw CoincidentVertices("from_vertices: repeated vertex");
        d /= len;
        Vec2 nrm = co == Coorientation::ccw ? Vec2(d.y(), -d.x()) : Vec2(-d.y(), d.x());
        double alpha = std::atan2(nrm.y(), nrm.x());
        lines.emplace_back(alpha, verts[i].dot(nrm));
    }
    return Polygon(std::move(lines));
}

std::vector<double> Polygon::alphas() const {
    std::vector<double> a;
    a.reserve(lines_.size());
    for (const auto& l : lines_) a.push_back(l.alpha);
    return a;
}

std::vector<double> Polygon::support() const {
    std::vector<double> p;
    p.reserve(lines_.size());
    for (const auto& l : lines_) p.push_back(l.p);
    return p;
}

std::vector<Vec2> Polygon::vertices() const {
    std::vector<Vec2> v;
    v.reserve(lines_.size());
    for (int i = 0; i < size(); ++i) v.push_back(vertex_at(i));
    return v;
}

std::vector<double> Polygon::side_lengths() const {
    const int n = size();
    std::vector<double> ell(n);
    for (int i = 0; i < n; ++i) {
        Vec2 a = vertex_at(i - 1);
        Vec2 b = vertex_at(i);
        ell[i] = (b - a).dot(line(i).direction());
    }
    return ell;
}

Polygon::Turning Polygon::turning_angles() const {
    const int n = size();
    Turning t;
    t.theta.resize(n);
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        double th = wrap_pi(line(i + 1).alpha - line(i).alpha);
        if (std::abs(std::sin(th)) <= kParallelEps)
            throw DegenerateTurning("turning_angles: theta = 0 mod pi");
        t.theta[i] = th;
        sum += th;
    }
    t.k = static_cast<int>(std::lround(sum / kTwoPi));
    if (std::abs(sum - t.k * kTwoPi) > kAngleEps * n)
        throw Error("turning_angles: total turning not a multiple of 2pi");
    return t;
}

double Polygon::quasiperimeter() const {
    if (size() % 2 == 0) throw EvenGon("quasiperimeter: defined for odd n only");
    auto s = alternating_sums(alphas());
    double q = 0;
    for (int j = 0; j < size(); ++j) q += line(j).p * std::sin(s.bj[j]);
    return q;
}

Polygon Polygon::with_support(std::vector<double> p) const {
    if (static_cast<int>(p.size()) != size())
        throw Error("with_support: size mismatch");
    std::vector<CoorientedLine> out;
    out.reserve(p.size());
    for (int i = 0; i < size(); ++i) out.emplace_back(lines_[i].alpha, p[i]);
    return Polygon(std::move(out));
}

Polygon Polygon::translated(const Vec2& u) const {
    std::vector<CoorientedLine> out;
    out.reserve(lines_.size());
    for (const auto& l : lines_) out.emplace_back(l.alpha, l.p + u.dot(l.normal()));
    return Polygon(std::move(out));
}

Polygon Polygon::scaled(double s) const {
    std::vector<CoorientedLine> out;
    out.reserve(lines_.size());
    for (const auto& l : lines_) out.emplace_back(l.alpha, s * l.p);
    return Polygon(std::move(out));
}

double Polygon::max_vertex_radius() const {
    double r = 0;
    for (const auto& v : vertices()) r = std::max(r, v.norm());
    return r;
}

double Polygon::diameter() const {
    auto v = vertices();
    double d = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) d = std::max(d, (v[i] - v[j]).norm());
    return d;
}

Isometry Isometry::identity() {
    Isometry s;
    s.kind_ = Kind::identity;
    return s;
}

Isometry Isometry::rotation(const Vec2& center, double angle) {
    Isometry s;
    s.kind_ = Kind::rotation;
    s.center_ = center;
    s.angle_ = angle;
    return s;
}

Isometry Isometry::translation(const Vec2& v) {
    Isometry s;
    s.kind_ = Kind::translation;
    s.vec_ = v;
    return s;
}

Isometry Isometry::reflection(const CoorientedLine& axis) {
    Isometry s;
    s.kind_ = Kind::reflection;
    s.axis_ = axis;
    return s;
}

Isometry Isometry::glide(const CoorientedLine& axis, double shift) {
    Isometry s;
    s.kind_ = Kind::glide;
    s.axis_ = axis;
    s.shift_ = shift;
    return s;
}

Vec2 Isometry::apply(const Vec2& u) const {
    switch (kind_) {
        case Kind::identity:
            return u;
        case Kind::rotation: {
            double c = std::cos(angle_), s = std::sin(angle_);
            Vec2 d = u - center_;
            return center_ + Vec2(c * d.x() - s * d.y(), s * d.x() + c * d.y());
        }
        case Kind::translation:
            return u + vec_;
        case Kind::reflection:
            return reflect_point(axis_, u);
        case Kind::glide:
            return reflect_point(axis_, u) + shift_ * axis_.direction();
    }
    return u;
}

Isometry Isometry::classify(const Eigen::Matrix2d& L, const Vec2& t) {
    if (L.determinant() > 0) {
        double angle = std::atan2(L(1, 0), L(0, 0));
        // near-zero rotation demotes to translation / identity
        if (std::abs(angle) < kIsoEps) {
            if (t.norm() < kIsoEps) return identity();
            return translation(t);
        }
        Eigen::Matrix2d A = Eigen::Matrix2d::Identity() - L;
        Vec2 c = A.colPivHouseholderQr().solve(t);
        return rotation(c, angle);
    }
    // reflection part: L = reflection across direction u through the origin.
    // Store the axis so that axis.direction() = e_u; the glide shift is
    // signed along that direction.
    double u = 0.5 * std::atan2(L(1, 0), L(0, 0));
    Vec2 d = unit(u);
    Vec2 nrm = unit(u - kPi / 2);
    double shift = t.dot(d);
    CoorientedLine axis(u - kPi / 2, t.dot(nrm) / 2.0);
    if (std::abs(shift) < kIsoEps) return reflection(axis);
    return glide(axis, shift);
}

Isometry compose_reflections(const std::vector<CoorientedLine>& lines) {
    if (lines.empty()) throw EmptyInput("compose_reflections: no lines");
    Eigen::Matrix2d L = Eigen::Matrix2d::Identity();
    Vec2 t{0, 0};
    for (const auto& l : lines) {
        Vec2 n = l.normal();
        Eigen::Matrix2d M = Eigen::Matrix2d::Identity() - 2.0 * n * n.transpose();
        t = M * t + 2.0 * l.p * n;
        L = M * L;
    }
    return Isometry::classify(L, t);
}

std::optional<std::pair<long, long>> rational_approx(double x, long max_den, double tol) {
    // continued-fraction convergents
    double v = x;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(v)), q1 = 1;
    if (std::abs(x - static_cast<double>(p1)) <= tol) return std::make_pair(p1, 1L);
    for (int it = 0; it < 64; ++it) {
        double frac = v - std::floor(v);
        if (frac < 1e-15) break;
        v = 1.0 / frac;
        long a = static_cast<long>(std::floor(v));
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
            return std::make_pair(p1, q1);
    }
    if (q1 != 0 && q1 <= max_den &&
        std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
        return std::make_pair(p1, q1);
    return std::nullopt;
}

std::optional<int> periodicity(const Isometry& s, int kmax) {
    switch (s.kind()) {
        case Isometry::Kind::identity:
            return 1;
        case Isometry::Kind::reflection:
            return 2;
        case Isometry::Kind::rotation: {
            auto r = rational_approx(s.angle() / kTwoPi, kmax, 1e-9);
            if (!r) return std::nullopt;
            long q = std::abs(r->second);
            if (q == 0) return std::nullopt;
            return static_cast<int>(q);
        }
        default:
            return std::nullopt;  // translation, glide: no periodic points
    }
}

}  // namespace evolab::geom
