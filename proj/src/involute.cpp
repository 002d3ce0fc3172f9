#include "evolab/involute.hpp"

#include <cmath>

namespace evolab::involute {

using geom::kPi;
using geom::kTwoPi;
using geom::reflect_line;
using geom::reflect_point;
using geom::unit;
using geom::wrap_pi;
using geom::wrap_two_pi;

double qp_tolerance(const Polygon& Q) {
    double pm = 0;
    for (const auto& l : Q.lines()) pm = std::max(pm, std::abs(l.p));
    return 1e-8 * (1.0 + pm);
}

Polygon p_involute_from_seed(const Polygon& Q, const Vec2& seed) {
    const int n = Q.size();
    std::vector<Vec2> x(n + 1);
    x[0] = seed;
    double scale = seed.norm();
    for (int i = 0; i < n; ++i) {
        x[i + 1] = reflect_point(Q.line(i), x[i]);
        scale = std::max(scale, x[i + 1].norm());
    }
    if ((x[n] - x[0]).norm() > 1e-6 * (1.0 + scale))
        throw std::invalid_argument("p_involute_from_seed: seed is not a fixed point");

    // side i of the involute runs from x_i to x_{i+1}, perpendicular to
    // Q.line(i); directions are fixed across a family so that support
    // numbers (hence quasiperimeters) depend affinely on the seed
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int i = 0; i < n; ++i) {
        double alpha = wrap_two_pi(Q.line(i).alpha - kPi / 2);
        lines.emplace_back(alpha, x[i + 1].dot(unit(alpha)));
    }
    return Polygon(std::move(lines));
}

Polygon a_involute_from_seed(const Polygon& Q, const CoorientedLine& seed) {
    const int n = Q.size();
    std::vector<CoorientedLine> m;
    m.reserve(n);
    m.push_back(seed);
    for (int i = 0; i + 1 < n; ++i) m.push_back(reflect_line(Q.line(i), m.back()));
    CoorientedLine closure = reflect_line(Q.line(n - 1), m.back());
    double scale = 1.0 + std::abs(seed.p);
    if (!closure.same_unoriented(m.front(), 1e-6 * scale))
        throw std::invalid_argument("a_involute_from_seed: seed line is not invariant");
    return Polygon(std::move(m));
}

Polygon PInvoluteFamily::at(double t) const {
    if (kind_ != FamilyKind::one_parameter)
        throw Error("PInvoluteFamily::at: not a one-parameter family");
    const auto& axis = s_.axis();
    return member(axis.foot() + t * axis.direction());
}

Polygon PInvoluteFamily::unique_member() const {
    if (kind_ != FamilyKind::unique)
        throw Error("PInvoluteFamily::unique_member: kind is not unique");
    return member(s_.center());
}

PInvoluteFamily p_involute_family(const Polygon& Q) {
    Isometry s = geom::compose_reflections(Q.lines());
    FamilyKind kind = FamilyKind::none;
    switch (s.kind()) {
        case Isometry::Kind::rotation: kind = FamilyKind::unique; break;
        case Isometry::Kind::identity: kind = FamilyKind::two_parameter; break;
        case Isometry::Kind::reflection: kind = FamilyKind::one_parameter; break;
        case Isometry::Kind::translation:
        case Isometry::Kind::glide: kind = FamilyKind::none; break;
    }
    return PInvoluteFamily(Q, s, kind);
}

namespace {

// zero of the affine map t -> qp(member(t)); throws NoEvolvent when the
// slope is below tol (the family is quasiperimeter-degenerate)
template <typename MemberAt>
Polygon zero_qp_member(MemberAt&& at, double tol) {
    double q0 = at(0.0).quasiperimeter();
    double q1 = at(1.0).quasiperimeter();
    double slope = q1 - q0;
    if (std::abs(slope) < tol)
        throw NoEvolvent(NoEvolvent::Reason::degenerate_family,
                         "quasiperimeter is constant along the family");
    return at(-q0 / slope);
}

}  // namespace

Polygon p_evolvent(const Polygon& Q) {
    const int n = Q.size();
    auto fam = p_involute_family(Q);
    const auto& s = fam.composition();

    if (n % 2 == 1) {
        if (s.kind() == Isometry::Kind::glide)
            throw NoEvolvent(NoEvolvent::Reason::nonzero_quasiperimeter,
                             "composition is a glide reflection (quasiperimeter != 0)");
        // reflection: one-parameter family of parallel involutes
        return zero_qp_member([&](double t) { return fam.at(t); }, qp_tolerance(Q));
    }

    switch (s.kind()) {
        case Isometry::Kind::rotation:
            return fam.unique_member();
        case Isometry::Kind::translation:
            throw NoEvolvent(NoEvolvent::Reason::translation,
                             "composition is a nonzero translation");
        case Isometry::Kind::identity: {
            // two-parameter family; the translation vector of the involute's
            // own composition is affine in the seed: solve for its zero
            auto trans_of = [&](const Vec2& seed) -> Vec2 {
                Polygon P = fam.member(seed);
                Isometry sp = geom::compose_reflections(P.lines());
                switch (sp.kind()) {
                    case Isometry::Kind::translation: return sp.vector();
                    case Isometry::Kind::identity: return {0, 0};
                    default:
                        throw Error("p_evolvent: unexpected involute composition kind");
                }
            };
            Vec2 b = trans_of({0, 0});
            Vec2 w10 = trans_of({1, 0}) - b;
            Vec2 w01 = trans_of({0, 1}) - b;
            Eigen::Matrix2d A;
            A << w10.x(), w01.x(), w10.y(), w01.y();
            double scale = std::max({std::abs(w10.x()), std::abs(w10.y()),
                                     std::abs(w01.x()), std::abs(w01.y()), 1e-30});
            if (std::abs(A.determinant()) < 1e-9 * scale * scale) {
                Eigen::JacobiSVD<Eigen::Matrix2d> svd(A);
                int rank = 0;
                for (int i = 0; i < 2; ++i)
                    if (svd.singularValues()[i] > 1e-9 * svd.singularValues()[0]) ++rank;
                throw NoEvolvent(NoEvolvent::Reason::degenerate_family,
                                 "zero-translation member is not unique (solution set "
                                 "dimension " + std::to_string(2 - rank) + ")");
            }
            Vec2 seed = A.partialPivLu().solve(Vec2(-b));
            return fam.member(seed);
        }
        default:
            throw NoEvolvent(NoEvolvent::Reason::glide,
                             "even-gon composition cannot be a glide");
    }
}

Polygon AInvoluteFamily::at(double t) const {
    if (kind_ != FamilyKind::one_parameter)
        throw Error("AInvoluteFamily::at: not a one-parameter family");
    switch (s_.kind()) {
        case Isometry::Kind::reflection: {
            // pencil of perpendiculars to the axis; normal = axis direction
            const auto& axis = s_.axis();
            return member(CoorientedLine(axis.alpha + kPi / 2, t));
        }
        case Isometry::Kind::rotation: {
            // point reflection: pencil through the center, t = normal angle
            Vec2 c = s_.center();
            return member(CoorientedLine(t, c.dot(unit(t))));
        }
        case Isometry::Kind::translation: {
            // parallel pencil, normal perpendicular to the translation
            Vec2 v = s_.vector();
            double psi = std::atan2(v.y(), v.x()) + kPi / 2;
            return member(CoorientedLine(psi, t));
        }
        default:
            throw Error("AInvoluteFamily::at: no pencil for this composition");
    }
}

Polygon AInvoluteFamily::at(double phi, double d) const {
    if (kind_ != FamilyKind::two_parameter)
        throw Error("AInvoluteFamily::at: not a two-parameter family");
    return member(CoorientedLine(phi, d));
}

std::optional<Polygon> AInvoluteFamily::a_odd_evolvent() const {
    if (q_.size() % 2 == 0) return std::nullopt;
    return member(s_.axis());
}

AInvoluteFamily a_involute_family(const Polygon& Q) {
    Isometry s = geom::compose_reflections(Q.lines());
    FamilyKind kind = FamilyKind::none;
    if (Q.size() % 2 == 1) {
        // axis always invariant; pure reflection adds the perpendicular pencil
        kind = s.kind() == Isometry::Kind::reflection ? FamilyKind::one_parameter
                                                      : FamilyKind::unique;
    } else {
        switch (s.kind()) {
            case Isometry::Kind::rotation:
                kind = std::abs(std::abs(wrap_pi(s.angle())) - kPi) < geom::kIsoEps
                           ? FamilyKind::one_parameter  // reflection in a point
                           : FamilyKind::none;
                break;
            case Isometry::Kind::translation: kind = FamilyKind::one_parameter; break;
            case Isometry::Kind::identity: kind = FamilyKind::two_parameter; break;
            default: kind = FamilyKind::none; break;
        }
    }
    return AInvoluteFamily(Q, s, kind);
}

namespace {

// Equiangular hedgehog with zero perimeter: the zero-quasiperimeter member
// solves p_{j+1} - p_j = 2 sin(pi/n) q_j with zero mean, and its angles are
// exactly equiangular. The generic route below transports the seed line by
// chained reflections, whose angle map is expanding (|2/(1+w^k)| > 1), so
// iterating it amplifies angle roundoff geometrically and the orbit falls
// off the equiangular manifold; this closed form keeps it there.
std::optional<Polygon> equiangular_a_evolvent(const Polygon& Q) {
    const int n = Q.size();
    auto turning = Q.turning_angles();
    if (turning.k != 1) return std::nullopt;
    for (double th : turning.theta)
        if (std::abs(th - kTwoPi / n) > geom::kAngleEps) return std::nullopt;
    double sum = 0;
    for (const auto& l : Q.lines()) sum += l.p;
    if (std::abs(sum) * std::sin(kPi / n) > qp_tolerance(Q)) return std::nullopt;

    std::vector<double> p(n, 0.0);
    double c = 2.0 * std::sin(kPi / n);
    for (int j = 1; j < n; ++j) p[j] = p[j - 1] + c * Q.line(j - 1).p;
    double mean = 0;
    for (double v : p) mean += v;
    mean /= n;
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    for (int j = 0; j < n; ++j)
        lines.emplace_back(Q.line(j).alpha - kPi / 2 - kPi / n, p[j] - mean);
    return Polygon(std::move(lines));
}

}  // namespace

Polygon a_evolvent(const Polygon& Q, Parity parity) {
    if (Q.size() % 2 == 0) throw EvenGon("a_evolvent: odd n required");
    auto fam = a_involute_family(Q);
    if (parity == Parity::odd) return fam.member(fam.composition().axis());

    if (fam.composition().kind() != Isometry::Kind::reflection)
        throw NoEvolvent(NoEvolvent::Reason::nonzero_quasiperimeter,
                         "A_even-evolvent needs zero quasiperimeter");
    if (auto equi = equiangular_a_evolvent(Q)) return *equi;
    return zero_qp_member([&](double t) { return fam.at(t); }, qp_tolerance(Q));
}

int interior_bisector_count(const Polygon& P, const Polygon& Q) {
    if (P.size() != Q.size()) throw Error("interior_bisector_count: size mismatch");
    const int n = P.size();
    auto verts = P.vertices();
    int count = 0;
    for (int i = 0; i < n; ++i) {
        // cyclic direction of sides i and i+1; Q.line(i) bisects their angle
        Vec2 u = (verts[i] - verts[(i - 1 + n) % n]).normalized();
        Vec2 v = (verts[(i + 1) % n] - verts[i]).normalized();
        Vec2 nq = Q.line(i).normal();
        Vec2 ru = u - 2.0 * u.dot(nq) * nq;
        if (ru.dot(v) < 0) ++count;  // orientation reversed: interior bisector
    }
    return count;
}

std::vector<double> pedal_angle_map(const std::vector<double>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n % 2 == 0) throw EvenGon("pedal_angle_map: odd n required");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int m = 0; m < n; ++m)
            s += (m % 2 == 0 ? 1.0 : -1.0) * alpha[(i + m) % n];
        s = std::fmod(s, kPi);
        if (s < 0) s += kPi;
        out[i] = s;
    }
    return out;
}

Eigen::MatrixXd pedal_matrix(int n) {
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int m = (j - i + n) % n;
            M(i, j) = (m % 2 == 0 ? 1.0 : -1.0);
        }
    return M;
}

std::vector<std::complex<double>> ergodic_spectrum(int n) {
    if (n % 2 == 0 || n < 3) throw EvenGon("ergodic_spectrum: odd n >= 3 required");
    std::vector<std::complex<double>> out(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> w = std::polar(1.0, kTwoPi * k / n);
        out[k] = 2.0 / (1.0 + w);
    }
    return out;
}

Polygon k_fold_p_involute(const Polygon& Q, const Vec2& seed, int k) {
    const int n = Q.size();
    if (k < 1) throw std::invalid_argument("k_fold_p_involute: k >= 1");
    std::vector<Vec2> x(k * n + 1);
    x[0] = seed;
    double scale = seed.norm();
    for (int j = 0; j < k * n; ++j) {
        x[j + 1] = reflect_point(Q.line(j % n), x[j]);
        scale = std::max(scale, x[j + 1].norm());
    }
    if ((x[k * n] - x[0]).norm() > 1e-6 * (1.0 + scale))
        throw std::invalid_argument("k_fold_p_involute: seed is not k-periodic");
    std::vector<CoorientedLine> lines;
    lines.reserve(k * n);
    for (int j = 0; j < k * n; ++j) {
        double alpha = wrap_two_pi(Q.line(j % n).alpha - kPi / 2);
        lines.emplace_back(alpha, x[j + 1].dot(unit(alpha)));
    }
    return Polygon(std::move(lines));
}

Polygon k_fold_a_involute(const Polygon& Q, const CoorientedLine& seed, int k) {
    const int n = Q.size();
    if (k < 1) throw std::invalid_argument("k_fold_a_involute: k >= 1");
    std::vector<CoorientedLine> m;
    m.reserve(k * n);
    m.push_back(seed);
    for (int j = 0; j + 1 < k * n; ++j) m.push_back(reflect_line(Q.line(j % n), m.back()));
    CoorientedLine closure = reflect_line(Q.line((k * n - 1) % n), m.back());
    if (!closure.same_unoriented(m.front(), 1e-6 * (1.0 + std::abs(seed.p))))
        throw std::invalid_argument("k_fold_a_involute: seed line is not k-invariant");
    return Polygon(std::move(m));
}

}  // namespace evolab::involute
