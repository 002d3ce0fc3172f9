#include "evolab/dynamics.hpp"

#include <cmath>

#include "evolab/a_evolute.hpp"
#include "evolab/harmonics.hpp"
#include "evolab/involute.hpp"
#include "evolab/p_evolute.hpp"

namespace evolab::dynamics {

Polygon normalize(const Polygon& P) {
    Vec2 c = harmonics::vertex_centroid(P);
    Polygon t = P.translated(-c);
    double r = t.max_vertex_radius();
    if (r <= 1e-10 * (1.0 + P.max_vertex_radius()))
        throw Collapsed("normalize: all vertices coincide");
    return t.scaled(1.0 / r);
}

double sup_vertex_distance(const Polygon& P, const Polygon& Q) {
    if (P.size() != Q.size()) throw Error("sup_vertex_distance: size mismatch");
    double d = 0;
    for (int i = 0; i < P.size(); ++i)
        d = std::max(d, (P.vertex_at(i) - Q.vertex_at(i)).norm());
    return d;
}

RotationFit rotation_alignment(const Polygon& P, const Polygon& Q) {
    if (P.size() != Q.size()) throw Error("rotation_alignment: size mismatch");
    double dot = 0, cross = 0;
    auto vp = P.vertices();
    auto vq = Q.vertices();
    for (int i = 0; i < P.size(); ++i) {
        dot += vp[i].dot(vq[i]);
        cross += vp[i].x() * vq[i].y() - vp[i].y() * vq[i].x();
    }
    RotationFit fit;
    fit.angle = std::atan2(cross, dot);
    double c = std::cos(fit.angle), s = std::sin(fit.angle);
    fit.residual = 0;
    for (int i = 0; i < P.size(); ++i) {
        Vec2 r(c * vp[i].x() - s * vp[i].y(), s * vp[i].x() + c * vp[i].y());
        fit.residual = std::max(fit.residual, (r - vq[i]).norm());
    }
    return fit;
}

std::optional<Homothety> homothety_check(const Polygon& P, const Polygon& Q) {
    if (P.size() != Q.size()) return std::nullopt;
    const int n = P.size();
    for (int i = 0; i < n; ++i) {
        double d = geom::wrap_two_pi(Q.line(i).alpha - P.line(i).alpha);
        double off = std::min({d, std::abs(d - geom::kPi), geom::kTwoPi - d});
        if (off > geom::kAngleEps) return std::nullopt;
    }
    auto vp = P.vertices();
    auto vq = Q.vertices();

    // least squares for W = r V + c', unknowns (r, c'x, c'y)
    Eigen::MatrixXd A(2 * n, 3);
    Eigen::VectorXd b(2 * n);
    for (int i = 0; i < n; ++i) {
        A.row(2 * i) << vp[i].x(), 1, 0;
        A.row(2 * i + 1) << vp[i].y(), 0, 1;
        b[2 * i] = vq[i].x();
        b[2 * i + 1] = vq[i].y();
    }
    Eigen::Vector3d x = A.colPivHouseholderQr().solve(b);
    double resid = (A * x - b).cwiseAbs().maxCoeff();
    double diam = std::max(P.diameter(), Q.diameter());
    if (resid > kHomEps * std::max(diam, 1e-30)) return std::nullopt;

    Homothety h;
    h.ratio = x[0];
    if (std::abs(1.0 - h.ratio) > 1e-9) {
        h.center = Vec2(x[1], x[2]) / (1.0 - h.ratio);
    } else {
        h.center = harmonics::vertex_centroid(P);  // ratio 1: center ambiguous
    }
    return h;
}

const char* to_string(Transform t) {
    switch (t) {
        case Transform::p_evolute: return "p_evolute";
        case Transform::a_o_evolute: return "a_o_evolute";
        case Transform::a_c_evolute: return "a_c_evolute";
        case Transform::p_evolvent: return "p_evolvent";
        case Transform::a_evolvent: return "a_evolvent";
    }
    return "?";
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::real_pair: return "real-pair";
        case Classification::imaginary_pair: return "imaginary-pair";
        case Classification::complex_quadruple: return "complex-quadruple";
        case Classification::collapsed: return "collapsed";
        case Classification::terminated: return "terminated";
        case Classification::none: return "none";
    }
    return "?";
}

std::optional<Transform> transform_from_string(const std::string& s) {
    for (Transform t : {Transform::p_evolute, Transform::a_o_evolute,
                        Transform::a_c_evolute, Transform::p_evolvent,
                        Transform::a_evolvent})
        if (s == to_string(t)) return t;
    return std::nullopt;
}

Polygon apply_transform(Transform t, const Polygon& P) {
    switch (t) {
        case Transform::p_evolute: return pevolute::transform(P);
        case Transform::a_o_evolute: return aevolute::a_o(P);
        case Transform::a_c_evolute: return aevolute::a_c(P);
        case Transform::p_evolvent: return involute::p_evolvent(P);
        case Transform::a_evolvent: return involute::a_evolvent(P, involute::Parity::even);
    }
    throw Error("apply_transform: unknown transform");
}

namespace {

std::optional<int> estimate_period(const std::vector<Polygon>& steps) {
    const int n = static_cast<int>(steps.size());
    int start = 3 * n / 4;
    for (int q = 1; q <= 12; ++q) {
        if (n - 1 - q < start) break;  // not enough trailing data
        bool ok = true;
        for (int i = start; i + q < n; ++i) {
            if (sup_vertex_distance(steps[i], steps[i + q]) >= 1e-6) {
                ok = false;
                break;
            }
        }
        if (ok) return q;
    }
    return std::nullopt;
}

}  // namespace

IterationTrace iterate(Transform t, const Polygon& P, int steps) {
    IterationTrace trace;
    if (t == Transform::p_evolute) {
        auto rep = pevolute::spectral_report(P.turning_angles().theta);
        switch (rep.max_modulus_class) {
            case pevolute::SpectralReport::MaxModClass::real_pair:
                trace.classification = Classification::real_pair;
                break;
            case pevolute::SpectralReport::MaxModClass::imaginary_pair:
                trace.classification = Classification::imaginary_pair;
                break;
            case pevolute::SpectralReport::MaxModClass::complex_quadruple:
                trace.classification = Classification::complex_quadruple;
                break;
        }
    }

    Polygon cur = normalize(P);
    trace.steps.push_back(cur);
    for (int i = 0; i < steps; ++i) {
        try {
            Polygon next = apply_transform(t, cur);
            Vec2 c = harmonics::vertex_centroid(next);
            trace.centroid_drift.push_back(c.norm());
            Polygon shifted = next.translated(-c);
            double r = shifted.max_vertex_radius();
            if (r <= 1e-10 * (1.0 + next.max_vertex_radius()))
                throw Collapsed("iterate: polygon collapsed");
            trace.scale_log.push_back(std::log(r));
            cur = shifted.scaled(1.0 / r);
            trace.steps.push_back(cur);
        } catch (const Collapsed& e) {
            trace.classification = Classification::collapsed;
            trace.terminal_event = e.what();
            break;
        } catch (const Error& e) {
            trace.classification = Classification::terminated;
            trace.terminal_event = e.what();
            break;
        } catch (const std::invalid_argument& e) {
            trace.classification = Classification::terminated;
            trace.terminal_event = e.what();
            break;
        }
    }
    trace.period_estimate = estimate_period(trace.steps);
    return trace;
}

}  // namespace evolab::dynamics
