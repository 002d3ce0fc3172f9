#include "evolab/verify.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>

#include "evolab/a_evolute.hpp"
#include "evolab/dynamics.hpp"
#include "evolab/generators.hpp"
#include "evolab/geometry.hpp"
#include "evolab/harmonics.hpp"
#include "evolab/involute.hpp"
#include "evolab/p_evolute.hpp"
#include "evolab/rng.hpp"
#include "evolab/smooth.hpp"

namespace evolab::verify {

using geom::CoorientedLine;
using geom::kPi;
using geom::kTwoPi;
using geom::Polygon;
using geom::Vec2;

namespace {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// greedy multiset matching distance between complex spectra
double multiset_distance(std::vector<std::complex<double>> a,
                         std::vector<std::complex<double>> b) {
    double worst = 0;
    for (const auto& x : a) {
        double best = 1e300;
        size_t arg = 0;
        for (size_t i = 0; i < b.size(); ++i) {
            double d = std::abs(x - b[i]);
            if (d < best) {
                best = d;
                arg = i;
            }
        }
        worst = std::max(worst, best);
        b.erase(b.begin() + arg);
    }
    return worst;
}

// per-index unoriented line-set distance, scale-relative
double line_set_distance(const Polygon& A, const Polygon& B) {
    double worst = 0;
    for (int i = 0; i < A.size(); ++i) {
        const auto& a = A.line(i);
        const auto& b = B.line(i);
        double d = geom::wrap_two_pi(b.alpha - a.alpha);
        double dp;
        if (d < 1e-6 || kTwoPi - d < 1e-6)
            dp = std::abs(a.p - b.p);
        else if (std::abs(d - kPi) < 1e-6)
            dp = std::abs(a.p + b.p);
        else
            dp = 1e300;
        worst = std::max(worst, dp);
    }
    return worst;
}

Polygon iterate_p(const Polygon& P, int k) {
    Polygon cur = P;
    for (int i = 0; i < k; ++i) cur = pevolute::transform(cur);
    return cur;
}

CriterionResult make(int index, const std::string& name) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    return r;
}

}  // namespace

CriterionResult equiangular_spectrum(uint64_t, int) {
    Timer timer;
    auto r = make(1, "equiangular-spectrum");
    r.tolerance = 1e-9;
    double worst = 0;
    for (int n = 3; n <= 12; ++n) {
        std::vector<double> theta(n, kTwoPi / n);
        auto rep = pevolute::spectral_report(theta);
        std::vector<std::complex<double>> expect(n);
        for (int m = 0; m < n; ++m)
            expect[m] = {0.0, std::sin(kTwoPi * m / n) / std::sin(kTwoPi / n)};
        worst = std::max(worst, multiset_distance(expect, rep.eigenvalues));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance && r.seconds < 1.0;
    r.detail = "n in {3..12}; runtime budget 1 s";
    return r;
}

CriterionResult symmetric_spectrum(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(2, "symmetric-spectrum");
    r.tolerance = 1e-8;  // relative: radius for symmetry, ||P||^k for traces
    if (trials <= 0) trials = 1000;
    double worst = 0;
    uint64_t stream = 0;
    for (int n = 4; n <= 9; ++n) {
        for (int t = 0; t < trials; ++t) {
            auto rng = SplitMix64::stream(seed, stream++);
            Polygon P = gen::random_ngon(n, rng);
            auto theta = P.turning_angles().theta;
            auto rep = pevolute::spectral_report(theta);
            worst = std::max(worst, rep.symmetry_residual /
                                        std::max(rep.spectral_radius, 1e-30));
            Eigen::MatrixXd M = pevolute::p_matrix(theta);
            double nrm = M.norm();  // Frobenius
            Eigen::MatrixXd Pk = Eigen::MatrixXd::Identity(n, n);
            for (int k = 1; k <= n; ++k) {
                Pk = Pk * M;
                if (k % 2 == 1)
                    worst = std::max(worst, std::abs(Pk.trace()) / std::pow(nrm, k));
            }
        }
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance && r.seconds < 30.0;
    r.detail = std::to_string(trials) + " random theta per n in {4..9}; budget 30 s";
    return r;
}

CriterionResult quadrilateral_homothety(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(3, "quadrilateral-homothety");
    r.tolerance = 1e-8;
    if (trials <= 0) trials = 100;
    double worst = 0;
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 7000 + t);
        Polygon P = gen::random_ngon(4, rng);
        auto h = dynamics::homothety_check(P, iterate_p(P, 2));
        if (!h) {
            ok = false;
            continue;
        }
        // ratio depends on the angles only
        Polygon P2 = P.with_support({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                     rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        auto h2 = dynamics::homothety_check(P2, iterate_p(P2, 2));
        if (!h2) {
            ok = false;
            continue;
        }
        worst = std::max(worst, std::abs(h->ratio - h2->ratio));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = ok && worst < r.tolerance;
    r.detail = "homothety detected on all trials; ratio is angle-only";
    return r;
}

CriterionResult grunbaum_pentagon(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(4, "grunbaum-pentagon");
    r.tolerance = 1e-8;  // residual bound inside homothety_check, x diameter
    if (trials <= 0) trials = 100;
    double worst = 0;
    bool ok = true;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 8000 + t);
        Polygon P = gen::random_ngon(5, rng);
        Polygon P1 = iterate_p(P, 1);
        Polygon P3 = iterate_p(P, 3);
        auto h = dynamics::homothety_check(P1, P3);
        if (!h) {
            ok = false;
            continue;
        }
        // recompute the max residual for reporting
        Vec2 c = h->center;
        double resid = 0;
        for (int i = 0; i < 5; ++i)
            resid = std::max(resid, (c + h->ratio * (P1.vertex_at(i) - c) -
                                     P3.vertex_at(i)).norm());
        worst = std::max(worst, resid / std::max(P1.diameter(), P3.diameter()));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = ok && worst < r.tolerance;
    r.detail = "P^3 homothetic to P^1 on all trials";
    return r;
}

CriterionResult degenerate_pentagon(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(5, "degenerate-pentagon");
    r.tolerance = 1e-7;
    if (trials <= 0) trials = 20;
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 9000 + t);
        // beta recipe: sum sin(beta_j) = 0, sum beta_j = 0 mod 2pi,
        // theta_{j+1/2} = (beta_j + beta_{j+1}) / 2
        std::vector<double> theta;
        for (int attempt = 0; attempt < 10000 && theta.empty(); ++attempt) {
            double b1 = rng.uniform(-2.0, 2.0), b2 = rng.uniform(-2.0, 2.0),
                   b3 = rng.uniform(-2.0, 2.0);
            double c = kTwoPi - (b1 + b2 + b3);
            double s = -(std::sin(b1) + std::sin(b2) + std::sin(b3));
            if (std::abs(std::sin(c / 2)) < 1e-3) continue;
            double v = s / (2.0 * std::sin(c / 2));
            if (std::abs(v) > 0.999) continue;
            double b4 = c / 2 + std::acos(v);
            double b5 = c - b4;
            std::vector<double> beta = {b1, b2, b3, b4, b5};
            std::vector<double> th(5);
            bool good = true;
            for (int j = 0; j < 5; ++j) {
                th[j] = geom::wrap_pi((beta[j] + beta[(j + 1) % 5]) / 2.0);
                if (std::abs(std::sin(th[j])) < 1e-2) good = false;
            }
            if (good) theta = th;
        }
        if (theta.empty()) {
            r.detail = "beta recipe sampling failed";
            r.seconds = timer.seconds();
            return r;
        }
        std::vector<CoorientedLine> lines;
        double a = 0;
        for (int j = 0; j < 5; ++j) {
            lines.emplace_back(a, rng.uniform(-1.0, 1.0));
            a += theta[j];
        }
        Polygon P{std::move(lines)};
        Polygon P3 = iterate_p(P, 3);
        auto v = P3.vertices();
        Vec2 c{0, 0};
        for (const auto& x : v) c += x;
        c /= 5.0;
        double spread = 0;
        for (const auto& x : v) spread = std::max(spread, (x - c).norm());
        worst = std::max(worst, spread / P.diameter());
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "P^3 collapses to a point for sum sin(2 B_j) = 0 angles";
    return r;
}

CriterionResult hexagon_duality(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(6, "hexagon-duality");
    r.tolerance = 1e-8;
    if (trials <= 0) trials = 50;
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 10000 + t);
        // opposite sides parallel: alpha_{j+3} = alpha_j + pi
        std::vector<double> a3(3);
        bool valid = false;
        std::vector<CoorientedLine> lines;
        while (!valid) {
            for (auto& v : a3) v = rng.uniform(0.0, kTwoPi);
            lines.clear();
            for (int j = 0; j < 6; ++j)
                lines.emplace_back(a3[j % 3] + (j < 3 ? 0.0 : kPi), rng.uniform(-1.0, 1.0));
            valid = true;
            for (int j = 0; j < 6; ++j)
                if (std::abs(std::sin(lines[(j + 1) % 6].alpha - lines[j].alpha)) < 0.05)
                    valid = false;
        }
        Polygon P{std::move(lines)};
        Polygon P1 = iterate_p(P, 1);
        Polygon P3 = iterate_p(P, 3);
        worst = std::max(worst, line_set_distance(P1, P3));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "line sets of P^3 and P^1 coincide (parallel opposite sides)";
    return r;
}

CriterionResult hypocycloid_scalings(uint64_t seed, int) {
    Timer timer;
    auto r = make(7, "hypocycloid-scalings");
    r.tolerance = 1e-10;
    double worst = 0;
    auto rng = SplitMix64::stream(seed, 11000);
    for (int n = 5; n <= 12; ++n) {
        for (int m = 1; 2 * m < n; ++m) {
            double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
            auto pc = harmonics::harmonic_vector(n, m, harmonics::Kind::cos);
            auto ps = harmonics::harmonic_vector(n, m, harmonics::Kind::sin);
            std::vector<CoorientedLine> lines;
            for (int i = 0; i < n; ++i)
                lines.emplace_back(kTwoPi * (i + 1) / n, a * pc[i] + b * ps[i]);
            Polygon P{std::move(lines)};

            // evolute of the smooth hypocycloid h: m(-a sin m(x-pi/2) + b cos m(x-pi/2))
            auto evolute_support = [&](double x) {
                return m * (-a * std::sin(m * (x - kPi / 2)) +
                            b * std::cos(m * (x - kPi / 2)));
            };
            double scale_p = std::sin(kTwoPi * m / n) / std::sin(kTwoPi / n);
            Polygon PE = pevolute::transform(P);
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(PE.line(i).p - (scale_p / m) *
                                                 evolute_support(PE.line(i).alpha)));

            double scale_a = std::sin(kPi * m / n) / std::sin(kPi / n);
            Polygon AE = aevolute::a_o(P);
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(AE.line(i).p - (scale_a / m) *
                                                 evolute_support(AE.line(i).alpha)));
        }
    }
    // printed value of the n=5, m=2 contraction factor
    {
        Polygon C = harmonics::harmonic_polygon(5, 2, harmonics::Kind::cos);
        Polygon E = pevolute::transform(C);
        Eigen::VectorXd pin(5), pout(5);
        for (int i = 0; i < 5; ++i) {
            pin[i] = C.line(i).p;
            pout[i] = E.line(i).p;
        }
        double factor = pout.norm() / pin.norm();
        worst = std::max(worst, std::abs(factor - 2.0 * std::cos(kTwoPi / 5)));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "P and A_o evolutes of a C_m + b S_m, n in {5..12}; 2cos(2pi/5) check";
    return r;
}

CriterionResult antisymmetry(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(8, "antisymmetry");
    r.tolerance = 1e-10;
    if (trials <= 0) trials = 1000;
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 12000 + t);
        int n = 4 + static_cast<int>(rng.below(6));
        Polygon P = gen::random_ngon(n, rng);
        auto theta = P.turning_angles().theta;
        Eigen::MatrixXd M = pevolute::m_matrix(theta);
        Eigen::MatrixXd Pm = pevolute::p_matrix(theta);
        Eigen::MatrixXd A = M * Pm;
        worst = std::max(worst, (A + A.transpose()).cwiseAbs().maxCoeff() /
                                    std::max(1.0, A.cwiseAbs().maxCoeff()));
        auto p = P.support();
        Eigen::VectorXd pv = Eigen::Map<const Eigen::VectorXd>(p.data(), n);
        Eigen::VectorXd ell = M * pv;
        auto geom_ell = P.side_lengths();
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(ell[i] - geom_ell[i]) /
                                        std::max(1.0, std::abs(geom_ell[i])));
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "M P antisymmetric; M p equals side lengths";
    return r;
}

CriterionResult involute_roundtrips(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(9, "involute-roundtrips");
    r.tolerance = 1e-8;
    int even_trials = trials > 0 ? trials : 200;
    int odd_trials = trials > 0 ? trials : 200;
    int iff_trials = trials > 0 ? trials : 1000;
    double worst = 0;
    bool ok = true;
    std::ostringstream note;

    uint64_t stream = 13000;
    for (int done = 0; done < even_trials && stream < 13000 + 10u * even_trials;) {
        auto rng = SplitMix64::stream(seed, stream++);
        int n = 4 + 2 * static_cast<int>(rng.below(3));
        Polygon Q = gen::random_ngon(n, rng);
        auto fam = involute::p_involute_family(Q);
        if (fam.composition().kind() != geom::Isometry::Kind::rotation)
            continue;  // non-generic draw (B = 0 mod pi); resample
        Polygon P = involute::p_evolvent(Q);
        worst = std::max(worst, line_set_distance(pevolute::transform(P), Q));
        ++done;
    }

    for (int t = 0; t < odd_trials; ++t) {
        auto rng = SplitMix64::stream(seed, 14000 + t);
        int n = 5 + 2 * static_cast<int>(rng.below(3));
        Polygon Q = gen::random_zero_qp(n, rng);
        auto fam = involute::p_involute_family(Q);
        if (fam.kind() != involute::FamilyKind::one_parameter) {
            ok = false;
            note << "zero-qp odd-gon not a reflection; ";
            continue;
        }
        for (double tv : {-1.0, 0.4, 2.0}) {
            Polygon P = fam.at(tv);
            worst = std::max(worst, line_set_distance(pevolute::transform(P), Q));
        }
    }

    int agree = 0;
    for (int t = 0; t < iff_trials; ++t) {
        auto rng = SplitMix64::stream(seed, 15000 + t);
        int n = 5 + 2 * static_cast<int>(rng.below(3));
        bool zero = (t % 2 == 0);
        Polygon Q = zero ? gen::random_zero_qp(n, rng) : gen::random_ngon(n, rng);
        bool qp_zero = std::abs(Q.quasiperimeter()) <= involute::qp_tolerance(Q);
        bool is_refl = geom::compose_reflections(Q.lines()).kind() ==
                       geom::Isometry::Kind::reflection;
        if (qp_zero == is_refl) ++agree;
    }
    if (agree != iff_trials) ok = false;

    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = ok && worst < r.tolerance;
    r.detail = note.str() + "iff agreement " + std::to_string(agree) + "/" +
               std::to_string(iff_trials);
    return r;
}

CriterionResult orthic_triangle(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(10, "orthic-triangle");
    r.tolerance = 1e-8;
    if (trials <= 0) trials = 100;
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 16000 + t);
        // sample an acute triangle
        Vec2 A, B, C;
        bool acute = false;
        while (!acute) {
            A = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            B = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            C = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            auto angle_ok = [](const Vec2& u, const Vec2& v, const Vec2& w) {
                Vec2 a = v - u, b = w - u;
                double cross = a.x() * b.y() - a.y() * b.x();
                return a.dot(b) > 0.05 * a.norm() * b.norm() &&
                       std::abs(cross) > 0.05 * a.norm() * b.norm();
            };
            acute = angle_ok(A, B, C) && angle_ok(B, C, A) && angle_ok(C, A, B);
        }
        Polygon Q = Polygon::from_vertices({A, B, C}, Polygon::Coorientation::ccw);
        Polygon P = involute::a_evolvent(Q, involute::Parity::odd);
        auto foot = [](const Vec2& p, const Vec2& q, const Vec2& x) {
            Vec2 d = q - p;
            return Vec2(p + d * ((x - p).dot(d) / d.squaredNorm()));
        };
        std::vector<Vec2> feet = {foot(A, B, C), foot(B, C, A), foot(C, A, B)};
        auto verts = P.vertices();
        // match as sets
        for (const auto& f : feet) {
            double best = 1e300;
            for (const auto& v : verts) best = std::min(best, (v - f).norm());
            worst = std::max(worst, best);
        }
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "A_odd-evolvent vertices equal the altitude feet";
    return r;
}

CriterionResult ergodic_map(uint64_t seed, int) {
    Timer timer;
    auto r = make(11, "ergodic-map");
    r.tolerance = 1e-10;
    double worst = 0;
    bool moduli_ok = true;
    for (int n : {3, 5, 7, 9}) {
        Eigen::MatrixXd M = involute::pedal_matrix(n);
        Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
        std::vector<std::complex<double>> numeric(es.eigenvalues().data(),
                                                  es.eigenvalues().data() + n);
        auto expect = involute::ergodic_spectrum(n);
        worst = std::max(worst, multiset_distance(expect, numeric));
        int unit = 0;
        for (const auto& l : numeric) {
            if (std::abs(std::abs(l) - 1.0) < 1e-9)
                ++unit;
            else if (std::abs(l) <= 1.0)
                moduli_ok = false;
        }
        if (unit != 1) moduli_ok = false;  // only lambda_0 = 1 on the unit circle
    }

    // orbit histogram on the quotient torus, n = 3, 10 bins per dimension
    bool filled = true;
    {
        std::array<std::array<int, 10>, 10> H{};
        auto rng = SplitMix64::stream(seed, 17000);
        std::vector<double> a = {rng.uniform(0.0, kPi), rng.uniform(0.0, kPi),
                                 rng.uniform(0.0, kPi)};
        for (int step = 0; step < 100000; ++step) {
            a = involute::pedal_angle_map(a);
            double x = std::fmod(a[0] - a[2] + kPi, kPi) / kPi;
            double y = std::fmod(a[1] - a[2] + kPi, kPi) / kPi;
            int bx = std::min(static_cast<int>(x * 10), 9);
            int by = std::min(static_cast<int>(y * 10), 9);
            ++H[bx][by];
        }
        for (const auto& row : H)
            for (int c : row)
                if (c == 0) filled = false;
    }

    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance && moduli_ok && filled;
    r.detail = std::string("eigenvalues 2/(1+w^k); |lambda_k|>1 for k>=1; histogram ") +
               (filled ? "filled" : "HAS EMPTY BINS");
    return r;
}

CriterionResult smooth_limits(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(12, "smooth-limits");
    r.tolerance = 0;  // structural checks
    if (trials <= 0) trials = 20;
    bool ok = true;
    std::ostringstream note;

    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 18000 + t);
        auto s = gen::random_support_poly(6, rng);
        auto tracev = smooth::iterate(s, 30, smooth::IterMode::evolvent);
        if (tracev.empty() || tracev.back().dominant_k != 2) {
            ok = false;
            note << "evolvent dominant != 2 at trial " << t << "; ";
        }
        int deg = 3 + static_cast<int>(rng.below(4));
        smooth::SupportPoly sp;
        for (int k = 2; k <= deg; ++k)
            sp.set(k, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        double a = rng.uniform(0.1, 1.0);
        sp.set(deg, a, rng.uniform(0.1, 1.0));  // keep the top harmonic present
        auto tracee = smooth::iterate(sp, 30, smooth::IterMode::evolute);
        if (tracee.empty() || tracee.back().dominant_k != deg) {
            ok = false;
            note << "evolute dominant != degree at trial " << t << "; ";
        }
        // Steiner invariance, exact on coefficients
        smooth::SupportPoly q = sp;
        q.set(0, rng.uniform(-1.0, 1.0), 0.0);
        q.set(1, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        Vec2 st0 = smooth::steiner_point(q);
        Vec2 st1 = smooth::steiner_point(smooth::evolute(q));
        if (st0 != st1) {
            ok = false;
            note << "Steiner not exactly invariant at trial " << t << "; ";
        }
    }
    r.seconds = timer.seconds();
    r.pass = ok;
    r.measured = ok ? 0.0 : 1.0;
    r.detail = ok ? "evolvent limit astroid; evolute limit top harmonic; Steiner exact"
                  : note.str();
    return r;
}

CriterionResult a_o_limit(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(13, "a-o-limit");
    r.tolerance = 1e-6;
    if (trials <= 0) trials = 5;
    double worst = 0;
    for (int n : {6, 8, 10}) {
        for (int t = 0; t < trials; ++t) {
            auto rng = SplitMix64::stream(seed, 19000 + 100 * n + t);
            Polygon P = gen::random_equiangular(n, rng);
            auto trace = dynamics::iterate(dynamics::Transform::a_o_evolute, P, 100);
            if (trace.terminal_event) {
                worst = std::max(worst, 1.0);
                continue;
            }
            const Polygon& last = trace.steps.back();
            auto d = harmonics::decompose_equiangular(last);
            // energy outside the order-n/2 subspace, relative
            double inside = d.a_half ? std::pow(*d.a_half / 2.0, 2.0) * n : 0.0;
            auto p = last.support();
            double total = 0;
            for (double v : p) total += v * v;
            double resid = std::sqrt(std::max(0.0, total - inside) /
                                     std::max(total, 1e-300));
            worst = std::max(worst, resid);
        }
    }

    // n = 6 equiangular P-evolute sequence is period 2 after the first step
    bool period2 = true;
    for (int t = 0; t < trials; ++t) {
        auto rng = SplitMix64::stream(seed, 19900 + t);
        Polygon P = gen::random_equiangular(6, rng);
        auto trace = dynamics::iterate(dynamics::Transform::p_evolute, P, 40);
        if (trace.terminal_event) {
            period2 = false;
            continue;
        }
        for (size_t i = 1; i + 2 < trace.steps.size(); ++i)
            if (dynamics::sup_vertex_distance(trace.steps[i], trace.steps[i + 2]) > 1e-9)
                period2 = false;
        if (!trace.period_estimate || *trace.period_estimate > 2) period2 = false;
    }

    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance && period2;
    r.detail = std::string("A_o shape residual onto order-n/2 after 100 steps, "
                           "n in {6,8,10}; hexagon P period-2 ") +
               (period2 ? "ok" : "FAILED");
    return r;
}

CriterionResult evolvent_limits(uint64_t seed, int trials) {
    Timer timer;
    auto r = make(14, "evolvent-limits");
    r.tolerance = 1e-6;
    if (trials <= 0) trials = 5;
    double worst = 0;
    std::ostringstream note;

    for (int n : {5, 7, 9}) {
        for (int t = 0; t < trials; ++t) {
            auto rng = SplitMix64::stream(seed, 20000 + 100 * n + t);
            Polygon Q = gen::random_equiangular_zero_perimeter(n, rng);
            // P-evolvent iteration: shapes converge onto order (n-1)/2
            auto trace = dynamics::iterate(dynamics::Transform::p_evolvent, Q, 100);
            if (trace.terminal_event) {
                note << "p_evolvent terminated n=" << n << " (" << *trace.terminal_event
                     << "); ";
                worst = std::max(worst, 1.0);
            } else {
                const Polygon& last = trace.steps.back();
                auto d = harmonics::decompose_equiangular(last);
                int mtop = (n - 1) / 2;
                double inside = 0;
                for (const auto& term : d.terms)
                    if (term.m == mtop)
                        inside = (term.a * term.a + term.b * term.b) * n / 2.0;
                auto p = last.support();
                double total = 0;
                for (double v : p) total += v * v;
                double resid = std::sqrt(std::max(0.0, total - inside) /
                                         std::max(total, 1e-300));
                worst = std::max(worst, resid);
            }

            // A-evolvent iteration: converges to the vertex centroid
            Vec2 centroid = harmonics::vertex_centroid(Q);
            Polygon cur = Q;
            bool terminated = false;
            for (int k = 0; k < 100 && !terminated; ++k) {
                try {
                    cur = involute::a_evolvent(cur, involute::Parity::even);
                } catch (const Error& e) {
                    note << "a_evolvent terminated n=" << n << " (" << e.what() << "); ";
                    terminated = true;
                }
            }
            if (terminated) {
                worst = std::max(worst, 1.0);
            } else {
                for (const auto& v : cur.vertices())
                    worst = std::max(worst, (v - centroid).norm());
            }
        }
    }
    r.seconds = timer.seconds();
    r.measured = worst;
    r.pass = worst < r.tolerance;
    r.detail = "P-evolvent shape onto order (n-1)/2; A-evolvents to centroid. " +
               note.str();
    return r;
}

std::vector<std::string> criterion_names() {
    return {"equiangular-spectrum", "symmetric-spectrum", "quadrilateral-homothety",
            "grunbaum-pentagon",    "degenerate-pentagon", "hexagon-duality",
            "hypocycloid-scalings", "antisymmetry",        "involute-roundtrips",
            "orthic-triangle",      "ergodic-map",         "smooth-limits",
            "a-o-limit",            "evolvent-limits"};
}

CriterionResult run_criterion(const std::string& name, uint64_t seed, int trials) {
    if (name == "equiangular-spectrum") return equiangular_spectrum(seed, trials);
    if (name == "symmetric-spectrum") return symmetric_spectrum(seed, trials);
    if (name == "quadrilateral-homothety") return quadrilateral_homothety(seed, trials);
    if (name == "grunbaum-pentagon") return grunbaum_pentagon(seed, trials);
    if (name == "degenerate-pentagon") return degenerate_pentagon(seed, trials);
    if (name == "hexagon-duality") return hexagon_duality(seed, trials);
    if (name == "hypocycloid-scalings") return hypocycloid_scalings(seed, trials);
    if (name == "antisymmetry") return antisymmetry(seed, trials);
    if (name == "involute-roundtrips") return involute_roundtrips(seed, trials);
    if (name == "orthic-triangle") return orthic_triangle(seed, trials);
    if (name == "ergodic-map") return ergodic_map(seed, trials);
    if (name == "smooth-limits") return smooth_limits(seed, trials);
    if (name == "a-o-limit") return a_o_limit(seed, trials);
    if (name == "evolvent-limits") return evolvent_limits(seed, trials);
    throw Error("unknown criterion '" + name + "'");
}

std::vector<CriterionResult> run_all(uint64_t seed) {
    std::vector<CriterionResult> out;
    for (const auto& name : criterion_names()) out.push_back(run_criterion(name, seed));
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " criterion-" << (r.index < 10 ? "0" : "")
       << r.index << "-" << r.name << "  measured=" << r.measured
       << " tol=" << r.tolerance << " (" << r.detail << ") [" << r.seconds << " s]";
    return os.str();
}

}  // namespace evolab::verify
