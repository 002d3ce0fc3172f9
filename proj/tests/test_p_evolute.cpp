#include <doctest.h>

#include <cmath>

#include "evolab/dynamics.hpp"
#include "evolab/generators.hpp"
#include "evolab/harmonics.hpp"
#include "evolab/p_evolute.hpp"
#include "evolab/rng.hpp"

using namespace evolab;
using geom::CoorientedLine;
using geom::kPi;
using geom::kTwoPi;
using geom::Polygon;
using geom::Vec2;

TEST_CASE("p_matrix: equiangular form, zero trace, kernel") {
    int n = 6;
    std::vector<double> theta(n, kTwoPi / n);
    Eigen::MatrixXd P = pevolute::p_matrix(theta);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) Z(i, (i + 1) % n) = 1.0;
    Eigen::MatrixXd expect = (Z - Z.transpose()) / (2.0 * std::sin(kTwoPi / n));
    CHECK((P - expect).cwiseAbs().maxCoeff() < 1e-14);

    auto rng = SplitMix64(41);
    for (int t = 0; t < 50; ++t) {
        Polygon Q = gen::random_ngon(5 + static_cast<int>(rng.below(4)), rng);
        Eigen::MatrixXd M = pevolute::p_matrix(Q.turning_angles().theta);
        CHECK(std::abs(M.trace()) < 1e-10);
    }

    // n = 3: the kernel vector (cos B_j)
    Polygon T = gen::random_ngon(3, rng);
    auto k = pevolute::kernel_generator(T.alphas());
    Eigen::MatrixXd M3 = pevolute::p_matrix(T.turning_angles().theta);
    Eigen::Vector3d kv(k[0], k[1], k[2]);
    CHECK((M3 * kv).cwiseAbs().maxCoeff() < 1e-10);

    CHECK_THROWS_AS(pevolute::p_matrix({0.0, 1.0, 1.0}), DegenerateTurning);
}

TEST_CASE("m_matrix: side lengths, antisymmetry, orthogonality") {
    auto rng = SplitMix64(42);
    for (int t = 0; t < 100; ++t) {
        int n = 4 + static_cast<int>(rng.below(5));
        Polygon Q = gen::random_ngon(n, rng);
        auto theta = Q.turning_angles().theta;
        Eigen::MatrixXd M = pevolute::m_matrix(theta);
        Eigen::MatrixXd P = pevolute::p_matrix(theta);
        CHECK(M.isApprox(M.transpose(), 1e-12));

        auto p = Q.support();
        Eigen::VectorXd pv = Eigen::Map<const Eigen::VectorXd>(p.data(), n);
        auto ell = Q.side_lengths();
        Eigen::VectorXd lv = M * pv;
        for (int i = 0; i < n; ++i) CHECK(lv[i] == doctest::Approx(ell[i]).epsilon(1e-9));

        Eigen::MatrixXd A = M * P;
        CHECK((A + A.transpose()).cwiseAbs().maxCoeff() < 1e-10);

        // sum p_i l*_i = 0
        CHECK(std::abs(pv.dot(M * (P * pv))) < 1e-9);
    }
}

TEST_CASE("p-evolute transform geometry") {
    auto rng = SplitMix64(43);
    // triangle: all evolute lines pass through the circumcenter
    Polygon T = gen::random_ngon(3, rng);
    Polygon E = pevolute::transform(T);
    Vec2 a = T.vertex_at(0), b = T.vertex_at(1), c = T.vertex_at(2);
    Eigen::Matrix2d A;
    A << 2 * (b - a).x(), 2 * (b - a).y(), 2 * (c - a).x(), 2 * (c - a).y();
    Eigen::Vector2d rhs(b.squaredNorm() - a.squaredNorm(),
                        c.squaredNorm() - a.squaredNorm());
    Vec2 cc = A.partialPivLu().solve(rhs);
    for (const auto& l : E.lines()) CHECK(std::abs(l.signed_distance(cc)) < 1e-9);

    // general: each evolute line is the perpendicular bisector of a side
    for (int t = 0; t < 30; ++t) {
        Polygon Q = gen::random_ngon(5 + static_cast<int>(rng.below(4)), rng);
        Polygon QE = pevolute::transform(Q);
        for (int i = 0; i < Q.size(); ++i) {
            Vec2 mid = 0.5 * (Q.vertex_at(i - 1) + Q.vertex_at(i));
            CHECK(std::abs(QE.line(i).signed_distance(mid)) < 1e-9);
            CHECK(QE.line(i).alpha ==
                  doctest::Approx(geom::wrap_two_pi(Q.line(i).alpha + kPi / 2)));
        }
    }
}

TEST_CASE("equiangular pentagon m=2 contraction factor 2cos(2pi/5)") {
    Polygon C = harmonics::harmonic_polygon(5, 2, harmonics::Kind::cos);
    Polygon E = pevolute::transform(C);
    Eigen::VectorXd pin(5), pout(5);
    for (int i = 0; i < 5; ++i) {
        pin[i] = C.line(i).p;
        pout[i] = E.line(i).p;
    }
    CHECK(pout.norm() / pin.norm() ==
          doctest::Approx(2.0 * std::cos(kTwoPi / 5)).epsilon(1e-12));
}

TEST_CASE("spectral report") {
    // equiangular n=6: {0, +-i, +-i, 0} as a multiset
    auto rep6 = pevolute::spectral_report(std::vector<double>(6, kTwoPi / 6));
    int zeros = 0, is = 0;
    for (const auto& l : rep6.eigenvalues) {
        if (std::abs(l) < 1e-9) ++zeros;
        if (std::abs(l - std::complex<double>(0, 1)) < 1e-9 ||
            std::abs(l + std::complex<double>(0, 1)) < 1e-9)
            ++is;
    }
    CHECK(zeros == 2);
    CHECK(is == 4);

    auto rng = SplitMix64(44);
    for (int t = 0; t < 50; ++t) {
        Polygon Q = gen::random_ngon(7, rng);
        auto rep = pevolute::spectral_report(Q.turning_angles().theta);
        CHECK(rep.symmetry_residual < 1e-8 * rep.spectral_radius);
        CHECK(rep.invariant_pair_residual < 1e-10);
        // odd n: P_theta is degenerate
        double minmod = 1e300;
        for (const auto& l : rep.eigenvalues) minmod = std::min(minmod, std::abs(l));
        CHECK(minmod < 1e-9 * rep.spectral_radius);
        // +-i always present
        double di = 1e300, dmi = 1e300;
        for (const auto& l : rep.eigenvalues) {
            di = std::min(di, std::abs(l - std::complex<double>(0, 1)));
            dmi = std::min(dmi, std::abs(l + std::complex<double>(0, 1)));
        }
        CHECK(di < 1e-8);
        CHECK(dmi < 1e-8);
    }

    // ill-conditioning flag
    std::vector<double> nearly = {1e-7, 1.0, kTwoPi - 1.0 - 1e-7};
    CHECK(pevolute::spectral_report(nearly).ill_conditioned);
}

TEST_CASE("trace of odd powers vanishes") {
    auto rng = SplitMix64(45);
    for (int t = 0; t < 50; ++t) {
        int n = 4 + static_cast<int>(rng.below(6));
        Polygon Q = gen::random_ngon(n, rng);
        Eigen::MatrixXd P = pevolute::p_matrix(Q.turning_angles().theta);
        double nrm = P.norm();
        Eigen::MatrixXd Pk = Eigen::MatrixXd::Identity(n, n);
        for (int k = 1; k <= n; ++k) {
            Pk = Pk * P;
            if (k % 2 == 1) CHECK(std::abs(Pk.trace()) < 1e-8 * std::pow(nrm, k));
        }
    }
}

TEST_CASE("kernel generator: equilateral value and inscribed circle") {
    auto k3 = pevolute::kernel_generator({kPi / 2, kPi / 2 + kTwoPi / 3,
                                          kPi / 2 + 2 * kTwoPi / 3});
    for (double v : k3) CHECK(v == doctest::Approx(-0.5).epsilon(1e-12));

    auto rng = SplitMix64(46);
    for (int t = 0; t < 30; ++t) {
        int n = 5 + 2 * static_cast<int>(rng.below(3));
        Polygon Q = gen::random_ngon(n, rng);
        auto k = pevolute::kernel_generator(Q.alphas());
        Eigen::MatrixXd P = pevolute::p_matrix(Q.turning_angles().theta);
        Eigen::VectorXd kv = Eigen::Map<const Eigen::VectorXd>(k.data(), n);
        CHECK((P * kv).cwiseAbs().maxCoeff() < 1e-10);
        Polygon K = Q.with_support(k);
        for (const auto& v : K.vertices()) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK_THROWS_AS(pevolute::kernel_generator({0.0, 1.0, 2.0, 3.0}), EvenGon);
}

TEST_CASE("pseudo-Steiner point") {
    auto rng = SplitMix64(47);

    // equiangular hedgehog: pseudo-Steiner = vertex centroid
    for (int n : {5, 7}) {
        Polygon E = gen::random_equiangular(n, rng);
        auto ps = pevolute::pseudo_steiner(E.turning_angles().theta, E.alphas());
        REQUIRE(ps.has_value());
        CHECK((ps->point(E) - harmonics::vertex_centroid(E)).norm() < 1e-9);
    }

    // triangle: pseudo-Steiner = circumcenter = the collapsed evolute point
    Polygon T = gen::random_ngon(3, rng);
    auto psT = pevolute::pseudo_steiner(T.turning_angles().theta, T.alphas());
    REQUIRE(psT.has_value());
    Polygon ET = pevolute::transform(T);
    CHECK((psT->point(T) - ET.vertex_at(0)).norm() < 1e-8);

    // invariance: PS(p) = R_{pi/2} PS(P_theta p), and PS agrees between a
    // polygon and its evolute, near-equiangular odd-gons
    for (int t = 0; t < 100; ++t) {
        int n = 5 + 2 * static_cast<int>(rng.below(2));
        std::vector<double> theta(n, kTwoPi / n);
        double budget = 0;
        for (int i = 0; i + 1 < n; ++i) {
            double d = 0.2 * rng.uniform(-1, 1);
            theta[i] += d;
            budget += d;
        }
        theta[n - 1] -= budget;
        std::vector<CoorientedLine> lines;
        double a = rng.uniform(0, kTwoPi);
        for (int i = 0; i < n; ++i) {
            lines.emplace_back(a, rng.uniform(-1, 1));
            a += theta[i];
        }
        Polygon Q{std::move(lines)};
        auto ps = pevolute::pseudo_steiner(Q.turning_angles().theta, Q.alphas());
        REQUIRE(ps.has_value());
        Polygon QE = pevolute::transform(Q);
        auto ps2 = pevolute::pseudo_steiner(QE.turning_angles().theta, QE.alphas());
        REQUIRE(ps2.has_value());
        CHECK((ps->point(Q) - ps2->point(QE)).norm() < 1e-8);

        // quarter-turn relation
        Eigen::Matrix2d R;
        R << 0, -1, 1, 0;
        Eigen::Vector2d lhs(ps->point(Q));
        Eigen::Vector2d rhs = R * Eigen::Vector2d(ps->point(QE.support()));
        CHECK((lhs - rhs).norm() < 1e-8);

        // translation equivariance
        Vec2 u(0.8, -1.7);
        CHECK((ps->point(Q.translated(u)) - ps->point(Q) - u).norm() < 1e-8);
    }

    // generalized eigenspace dim 2 in the generic case
    Polygon G = gen::random_ngon(6, rng);
    CHECK(pevolute::plus_minus_i_generalized_dim(G.turning_angles().theta) == 2);
}

TEST_CASE("second evolute of a discrete hypocycloid is homothetic") {
    auto rng = SplitMix64(48);
    for (int n : {5, 7, 9}) {
        // m = 1 is the point hypocycloid: the p-space factor still holds but
        // the vertex homothety is meaningless, so start at order 2
        for (int m = 2; 2 * m < n; ++m) {
            double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
            auto pc = harmonics::harmonic_vector(n, m, harmonics::Kind::cos);
            auto ps = harmonics::harmonic_vector(n, m, harmonics::Kind::sin);
            std::vector<CoorientedLine> lines;
            for (int i = 0; i < n; ++i)
                lines.emplace_back(kTwoPi * (i + 1) / n, a * pc[i] + b * ps[i]);
            Polygon P{std::move(lines)};
            Polygon P2 = pevolute::transform(pevolute::transform(P));
            double sigma2 = std::pow(std::sin(kTwoPi * m / n) / std::sin(kTwoPi / n), 2);

            // support numbers gain -sigma^2 in the pi-shifted frame
            for (int i = 0; i < n; ++i)
                CHECK(P2.line(i).p == doctest::Approx(-sigma2 * P.line(i).p).epsilon(1e-10));

            // the labeled vertex map is the homothety with ratio +sigma^2
            // about the hypocycloid center (the two statements agree because
            // alpha shifts by pi)
            auto h = dynamics::homothety_check(P, P2);
            REQUIRE(h.has_value());
            CHECK(h->ratio == doctest::Approx(sigma2).epsilon(1e-9));
            CHECK(h->center.norm() < 1e-9);
        }
    }
    // m = 1 (all lines through one point): the support-number factor is
    // -sigma^2 = -1, i.e. the second evolute fixes the point
    Polygon C1 = harmonics::harmonic_polygon(8, 1, harmonics::Kind::cos);
    Polygon C2 = pevolute::transform(pevolute::transform(C1));
    for (int i = 0; i < 8; ++i)
        CHECK(C2.line(i).p == doctest::Approx(-C1.line(i).p).epsilon(1e-10));
}

TEST_CASE("quadrilateral and pentagon homothety propositions") {
    auto rng = SplitMix64(49);
    for (int t = 0; t < 20; ++t) {
        Polygon Q = gen::random_ngon(4, rng);
        Polygon Q2 = pevolute::transform(pevolute::transform(Q));
        auto h = dynamics::homothety_check(Q, Q2);
        CHECK(h.has_value());

        Polygon P = gen::random_ngon(5, rng);
        Polygon P1 = pevolute::transform(P);
        Polygon P3 = pevolute::transform(pevolute::transform(P1));
        auto g = dynamics::homothety_check(P1, P3);
        CHECK(g.has_value());
    }
}

TEST_CASE("hexagon with parallel opposite sides: P^3 = P^1 as line sets") {
    auto rng = SplitMix64(50);
    for (int t = 0; t < 10; ++t) {
        std::vector<CoorientedLine> lines;
        bool valid = false;
        while (!valid) {
            lines.clear();
            double a0 = rng.uniform(0, kTwoPi), a1 = rng.uniform(0, kTwoPi),
                   a2 = rng.uniform(0, kTwoPi);
            double as[6] = {a0, a1, a2, a0 + kPi, a1 + kPi, a2 + kPi};
            valid = true;
            for (int j = 0; j < 6; ++j) {
                if (std::abs(std::sin(as[(j + 1) % 6] - as[j])) < 0.05) valid = false;
                lines.emplace_back(as[j], rng.uniform(-1, 1));
            }
        }
        Polygon P{std::move(lines)};
        Polygon P1 = pevolute::transform(P);
        Polygon P3 = pevolute::transform(pevolute::transform(P1));
        for (int i = 0; i < 6; ++i)
            CHECK(P3.line(i).same_unoriented(P1.line(i), 1e-9));
    }
}
