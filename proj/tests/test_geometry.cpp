#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "evolab/geometry.hpp"
#include "evolab/generators.hpp"
#include "evolab/rng.hpp"

using namespace evolab;
using geom::CoorientedLine;
using geom::kPi;
using geom::kTwoPi;
using geom::Polygon;
using geom::Vec2;

namespace {

// probe oracle: raw consecutive point reflections
Vec2 reflect_chain(const std::vector<CoorientedLine>& lines, Vec2 u) {
    for (const auto& l : lines) u = geom::reflect_point(l, u);
    return u;
}

Polygon equilateral_triangle() {
    return Polygon({{kPi / 2, 1.0}, {kPi / 2 + kTwoPi / 3, 1.0}, {kPi / 2 + 2 * kTwoPi / 3, 1.0}});
}

}  // namespace

TEST_CASE("vertex: closed form against direct 2x2 solve") {
    CHECK((geom::vertex({0, 1}, {kPi / 2, 1}) - Vec2(1, 1)).norm() < 1e-15);
    CHECK(geom::vertex({0, 0}, {kPi / 2, 0}).norm() < 1e-15);

    CoorientedLine a(0, 2), b(kPi / 3, 1);
    Eigen::Matrix2d M;
    M << std::cos(a.alpha), std::sin(a.alpha), std::cos(b.alpha), std::sin(b.alpha);
    Eigen::Vector2d rhs(a.p, b.p);
    Eigen::Vector2d direct = M.partialPivLu().solve(rhs);
    CHECK((geom::vertex(a, b) - Vec2(direct)).norm() < 1e-14);

    CHECK_THROWS_AS(geom::vertex({0.3, 1}, {0.3 + kPi, 2}), ParallelLines);
}

TEST_CASE("vertex lies on both lines for random polygons") {
    auto rng = SplitMix64(99);
    for (int t = 0; t < 50; ++t) {
        Polygon P = gen::random_ngon(5 + static_cast<int>(rng.below(4)), rng);
        for (int i = 0; i < P.size(); ++i) {
            Vec2 v = P.vertex_at(i);
            CHECK(std::abs(P.line(i).signed_distance(v)) < geom::kIsoEps);
            CHECK(std::abs(P.line(i + 1).signed_distance(v)) < geom::kIsoEps);
        }
    }
}

TEST_CASE("side_lengths: circumscribed equilateral triangle") {
    auto ell = equilateral_triangle().side_lengths();
    for (double l : ell) CHECK(l == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("side_lengths match the vertex-distance oracle with orientation sign") {
    auto rng = SplitMix64(7);
    for (int t = 0; t < 30; ++t) {
        Polygon P = gen::random_ngon(5, rng);
        auto ell = P.side_lengths();
        for (int i = 0; i < 5; ++i) {
            Vec2 a = P.vertex_at(i - 1), b = P.vertex_at(i);
            double dist = (b - a).norm();
            double sign = (b - a).dot(P.line(i).direction()) >= 0 ? 1.0 : -1.0;
            CHECK(ell[i] == doctest::Approx(sign * dist).epsilon(1e-9));
        }
    }
}

TEST_CASE("turning angles: equiangular, relabeling, C_{n/2}") {
    for (int n : {4, 7}) {
        std::vector<CoorientedLine> lines;
        for (int j = 0; j < n; ++j) lines.emplace_back(kTwoPi * j / n, 0.3 * j);
        auto t = Polygon(lines).turning_angles();
        CHECK(t.k == 1);
        for (double th : t.theta) CHECK(th == doctest::Approx(kTwoPi / n).epsilon(1e-12));

        std::reverse(lines.begin(), lines.end());
        auto tr = Polygon(lines).turning_angles();
        CHECK(tr.k == -1);
        for (double th : tr.theta) CHECK(th == doctest::Approx(-kTwoPi / n).epsilon(1e-12));
    }
    // C_{n/2}(n): regular n/2-gon, each side taken twice, still total turning 1
    int n = 6;
    std::vector<CoorientedLine> lines;
    for (int j = 1; j <= n; ++j)
        lines.emplace_back(kTwoPi * j / n, (j % 2 == 0) ? 1.0 : -1.0);
    CHECK(Polygon(lines).turning_angles().k == 1);
}

TEST_CASE("polygon construction rejects parallel consecutive lines") {
    CHECK_THROWS_AS(Polygon({{0, 1}, {0, 2}, {1, 0}}), DegenerateTurning);
    CHECK_THROWS_AS(Polygon({{0, 1}, {kPi, 2}, {1, 0}}), DegenerateTurning);
}

TEST_CASE("alternating sums") {
    auto s2 = geom::alternating_sums({0, kPi / 2});
    CHECK(s2.total == doctest::Approx(3 * kPi / 2));  // -pi/2 mod 2pi
    CHECK(s2.bj.empty());

    auto s3 = geom::alternating_sums({0, kTwoPi / 3, 2 * kTwoPi / 3});
    for (double b : s3.bj) CHECK(b == doctest::Approx(kTwoPi / 3).epsilon(1e-12));

    // B = alpha_1 + B_1 for random odd n
    auto rng = SplitMix64(11);
    for (int t = 0; t < 20; ++t) {
        int n = 3 + 2 * static_cast<int>(rng.below(4));
        std::vector<double> a(n);
        for (auto& v : a) v = rng.uniform(0, kTwoPi);
        auto s = geom::alternating_sums(a);
        double d = geom::wrap_two_pi(a[0] + s.bj[0] - s.total);
        CHECK(std::min(d, kTwoPi - d) < 1e-9);
    }
}

TEST_CASE("2 B_j equals the negated alternating turning-angle sum mod 2pi") {
    // theta_{j+1/2} - theta_{j+3/2} + ... = -2 B_j (mod 2pi) for odd n
    auto rng = SplitMix64(12);
    for (int t = 0; t < 20; ++t) {
        int n = 5 + 2 * static_cast<int>(rng.below(3));
        Polygon P = gen::random_ngon(n, rng);
        auto alpha = P.alphas();
        auto theta = P.turning_angles().theta;
        auto s = geom::alternating_sums(alpha);
        for (int j = 0; j < n; ++j) {
            double alt = 0;
            for (int i = 0; i < n; ++i)
                alt += (i % 2 == 0 ? 1.0 : -1.0) * theta[(j + i) % n];
            double d = geom::wrap_two_pi(alt + 2 * s.bj[j]);
            CHECK(std::min(d, kTwoPi - d) < 1e-9);
        }
    }
}

TEST_CASE("quasiperimeter") {
    Polygon tri = equilateral_triangle();
    CHECK(tri.quasiperimeter() == doctest::Approx(3 * std::sqrt(3.0) / 2).epsilon(1e-12));

    CHECK(tri.with_support({0, 0, 0}).quasiperimeter() == doctest::Approx(0.0));

    // glide shift of the composed reflections equals 2 * quasiperimeter
    geom::Isometry s = geom::compose_reflections(tri.lines());
    REQUIRE(s.kind() == geom::Isometry::Kind::glide);
    CHECK(std::abs(s.glide_shift()) ==
          doctest::Approx(2 * tri.quasiperimeter()).epsilon(1e-12));

    std::vector<CoorientedLine> four = {{0.1, 1}, {1.0, 2}, {2.2, -1}, {4.0, 0.5}};
    CHECK_THROWS_AS(Polygon(four).quasiperimeter(), EvenGon);

    // proportional to the perimeter for equiangular odd-gons: the ratio
    // depends on n only, not on the phase or the support numbers
    auto rng = SplitMix64(13);
    auto ratio = [](const Polygon& P) {
        double perim = 0;
        for (double l : P.side_lengths()) perim += l;
        return P.quasiperimeter() / perim;
    };
    Polygon A = gen::random_equiangular(7, rng);
    Polygon B = gen::random_equiangular(7, rng);
    CHECK(ratio(A) == doctest::Approx(ratio(B)).epsilon(1e-9));
}

TEST_CASE("reflect_point") {
    CHECK((geom::reflect_point({0, 1}, {0, 0}) - Vec2(2, 0)).norm() < 1e-15);
    CHECK((geom::reflect_point({0, 1}, {1, 5}) - Vec2(1, 5)).norm() < 1e-15);
    auto rng = SplitMix64(3);
    for (int t = 0; t < 100; ++t) {
        CoorientedLine m(rng.uniform(0, kTwoPi), rng.uniform(-2, 2));
        Vec2 u(rng.uniform(-3, 3), rng.uniform(-3, 3));
        CHECK((geom::reflect_point(m, geom::reflect_point(m, u)) - u).norm() <
              geom::kIsoEps);
    }
}

TEST_CASE("reflect_line") {
    // mirror = y-axis (alpha=0, p=0), l = x-axis with alpha = pi/2:
    // same point set, reversed orientation
    auto r = geom::reflect_line({0, 0}, {kPi / 2, 0});
    CHECK(r.alpha == doctest::Approx(3 * kPi / 2));
    CHECK(r.p == doctest::Approx(0.0));

    CoorientedLine m(1.1, 0.7);
    auto self = geom::reflect_line(m, m);
    CHECK(self.alpha == doctest::Approx(m.alpha));
    CHECK(self.p == doctest::Approx(m.p));

    // pointwise oracle: images of two points of l lie on the image line,
    // and the transported orienting direction matches
    auto rng = SplitMix64(4);
    for (int t = 0; t < 100; ++t) {
        CoorientedLine mir(rng.uniform(0, kTwoPi), rng.uniform(-2, 2));
        CoorientedLine l(rng.uniform(0, kTwoPi), rng.uniform(-2, 2));
        auto img = geom::reflect_line(mir, l);
        Vec2 x1 = geom::reflect_point(mir, l.point_at(-1.3));
        Vec2 x2 = geom::reflect_point(mir, l.point_at(2.1));
        CHECK(std::abs(img.signed_distance(x1)) < geom::kIsoEps);
        CHECK(std::abs(img.signed_distance(x2)) < geom::kIsoEps);
        // orienting vector transported by the reflection
        Vec2 nm = mir.normal();
        Vec2 d = l.direction();
        Vec2 dimg = d - 2.0 * d.dot(nm) * nm;
        CHECK((dimg - img.direction()).norm() < 1e-12);
    }
}

TEST_CASE("compose_reflections: classification basics") {
    // x-axis then y-axis: rotation by pi about the origin
    auto s = geom::compose_reflections({{kPi / 2, 0}, {0, 0}});
    REQUIRE(s.kind() == geom::Isometry::Kind::rotation);
    CHECK(s.center().norm() < 1e-12);
    CHECK(std::abs(std::abs(s.angle()) - kPi) < 1e-12);

    auto id = geom::compose_reflections({{1.0, 0.5}, {1.0, 0.5}});
    CHECK(id.kind() == geom::Isometry::Kind::identity);

    CHECK_THROWS_AS(geom::compose_reflections({}), EmptyInput);
}

TEST_CASE("compose_reflections agrees with the probe-point oracle") {
    auto rng = SplitMix64(5);
    const std::vector<Vec2> probes = {{0, 0}, {1, 0}, {0, 1}};
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng.below(9));
        std::vector<CoorientedLine> lines;
        for (int i = 0; i < n; ++i)
            lines.emplace_back(rng.uniform(0, kTwoPi), rng.uniform(-2, 2));
        auto s = geom::compose_reflections(lines);
        // parity matches
        if (n % 2 == 1)
            CHECK((s.kind() == geom::Isometry::Kind::reflection ||
                   s.kind() == geom::Isometry::Kind::glide));
        else
            CHECK((s.kind() == geom::Isometry::Kind::rotation ||
                   s.kind() == geom::Isometry::Kind::translation ||
                   s.kind() == geom::Isometry::Kind::identity));
        for (const auto& u : probes)
            CHECK((s.apply(u) - reflect_chain(lines, u)).norm() < 1e-9);
    }
}

TEST_CASE("even count: rotation angle is -2B mod 2pi") {
    auto rng = SplitMix64(6);
    for (int t = 0; t < 50; ++t) {
        int n = 2 * (1 + static_cast<int>(rng.below(3)));
        std::vector<double> alpha(n);
        std::vector<CoorientedLine> lines;
        for (int i = 0; i < n; ++i) {
            alpha[i] = rng.uniform(0, kTwoPi);
            lines.emplace_back(alpha[i], rng.uniform(-1, 1));
        }
        auto s = geom::compose_reflections(lines);
        if (s.kind() != geom::Isometry::Kind::rotation) continue;
        double b = geom::alternating_sums(alpha).total;
        double d = geom::wrap_two_pi(s.angle() + 2 * b);
        CHECK(std::min(d, kTwoPi - d) < 1e-9);
    }
}

TEST_CASE("odd count: axis direction, quasiperimeter and S^2(0)") {
    auto rng = SplitMix64(8);
    for (int t = 0; t < 200; ++t) {
        int n = 3 + 2 * static_cast<int>(rng.below(4));
        std::vector<double> alpha(n);
        std::vector<double> ps(n);
        std::vector<CoorientedLine> lines;
        for (int i = 0; i < n; ++i) {
            alpha[i] = rng.uniform(0, kTwoPi);
            ps[i] = rng.uniform(-1, 1);
            lines.emplace_back(alpha[i], ps[i]);
        }
        auto s = geom::compose_reflections(lines);
        auto sums = geom::alternating_sums(alpha);

        // axis normal has angular parameter B mod pi
        double axis_normal = s.axis().alpha;
        double d = geom::wrap_two_pi(axis_normal - sums.total);
        double off = std::min({d, std::abs(d - kPi), kTwoPi - d});
        CHECK(off < 1e-9);

        // S^2(0) = 4 (sum p_j sin B_j) e_{pi/2 + B}
        double qp = 0;
        for (int j = 0; j < n; ++j) qp += ps[j] * std::sin(sums.bj[j]);
        Vec2 s2 = s.apply(s.apply(Vec2(0, 0)));
        Vec2 expect = 4.0 * qp * geom::unit(kPi / 2 + sums.total);
        CHECK((s2 - expect).norm() < 1e-9);

        // glide <-> nonzero quasiperimeter
        if (s.kind() == geom::Isometry::Kind::glide)
            CHECK(std::abs(qp) > 1e-12);
        else
            CHECK(std::abs(qp) < 1e-7);
    }
}

TEST_CASE("isometry demotions near degenerate parameters") {
    Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
    CHECK(geom::Isometry::classify(I, {0, 0}).kind() == geom::Isometry::Kind::identity);
    CHECK(geom::Isometry::classify(I, {1, 0}).kind() == geom::Isometry::Kind::translation);
    Eigen::Matrix2d R;  // reflection across the x-axis
    R << 1, 0, 0, -1;
    CHECK(geom::Isometry::classify(R, {0, 0}).kind() == geom::Isometry::Kind::reflection);
    CHECK(geom::Isometry::classify(R, {1e-12, 0}).kind() ==
          geom::Isometry::Kind::reflection);
    CHECK(geom::Isometry::classify(R, {0.5, 0}).kind() == geom::Isometry::Kind::glide);
}

TEST_CASE("from_vertices: ccw outward normals, vertices recovered") {
    std::vector<Vec2> sq = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    Polygon P = Polygon::from_vertices(sq, Polygon::Coorientation::ccw);
    // vertex i of the polygon is input vertex i+1
    for (int i = 0; i < 4; ++i)
        CHECK((P.vertex_at(i) - sq[(i + 1) % 4]).norm() < 1e-12);
    CHECK(P.turning_angles().k == 1);
    // outward: origin is inside, so all support numbers relative to an
    // interior point are positive
    Polygon Q = P.translated(Vec2(-0.5, -0.5));
    for (const auto& l : Q.lines()) CHECK(l.p > 0);
}

TEST_CASE("periodicity and rational approximation") {
    auto r = geom::rational_approx(2.0 / 3.0, 64, 1e-9);
    REQUIRE(r.has_value());
    CHECK(r->first == 2);
    CHECK(r->second == 3);
    CHECK(!geom::rational_approx(1.0 / std::sqrt(2.0), 64, 1e-12).has_value());

    auto rot = geom::Isometry::rotation({0, 0}, 2 * kTwoPi / 3);
    auto k = geom::periodicity(rot);
    REQUIRE(k.has_value());
    CHECK(*k == 3);
    CHECK(!geom::periodicity(geom::Isometry::translation({1, 0})).has_value());
}
