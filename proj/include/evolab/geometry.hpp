#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "evolab/errors.hpp"

namespace evolab::geom {

using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// tolerance policy: closed-form double-precision constructions throughout
inline constexpr double kParallelEps = 1e-9;  // on |sin(dalpha)|
inline constexpr double kIsoEps = 1e-9;       // absolute, on coordinates
inline constexpr double kAngleEps = 1e-9;

double wrap_two_pi(double a);  // representative in [0, 2pi)
double wrap_pi(double a);      // representative in (-pi, pi]
Vec2 unit(double angle);       // (cos a, sin a)

// Line {x : <x, e_alpha> = p}, cooriented by the unit normal e_alpha.
// Reversing the coorientation is (alpha, p) -> (alpha+pi, -p).
struct CoorientedLine {
    double alpha;  // canonical representative in [0, 2pi)
    double p;

    CoorientedLine(double alpha_, double p_) : alpha(wrap_two_pi(alpha_)), p(p_) {}

    CoorientedLine reversed() const { return {alpha + kPi, -p}; }
    Vec2 normal() const { return unit(alpha); }
    Vec2 direction() const { return unit(alpha + kPi / 2); }  // orienting vector
    double signed_distance(const Vec2& u) const { return u.dot(normal()) - p; }
    Vec2 foot() const { return p * normal(); }
    Vec2 point_at(double t) const { return foot() + t * direction(); }

    bool same_unoriented(const CoorientedLine& o, double tol) const;
};

// Intersection of two non-parallel lines. Throws ParallelLines.
Vec2 vertex(const CoorientedLine& a, const CoorientedLine& b);

// Reflection of a point across a line.
Vec2 reflect_point(const CoorientedLine& mirror, const Vec2& u);

// Image of a cooriented line under reflection; the orienting vector is
// transported by the reflection, so alpha' = 2*alpha_mirror - alpha mod 2pi.
CoorientedLine reflect_line(const CoorientedLine& mirror, const CoorientedLine& l);

// B(alpha) = sum (-1)^(i-1) alpha_i mod 2pi, and for odd n the cyclic
// alternating sums B_j = sum_{i=1}^{n-1} (-1)^i alpha_{j+i}.
struct AlternatingSums {
    double total;            // B, reduced to [0, 2pi)
    std::vector<double> bj;  // odd n only; empty otherwise
};
AlternatingSums alternating_sums(const std::vector<double>& alpha);

// Cyclic sequence of cooriented lines; consecutive lines non-parallel.
// Immutable value; derived quantities are recomputed on demand.
class Polygon {
public:
    explicit Polygon(std::vector<CoorientedLine> lines);

    enum class Coorientation { ccw, cw };
    // Vertex-listed input; coorientation by outward normals for ccw order.
    static Polygon from_vertices(const std::vector<Vec2>& verts, Coorientation co);

    int size() const { return static_cast<int>(lines_.size()); }
    const CoorientedLine& line(int i) const { return lines_[mod(i)]; }
    const std::vector<CoorientedLine>& lines() const { return lines_; }

    std::vector<double> alphas() const;
    std::vector<double> support() const;

    // vertex i = line(i) ^ line(i+1)  (half-integer label i+1/2)
    Vec2 vertex_at(int i) const { return vertex(line(i), line(i + 1)); }
    std::vector<Vec2> vertices() const;

    // signed length of side i = <P_{i+1/2} - P_{i-1/2}, direction(i)>
    std::vector<double> side_lengths() const;

    struct Turning {
        std::vector<double> theta;  // theta[i] = alpha_{i+1} - alpha_i in (-pi, pi)
        int k;                      // total turning, sum theta = 2 k pi
    };
    Turning turning_angles() const;

    // sum p_j sin(B_j); odd n only (throws EvenGon)
    double quasiperimeter() const;

    Polygon with_support(std::vector<double> p) const;
    Polygon translated(const Vec2& u) const;
    Polygon scaled(double s) const;  // about the origin

    double max_vertex_radius() const;
    double diameter() const;

private:
    int mod(int i) const {
        int n = size();
        int r = i % n;
        return r < 0 ? r + n : r;
    }
    std::vector<CoorientedLine> lines_;
};

// Classified planar isometry.
class Isometry {
public:
    enum class Kind { identity, rotation, translation, reflection, glide };

    static Isometry identity();
    static Isometry rotation(const Vec2& center, double angle);
    static Isometry translation(const Vec2& v);
    static Isometry reflection(const CoorientedLine& axis);
    static Isometry glide(const CoorientedLine& axis, double shift);

    Kind kind() const { return kind_; }
    Vec2 apply(const Vec2& u) const;

    const Vec2& center() const { return center_; }
    double angle() const { return angle_; }
    const Vec2& vector() const { return vec_; }
    const CoorientedLine& axis() const { return axis_; }
    double glide_shift() const { return shift_; }

    // classify an orthogonal affine map x -> L x + t
    static Isometry classify(const Eigen::Matrix2d& L, const Vec2& t);

private:
    Isometry() : axis_(0.0, 0.0) {}
    Kind kind_ = Kind::identity;
    Vec2 center_{0, 0};
    double angle_ = 0;
    Vec2 vec_{0, 0};
    CoorientedLine axis_;
    double shift_ = 0;
};

// S = S_n o ... o S_1, reflections in the given lines, applied left to right
// (lines[0] first). Throws EmptyInput.
Isometry compose_reflections(const std::vector<CoorientedLine>& lines);

// smallest k >= 1 with S^k = id, if the rotation angle is a rational
// multiple of 2pi (continued fractions, denominators <= kmax, residual 1e-9)
std::optional<int> periodicity(const Isometry& s, int kmax = 64);

// p/q with q <= max_den approximating x to within tol, via continued fractions
std::optional<std::pair<long, long>> rational_approx(double x, long max_den, double tol);

}  // namespace evolab::geom
