#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::involute {

using geom::CoorientedLine;
using geom::Isometry;
using geom::Polygon;
using geom::Vec2;

enum class FamilyKind { none, unique, one_parameter, two_parameter };
enum class Parity { odd, even };

// relative tolerance for quasiperimeter-zero tests
double qp_tolerance(const Polygon& Q);

// Vertices of a P-involute from a seed: consecutive reflections of the seed
// in the sides of Q. The seed must be (numerically) a fixed point of the
// composition, or the chain does not close.
Polygon p_involute_from_seed(const Polygon& Q, const Vec2& seed);

// Sides of an A-involute from a seed line: consecutive reflections of the
// seed line, which must be invariant under the composition.
Polygon a_involute_from_seed(const Polygon& Q, const CoorientedLine& seed);

// P-involutes correspond to fixed points of S = S_n o ... o S_1:
// rotation -> unique, identity -> two-parameter, reflection -> one-parameter
// (points of the axis), translation / glide -> none.
class PInvoluteFamily {
public:
    FamilyKind kind() const { return kind_; }
    const Isometry& composition() const { return s_; }
    const Polygon& evolute() const { return q_; }

    Polygon member(const Vec2& seed) const { return p_involute_from_seed(q_, seed); }
    Polygon at(double t) const;      // one_parameter: signed arclength along the axis
    Polygon unique_member() const;   // unique kind (rotation center seed)

private:
    friend PInvoluteFamily p_involute_family(const Polygon& Q);
    PInvoluteFamily(Polygon q, Isometry s, FamilyKind k)
        : q_(std::move(q)), s_(std::move(s)), kind_(k) {}
    Polygon q_;
    Isometry s_;
    FamilyKind kind_;
};

PInvoluteFamily p_involute_family(const Polygon& Q);

// The distinguished iterable P-involute: zero quasiperimeter member for odd
// n; rotation-center (or unique zero-translation) member for even n.
// Throws NoEvolvent.
Polygon p_evolvent(const Polygon& Q);

// A-involutes correspond to invariant lines of S. Odd n: the axis always
// gives the A_odd-evolvent; a pure reflection adds the pencil of
// perpendiculars (one-parameter). Even n: rotation != pi -> none; point
// reflection -> pencil through the center; translation -> parallel pencil;
// identity -> two-parameter.
class AInvoluteFamily {
public:
    FamilyKind kind() const { return kind_; }
    const Isometry& composition() const { return s_; }
    const Polygon& evolute() const { return q_; }

    Polygon member(const CoorientedLine& seed) const {
        return a_involute_from_seed(q_, seed);
    }
    Polygon at(double t) const;               // one_parameter pencil charts
    Polygon at(double phi, double d) const;   // two_parameter: line (phi, d)
    std::optional<Polygon> a_odd_evolvent() const;  // odd n only

private:
    friend AInvoluteFamily a_involute_family(const Polygon& Q);
    AInvoluteFamily(Polygon q, Isometry s, FamilyKind k)
        : q_(std::move(q)), s_(std::move(s)), kind_(k) {}
    Polygon q_;
    Isometry s_;
    FamilyKind kind_;
};

AInvoluteFamily a_involute_family(const Polygon& Q);

// parity=odd: involute from the axis (always exists for odd n);
// parity=even: the zero-quasiperimeter member of the perpendicular pencil.
Polygon a_evolvent(const Polygon& Q, Parity parity);

// number of sides of Q that act as interior bisectors of the involute P
// (orientation-reversing reflections for the cyclic orientation of P)
int interior_bisector_count(const Polygon& P, const Polygon& Q);

// directions (mod pi) of the A_odd-evolvent sides; odd n (throws EvenGon)
std::vector<double> pedal_angle_map(const std::vector<double>& alpha);

Eigen::MatrixXd pedal_matrix(int n);

// {2 / (1 + omega^k)}, omega = exp(2 pi i / n); odd n (throws EvenGon)
std::vector<std::complex<double>> ergodic_spectrum(int n);

// kn-gon from a period-k point / S^k-invariant line; its evolute is Q
// traversed k times
Polygon k_fold_p_involute(const Polygon& Q, const Vec2& seed, int k);
Polygon k_fold_a_involute(const Polygon& Q, const CoorientedLine& seed, int k);

}  // namespace evolab::involute
