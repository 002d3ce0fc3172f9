#pragma once

#include <map>
#include <utility>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::smooth {

using geom::Vec2;

// Trigonometric-polynomial support function
//   p(alpha) = [cycloidal ? -alpha cos alpha : 0]
//              + sum_k a_k cos(k alpha / q) + b_k sin(k alpha / q).
// q = 1 for hedgehogs, q = n for n-hedgehogs; (n+1/2)-hedgehogs use odd k
// with odd q. Coefficients are sparse; differentiation is exact on them.
struct SupportPoly {
    int q = 1;
    bool cycloidal = false;
    std::map<int, std::pair<double, double>> coeffs;  // k -> (a_k, b_k)

    double coeff_a(int k) const;
    double coeff_b(int k) const;
    double magnitude(int k) const;  // hypot(a_k, b_k)
    void set(int k, double a, double b);
    void add(int k, double a, double b);
    SupportPoly& prune(double tol = 1e-15);

    double eval(double alpha) const;
    double deriv(double alpha) const;

    // largest |coeff| over shape harmonics (k/q not in {0, 1}); 0 if none
    double shape_magnitude() const;
    int dominant_shape_harmonic() const;  // argmax k over shape harmonics; -1 if none
};

Vec2 curve_point(const SupportPoly& s, double alpha);

// support of the evolute: p'(alpha - pi/2), exact on coefficients
SupportPoly evolute(const SupportPoly& s);

// zero-mean antiderivative inverse; requires zero constant term
// (throws NonzeroLength)
SupportPoly evolvent(const SupportPoly& s);

// (a_1, b_1); q = 1 required
Vec2 steiner_point(const SupportPoly& s);

enum class IterMode { evolute, evolvent };

struct IterStep {
    SupportPoly shape;   // normalized to unit max shape-coefficient magnitude
    int dominant_k;      // dominant shape harmonic after the step
    double growth;       // normalization factor removed at this step
};

std::vector<IterStep> iterate(const SupportPoly& s, int steps, IterMode mode);

// cycloidal family: periodic part f maps to f'(alpha - pi/2) + (pi/2) cos - sin
SupportPoly cycloid_step(const SupportPoly& f);
SupportPoly cycloid_inverse_step(const SupportPoly& g);

}  // namespace evolab::smooth
