#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "evolab/geometry.hpp"

namespace evolab::pevolute {

using geom::Polygon;
using geom::Vec2;

inline constexpr double kSpecEps = 1e-8;  // relative to spectral radius

// Cyclically tridiagonal transform matrix of the support numbers,
// row i:  -b_i/2 | (a_i - a_{i+1})/2 | b_{i+1}/2   with
// a_i = cot theta_{i-1/2}, b_i = csc theta_{i-1/2}. Trace is zero.
Eigen::MatrixXd p_matrix(const std::vector<double>& theta);

// Symmetric matrix with M_theta p = side lengths; M P + (M P)^T = 0.
Eigen::MatrixXd m_matrix(const std::vector<double>& theta);

// alpha* = alpha + pi/2, p* = P_theta p; each output line is the
// perpendicular bisector of the corresponding side.
Polygon transform(const Polygon& P);

struct SpectralReport {
    enum class MaxModClass { real_pair, imaginary_pair, complex_quadruple };

    std::vector<std::complex<double>> eigenvalues;
    double spectral_radius = 0;
    double symmetry_residual = 0;       // Hausdorff distance spectrum vs -spectrum
    double invariant_pair_residual = 0; // max residual of P C = -S, P S = C
    MaxModClass max_modulus_class = MaxModClass::real_pair;
    bool ill_conditioned = false;       // some |sin theta| < 1e-6
};

// Dense nonsymmetric eigensolve with balancing. Throws EigensolverFailure.
SpectralReport spectral_report(const std::vector<double>& theta);

// (cos B_1, ..., cos B_n): generator of ker P_theta for odd n (throws EvenGon).
// The polygon it supports is inscribed in a unit circle centered at the origin.
std::vector<double> kernel_generator(const std::vector<double>& alpha);

// Linear point map p -> (a, b), the projection onto span{C, S} along the
// P_theta-invariant complement, identified with R^2 via C -> (1,0), S -> (0,1).
struct PseudoSteiner {
    Eigen::Matrix<double, 2, Eigen::Dynamic> projector;
    Vec2 point(const std::vector<double>& p) const;
    Vec2 point(const Polygon& P) const { return point(P.support()); }
};

// dimension of the generalized eigenspace of {+i, -i}, via the rank of
// (P^2 + I)^n (SVD threshold 1e-8 sigma_max)
int plus_minus_i_generalized_dim(const std::vector<double>& theta);

// Absent iff the generalized eigenspace has dimension > 2, i.e. span{C, S}
// has no invariant complement and no pseudo-Steiner point exists.
std::optional<PseudoSteiner> pseudo_steiner(const std::vector<double>& theta,
                                            const std::vector<double>& alpha);

}  // namespace evolab::pevolute
