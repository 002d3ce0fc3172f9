#include "evolab/p_evolute.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace evolab::pevolute {

using geom::CoorientedLine;
using geom::kPi;
using geom::kTwoPi;

namespace {

void check_theta(const std::vector<double>& theta) {
    if (theta.size() < 3) throw Error("p_matrix: n >= 3 required");
    for (double t : theta)
        if (std::abs(std::sin(t)) <= geom::kParallelEps)
            throw DegenerateTurning("theta = 0 mod pi");
}

// Parlett-Reinsch style balancing with powers of two; similarity transform,
// leaves the spectrum unchanged.
void balance(Eigen::MatrixXd& A) {
    const int n = static_cast<int>(A.rows());
    const double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0, c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(A(j, i));
                r += std::abs(A(i, j));
            }
            if (c == 0 || r == 0) continue;
            double g = r / radix, f = 1.0, s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                A.row(i) /= f;
                A.col(i) *= f;
            }
        }
    }
}

}  // namespace

Eigen::MatrixXd p_matrix(const std::vector<double>& theta) {
    check_theta(theta);
    const int n = static_cast<int>(theta.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double tp = theta[(i - 1 + n) % n];  // theta_{i-1/2}
        double tn = theta[i];                // theta_{i+1/2}
        M(i, (i - 1 + n) % n) = -0.5 / std::sin(tp);
        M(i, i) = 0.5 * (1.0 / std::tan(tp) - 1.0 / std::tan(tn));
        M(i, (i + 1) % n) = 0.5 / std::sin(tn);
    }
    return M;
}

Eigen::MatrixXd m_matrix(const std::vector<double>& theta) {
    check_theta(theta);
    const int n = static_cast<int>(theta.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double tp = theta[(i - 1 + n) % n];
        double tn = theta[i];
        M(i, (i - 1 + n) % n) = 1.0 / std::sin(tp);
        M(i, i) = -(1.0 / std::tan(tp) + 1.0 / std::tan(tn));
        M(i, (i + 1) % n) = 1.0 / std::sin(tn);
    }
    return M;
}

Polygon transform(const Polygon& P) {
    auto turning = P.turning_angles();
    Eigen::MatrixXd M = p_matrix(turning.theta);
    auto p = P.support();
    Eigen::VectorXd pv = Eigen::Map<const Eigen::VectorXd>(p.data(), p.size());
    Eigen::VectorXd ps = M * pv;
    std::vector<CoorientedLine> lines;
    lines.reserve(P.size());
    for (int i = 0; i < P.size(); ++i)
        lines.emplace_back(P.line(i).alpha + kPi / 2, ps[i]);
    return Polygon(std::move(lines));
}

SpectralReport spectral_report(const std::vector<double>& theta) {
    const int n = static_cast<int>(theta.size());
    Eigen::MatrixXd M = p_matrix(theta);

    SpectralReport rep;
    for (double t : theta)
        if (std::abs(std::sin(t)) < 1e-6) rep.ill_conditioned = true;

    Eigen::MatrixXd B = M;
    balance(B);
    Eigen::EigenSolver<Eigen::MatrixXd> es(B, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw EigensolverFailure("spectral_report: eigensolver did not converge");
    rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);

    for (const auto& l : rep.eigenvalues)
        rep.spectral_radius = std::max(rep.spectral_radius, std::abs(l));

    // Hausdorff distance between the spectrum and its negation
    double haus = 0;
    for (const auto& l : rep.eigenvalues) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& m : rep.eigenvalues) best = std::min(best, std::abs(l + m));
        haus = std::max(haus, best);
    }
    rep.symmetry_residual = haus;

    // P C = -S, P S = C with alphas accumulated from theta
    Eigen::VectorXd C(n), S(n);
    double a = 0;
    for (int i = 0; i < n; ++i) {
        C[i] = std::cos(a);
        S[i] = std::sin(a);
        a += theta[i];
    }
    rep.invariant_pair_residual =
        std::max((M * C + S).cwiseAbs().maxCoeff(), (M * S - C).cwiseAbs().maxCoeff());

    // class of the maximal-modulus eigenvalue set
    double tol = kSpecEps * std::max(rep.spectral_radius, 1.0);
    bool all_real = true, all_imag = true;
    for (const auto& l : rep.eigenvalues) {
        if (std::abs(l) < rep.spectral_radius - tol) continue;
        if (std::abs(l.imag()) > tol) all_real = false;
        if (std::abs(l.real()) > tol) all_imag = false;
    }
    rep.max_modulus_class = all_real  ? SpectralReport::MaxModClass::real_pair
                            : all_imag ? SpectralReport::MaxModClass::imaginary_pair
                                       : SpectralReport::MaxModClass::complex_quadruple;
    return rep;
}

std::vector<double> kernel_generator(const std::vector<double>& alpha) {
    if (alpha.size() % 2 == 0) throw EvenGon("kernel_generator: odd n required");
    auto s = geom::alternating_sums(alpha);
    std::vector<double> p(alpha.size());
    for (size_t j = 0; j < alpha.size(); ++j) p[j] = std::cos(s.bj[j]);
    return p;
}

Vec2 PseudoSteiner::point(const std::vector<double>& p) const {
    Eigen::VectorXd pv = Eigen::Map<const Eigen::VectorXd>(p.data(), p.size());
    Eigen::Vector2d ab = projector * pv;
    return {ab[0], ab[1]};
}

namespace {

// numerically scaled (P^2 + I)^n via repeated squaring
Eigen::MatrixXd gen_eig_probe(const Eigen::MatrixXd& P) {
    const int n = static_cast<int>(P.rows());
    Eigen::MatrixXd K = P * P + Eigen::MatrixXd::Identity(n, n);
    double nrm = K.norm();
    if (nrm > 0) K /= nrm;
    int pw = 1;
    while (pw < n) {
        K = K * K;
        double f = K.norm();
        if (f > 0) K /= f;
        pw *= 2;
    }
    return K;
}

}  // namespace

int plus_minus_i_generalized_dim(const std::vector<double>& theta) {
    const int n = static_cast<int>(theta.size());
    Eigen::MatrixXd K = gen_eig_probe(p_matrix(theta));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K);
    const auto& sv = svd.singularValues();
    double thresh = 1e-8 * sv[0];
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (sv[i] > thresh) ++rank;
    return n - rank;
}

std::optional<PseudoSteiner> pseudo_steiner(const std::vector<double>& theta,
                                            const std::vector<double>& alpha) {
    const int n = static_cast<int>(theta.size());
    if (static_cast<int>(alpha.size()) != n)
        throw Error("pseudo_steiner: theta/alpha size mismatch");
    Eigen::MatrixXd K = gen_eig_probe(p_matrix(theta));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(K, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    double thresh = 1e-8 * sv[0];
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (sv[i] > thresh) ++rank;
    if (n - rank != 2) return std::nullopt;

    // R^n = span{C, S} + range((P^2+I)^n); extract the (a, b) coordinates
    Eigen::MatrixXd basis(n, n);
    for (int i = 0; i < n; ++i) {
        basis(i, 0) = std::cos(alpha[i]);
        basis(i, 1) = std::sin(alpha[i]);
    }
    basis.rightCols(rank) = svd.matrixU().leftCols(rank);
    Eigen::MatrixXd inv = basis.partialPivLu().inverse();
    PseudoSteiner ps;
    ps.projector = inv.topRows(2);
    return ps;
}

}  // namespace evolab::pevolute
