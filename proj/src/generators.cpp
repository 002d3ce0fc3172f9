#include "evolab/generators.hpp"

#include <cmath>

#include "evolab/p_evolute.hpp"

namespace evolab::gen {

using geom::CoorientedLine;
using geom::kTwoPi;

namespace {

std::vector<double> simplex_theta(int n, SplitMix64& rng) {
    // spacings of sorted uniforms ~ uniform on the simplex; rejected while
    // any angle leaves (0.01, pi - 0.01), so every sample is a discrete
    // hedgehog with well-conditioned cot/csc terms
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<double> u(n - 1);
        for (auto& v : u) v = rng.uniform();
        std::sort(u.begin(), u.end());
        std::vector<double> th(n);
        double prev = 0;
        for (int i = 0; i + 1 < n; ++i) {
            th[i] = (u[i] - prev) * kTwoPi;
            prev = u[i];
        }
        th[n - 1] = (1.0 - prev) * kTwoPi;
        double mn = th[0], mx = th[0];
        for (double t : th) {
            mn = std::min(mn, t);
            mx = std::max(mx, t);
        }
        if (mn >= 0.01 && mx <= geom::kPi - 0.01) return th;
    }
    throw Error("simplex_theta: rejection sampling failed");
}

Polygon polygon_from_theta(const std::vector<double>& theta, SplitMix64& rng) {
    const int n = static_cast<int>(theta.size());
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    double a = rng.uniform(0.0, kTwoPi);
    for (int i = 0; i < n; ++i) {
        lines.emplace_back(a, rng.uniform(-1.0, 1.0));
        a += theta[i];
    }
    return Polygon(std::move(lines));
}

}  // namespace

Polygon random_ngon(int n, SplitMix64& rng) {
    if (n < 3) throw Error("random_ngon: n >= 3");
    return polygon_from_theta(simplex_theta(n, rng), rng);
}

Polygon random_zero_qp(int n, SplitMix64& rng) {
    if (n % 2 == 0) throw EvenGon("random_zero_qp: odd n required");
    for (int attempt = 0; attempt < 100; ++attempt) {
        Polygon P = random_ngon(n, rng);
        auto s = geom::alternating_sums(P.alphas());
        std::vector<double> sb(n);
        double nrm2 = 0;
        for (int j = 0; j < n; ++j) {
            sb[j] = std::sin(s.bj[j]);
            nrm2 += sb[j] * sb[j];
        }
        if (nrm2 < 1e-12) continue;
        auto p = P.support();
        double dot = 0;
        for (int j = 0; j < n; ++j) dot += p[j] * sb[j];
        for (int j = 0; j < n; ++j) p[j] -= sb[j] * dot / nrm2;
        return P.with_support(std::move(p));
    }
    throw Error("random_zero_qp: sampling failed");
}

Polygon random_equiangular(int n, SplitMix64& rng) {
    if (n < 3) throw Error("random_equiangular: n >= 3");
    std::vector<CoorientedLine> lines;
    lines.reserve(n);
    double a0 = rng.uniform(0.0, kTwoPi);
    for (int i = 0; i < n; ++i)
        lines.emplace_back(a0 + kTwoPi * i / n, rng.uniform(-1.0, 1.0));
    return Polygon(std::move(lines));
}

Polygon random_equiangular_zero_perimeter(int n, SplitMix64& rng) {
    Polygon P = random_equiangular(n, rng);
    auto p = P.support();
    double mean = 0;
    for (double v : p) mean += v;
    mean /= n;
    for (double& v : p) v -= mean;
    if (n % 2 == 0) {
        double alt = 0;
        for (int i = 0; i < n; ++i) alt += (i % 2 == 0 ? p[i] : -p[i]);
        alt /= n;
        for (int i = 0; i < n; ++i) p[i] -= (i % 2 == 0 ? alt : -alt);
    }
    return P.with_support(std::move(p));
}

Polygon random_convex(int n, SplitMix64& rng) {
    Polygon P = random_ngon(n, rng);
    auto ell = P.side_lengths();
    double worst = 0;
    for (double l : ell) worst = std::min(worst, l);
    if (worst <= 0) {
        // adding a constant c to p adds c * M theta row sums > 0 to lengths
        auto theta = P.turning_angles().theta;
        auto M = pevolute::m_matrix(theta);
        double minrow = 1e30;
        for (int i = 0; i < n; ++i) minrow = std::min(minrow, M.row(i).sum());
        if (minrow <= 0) throw Error("random_convex: unexpected row sums");
        double c = (-worst + 0.1) / minrow;
        auto p = P.support();
        for (double& v : p) v += c;
        P = P.with_support(std::move(p));
    }
    return P;
}

smooth::SupportPoly random_support_poly(int max_k, SplitMix64& rng) {
    smooth::SupportPoly s;
    for (int k = 2; k <= max_k; ++k)
        s.set(k, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return s;
}

Polygon from_spec(const std::string& spec, SplitMix64& rng) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error("generator spec must be name:n, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    if (name == "random-ngon") return random_ngon(n, rng);
    if (name == "random-zero-qp") return random_zero_qp(n, rng);
    if (name == "random-equiangular") return random_equiangular(n, rng);
    if (name == "random-equiangular-zp") return random_equiangular_zero_perimeter(n, rng);
    if (name == "random-convex") return random_convex(n, rng);
    throw Error("unknown generator '" + name + "'");
}

}  // namespace evolab::gen
