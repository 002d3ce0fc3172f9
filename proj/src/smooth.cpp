#include "evolab/smooth.hpp"

#include <cmath>
#include <stdexcept>

namespace evolab::smooth {

using geom::kPi;

double SupportPoly::coeff_a(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? 0.0 : it->second.first;
}

double SupportPoly::coeff_b(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? 0.0 : it->second.second;
}

double SupportPoly::magnitude(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? 0.0 : std::hypot(it->second.first, it->second.second);
}

void SupportPoly::set(int k, double a, double b) { coeffs[k] = {a, b}; }

void SupportPoly::add(int k, double a, double b) {
    auto& c = coeffs[k];
    c.first += a;
    c.second += b;
}

SupportPoly& SupportPoly::prune(double tol) {
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = std::hypot(it->second.first, it->second.second) <= tol ? coeffs.erase(it)
                                                                    : std::next(it);
    return *this;
}

double SupportPoly::eval(double alpha) const {
    double v = cycloidal ? -alpha * std::cos(alpha) : 0.0;
    for (const auto& [k, ab] : coeffs) {
        double w = static_cast<double>(k) / q;
        v += ab.first * std::cos(w * alpha) + ab.second * std::sin(w * alpha);
    }
    return v;
}

double SupportPoly::deriv(double alpha) const {
    double v = cycloidal ? -std::cos(alpha) + alpha * std::sin(alpha) : 0.0;
    for (const auto& [k, ab] : coeffs) {
        double w = static_cast<double>(k) / q;
        v += -ab.first * w * std::sin(w * alpha) + ab.second * w * std::cos(w * alpha);
    }
    return v;
}

double SupportPoly::shape_magnitude() const {
    double m = 0;
    for (const auto& [k, ab] : coeffs) {
        if (k == 0 || k == q) continue;
        m = std::max(m, std::hypot(ab.first, ab.second));
    }
    return m;
}

int SupportPoly::dominant_shape_harmonic() const {
    int best = -1;
    double m = 0;
    for (const auto& [k, ab] : coeffs) {
        if (k == 0 || k == q) continue;
        double v = std::hypot(ab.first, ab.second);
        if (v > m) {
            m = v;
            best = k;
        }
    }
    return best;
}

Vec2 curve_point(const SupportPoly& s, double alpha) {
    double p = s.eval(alpha), dp = s.deriv(alpha);
    double c = std::cos(alpha), sn = std::sin(alpha);
    return {p * c - dp * sn, p * sn + dp * c};
}

namespace {

// cos/sin of w*pi/2 for w = k/q; exact at integer frequencies so that
// coefficient identities (Steiner invariance, round trips) hold bit-for-bit
std::pair<double, double> quarter_phase(int k, int q) {
    if (k % q == 0) {
        switch ((((k / q) % 4) + 4) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double w = static_cast<double>(k) / q;
    return {std::cos(w * kPi / 2), std::sin(w * kPi / 2)};
}

// coefficient action of f -> f'(alpha - pi/2) on harmonic k/q:
// derivative (a, b) -> (w b, -w a), then the quarter shift rotates by w pi/2
std::pair<double, double> diff_shift(int k, int q, double a, double b) {
    double w = static_cast<double>(k) / q;
    double A = w * b, B = -w * a;
    auto [c, s] = quarter_phase(k, q);
    return {A * c - B * s, A * s + B * c};
}

std::pair<double, double> diff_shift_inverse(int k, int q, double a, double b) {
    double w = static_cast<double>(k) / q;
    auto [c, s] = quarter_phase(k, q);
    double A = a * c + b * s, B = -a * s + b * c;
    return {-B / w, A / w};
}

}  // namespace

SupportPoly evolute(const SupportPoly& s) {
    SupportPoly out;
    out.q = s.q;
    out.cycloidal = s.cycloidal;
    for (const auto& [k, ab] : s.coeffs) {
        if (k == 0) continue;  // constant term annihilated
        auto [a, b] = diff_shift(k, s.q, ab.first, ab.second);
        out.set(k, a, b);
    }
    if (s.cycloidal) out.add(s.q, kPi / 2, -1.0);
    return out.prune();
}

SupportPoly evolvent(const SupportPoly& s) {
    if (s.cycloidal)
        throw std::invalid_argument("evolvent: cycloidal curves use cycloid_inverse_step");
    if (std::abs(s.coeff_a(0)) > 1e-12)
        throw NonzeroLength("evolvent: nonzero signed length (constant term)");
    SupportPoly out;
    out.q = s.q;
    for (const auto& [k, ab] : s.coeffs) {
        if (k == 0) continue;
        auto [a, b] = diff_shift_inverse(k, s.q, ab.first, ab.second);
        out.set(k, a, b);
    }
    return out.prune();
}

Vec2 steiner_point(const SupportPoly& s) {
    if (s.q != 1) throw std::invalid_argument("steiner_point: closed hedgehog (q=1) required");
    return {s.coeff_a(1), s.coeff_b(1)};
}

std::vector<IterStep> iterate(const SupportPoly& s, int steps, IterMode mode) {
    if (s.cycloidal) throw std::invalid_argument("iterate: cycloidal not supported");
    std::vector<IterStep> out;
    out.reserve(steps);
    SupportPoly cur = s;
    for (int i = 0; i < steps; ++i) {
        cur = mode == IterMode::evolute ? evolute(cur) : evolvent(cur);
        IterStep step;
        step.growth = cur.shape_magnitude();
        step.dominant_k = cur.dominant_shape_harmonic();
        if (step.growth > 0) {
            for (auto& [k, ab] : cur.coeffs) {
                ab.first /= step.growth;
                ab.second /= step.growth;
            }
        }
        step.shape = cur;
        out.push_back(std::move(step));
        if (step.dominant_k < 0) break;  // no shape content left
    }
    return out;
}

SupportPoly cycloid_step(const SupportPoly& f) {
    if (f.q != 1 || f.cycloidal)
        throw std::invalid_argument("cycloid_step: plain 2pi-periodic part expected");
    SupportPoly g = evolute(f);
    g.add(1, kPi / 2, -1.0);
    return g.prune();
}

SupportPoly cycloid_inverse_step(const SupportPoly& g) {
    if (g.q != 1 || g.cycloidal)
        throw std::invalid_argument("cycloid_inverse_step: plain 2pi-periodic part expected");
    SupportPoly h = g;
    h.add(1, -kPi / 2, 1.0);
    return evolvent(h);
}

}  // namespace evolab::smooth
