#include "pascalian/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pascalian/errors.hpp"

namespace pascalian {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double nearest_parameter_distance(Complex z, const std::vector<Complex>& samples) {
    const std::size_t count = samples.size();
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < count; ++j) {
        const double d = std::abs(z - samples[j]);
        if (d < best_dist) {
            best_dist = d;
            best = j;
        }
    }

    // Golden-section search on [theta_{j-1}, theta_{j+1}].
    const double step = kTwoPi / static_cast<double>(count);
    double lo = (static_cast<double>(best) - 1.0) * step;
    double hi = (static_cast<double>(best) + 1.0) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double t) { return std::abs(z - boundary_point(t)); };
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a);
    double fb = f(b);
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    return std::min({best_dist, fa, fb});
}

}  // namespace

CurveSpec CurveSpec::finite(int n) {
    if (n < 2) throw DomainError("CurveSpec: n must be at least 2, got " + std::to_string(n));
    return CurveSpec(n);
}

double CurveSpec::K() const {
    if (is_limit()) return 0.5;
    const double nn = static_cast<double>(n_) * n_;
    return (nn - 1.0) / (2.0 * nn);
}

double gamma_value(Complex z, const CurveSpec& spec) {
    const double r = std::abs(z);
    if (r == 0) return 0;
    double denominator = std::abs(1.0 + z * z);
    if (!spec.is_limit()) denominator *= std::pow(std::abs(1.0 + z), 1.0 / spec.n());
    if (denominator == 0) return std::numeric_limits<double>::infinity();
    return r / denominator;
}

bool in_gamma(Complex z, const CurveSpec& spec) {
    return std::abs(z) <= 1.0 && gamma_value(z, spec) <= spec.K();
}

namespace {

// e^{i pi k / 2}, exactly.
Complex quarter_turn(long k) {
    static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

// e^{2 pi i num / den}, exact at multiples of a quarter turn.
Complex unit_root(long num, long den) {
    num %= den;
    if ((4 * num) % den == 0) return quarter_turn(4 * num / den);
    return std::polar(1.0, kTwoPi * static_cast<double>(num) / static_cast<double>(den));
}

Complex boundary_point_at(Complex w) {
    // Principal root has nonnegative real part, so |1 + s| >= 1 and the larger
    // root is computed without cancellation; the smaller follows from z1 z2 = 1.
    const Complex s = std::sqrt(1.0 - w * w);
    const Complex big = (1.0 + s) / w;
    const Complex small = 1.0 / big;
    return std::abs(small) <= 1.0 + 1e-12 ? small : big;
}

}  // namespace

Complex boundary_point(double theta) {
    // Within a few ulps of a multiple of pi/2, use the exact quarter turn.
    const double quarters = std::nearbyint(theta / (kTwoPi / 4));
    if (std::abs(theta - quarters * (kTwoPi / 4)) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(theta))) {
        return boundary_point_at(quarter_turn(static_cast<long>(quarters)));
    }
    return boundary_point_at(std::polar(1.0, theta));
}

std::vector<Complex> approximants(int n) {
    if (n < 1) throw DomainError("approximants: n must be positive");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) out.push_back(boundary_point_at(unit_root(m, n)));
    return out;
}

std::vector<Complex> boundary_samples(std::size_t count) {
    std::vector<Complex> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(boundary_point_at(unit_root(static_cast<long>(j), static_cast<long>(count))));
    }
    return out;
}

std::vector<Complex> gamma_n_boundary(int n, std::size_t count) {
    const CurveSpec spec = CurveSpec::finite(n);
    const double K = spec.K();
    std::vector<Complex> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        const Complex dir = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(count));
        if (gamma_value(dir, spec) <= K) {
            out.push_back(dir);
            continue;
        }
        double lo = 0;
        double hi = 1;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (gamma_value(mid * dir, spec) <= K ? lo : hi) = mid;
        }
        out.push_back(lo * dir);
    }
    return out;
}

double distance_to_curve(Complex z, std::size_t samples) {
    if (samples < 3) throw DomainError("distance_to_curve: need at least 3 samples");
    return nearest_parameter_distance(z, boundary_samples(samples));
}

bool limit_region_check(Complex z) {
    const Complex i(0.0, 1.0);
    return std::abs(z - i) <= std::numbers::sqrt2 && std::abs(z + i) <= std::numbers::sqrt2;
}

GammaReport no_roots_in_gamma(const RootSet& rs, double tol) {
    const CurveSpec spec = CurveSpec::finite(rs.n);
    GammaReport report;
    report.K = spec.K();
    report.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const Complex z = rs.roots[i];
        if (std::abs(z) > 1.0) continue;
        const double margin = gamma_value(z, spec) - report.K;
        report.min_margin = std::min(report.min_margin, margin);
        if (margin < -tol) report.violations.push_back(i);
    }
    return report;
}

ConvergenceMetrics convergence_metrics(const RootSet& rs, std::size_t samples) {
    if (rs.n < 3) throw DomainError("convergence_metrics: n must be at least 3");
    if (samples < 3) throw DomainError("convergence_metrics: need at least 3 samples");
    const auto curve = boundary_samples(samples);
    ConvergenceMetrics m;

    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (rs.is_trivial(i)) continue;
        m.hausdorff_to_curve = std::max(m.hausdorff_to_curve, nearest_parameter_distance(rs.roots[i], curve));
    }

    // Every root, the exact root -1 of odd n included, takes its nearest approximant.
    const auto zm = approximants(rs.n);
    for (const auto& z : rs.roots) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& w : zm) nearest = std::min(nearest, std::abs(z - w));
        m.max_match_to_zm = std::max(m.max_match_to_zm, nearest);
    }

    for (const auto& b : curve) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& z : rs.roots) nearest = std::min(nearest, std::abs(b - z));
        m.fill_gap = std::max(m.fill_gap, nearest);
    }
    return m;
}

}  // namespace pascalian
