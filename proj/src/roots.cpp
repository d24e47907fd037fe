#include "pascalian/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pascalian/combinatorics.hpp"
#include "pascalian/curve.hpp"
#include "pascalian/errors.hpp"
#include "pascalian/polynomials.hpp"

namespace pascalian {

std::string_view to_string(RootClass c) {
    switch (c) {
        case RootClass::trivial:
            return "trivial";
        case RootClass::real:
            return "real";
        case RootClass::imaginary:
            return "imaginary";
        case RootClass::generic:
            return "generic";
    }
    return "generic";
}

std::optional<std::size_t> RootSet::trivial_index() const {
    if (!has_trivial_root() || roots.empty()) return std::nullopt;
    return roots.size() - 1;
}

bool RootSet::is_trivial(std::size_t i) const {
    auto t = trivial_index();
    return t && *t == i;
}

double RootSet::worst_residual() const {
    double worst = 0;
    for (double r : residuals) worst = std::max(worst, r);
    return worst;
}

namespace {

std::vector<double> monic_doubles(const IntPoly& p) {
    const double lead = to_double(p.leading());
    std::vector<double> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(to_double(c) / lead);
    return out;
}

// Inside the unit disk, P_n(z) = B(z) (1 - F(z)) with B = (1+z)(1+z^2)^n and
// F = z^(n+1) R_n(z) / B; for odd n the factor 1+z is removed from both B and R_n.
// F is a product of well-conditioned pieces, so p'/p is accurate to a few ulps even
// where the coefficient form loses about n/2 bits (near +-i(sqrt(2)-1), where |1+z^2|
// is much smaller than 1+|z|^2). Outside the disk, where P_n has no roots, the
// reversed coefficient form is used instead.
class LogDerivative {
   public:
    LogDerivative(int n, std::vector<double> monic) : n_(n), odd_(n % 2 == 1), monic_(std::move(monic)) {
        const IntPoly e = odd_ ? exact_divide(r_poly(n), IntPoly{1, 1}) : r_poly(n);
        const BigInt& e0 = e.coeff(0);
        for (const auto& c : e.coefficients()) a_.push_back(Rational(c, e0).get_d());
        scale_ = Rational(e0, pow2(static_cast<unsigned long>(n))).get_d();
    }

    struct Value {
        Complex dlog;         // p'(z) / p(z)
        double f_distance;    // |F(z) - 1|; infinite outside the unit disk
    };

    Value operator()(Complex z) const {
        if (std::abs(z) > 1.0) return {outside(z), std::numeric_limits<double>::infinity()};
        Complex a = a_.back();
        Complex da = 0;
        for (std::size_t k = a_.size() - 1; k-- > 0;) {
            da = da * z + a;
            a = a * z + a_[k];
        }
        const Complex one_plus_sq = 1.0 + z * z;
        Complex f = z * power(2.0 * z / one_plus_sq, n_) * scale_ * a;
        const double nn = static_cast<double>(n_);
        Complex b_log = 2.0 * nn * z / one_plus_sq;
        if (!odd_) {
            f /= 1.0 + z;
            b_log += 1.0 / (1.0 + z);
        }
        const Complex m = (nn + 1.0) / z + da / a;
        return {(f * m - b_log) / (f - 1.0), std::abs(f - 1.0)};
    }

    // One fixed-point step for the root labelled by theta = 2 pi m / n: the exact
    // equation F = 1 reads (2z/(1+z^2))^n = H(z); take the principal n-th root of H,
    // rotate by e^(i theta) and map back to the disk.
    Complex refine(Complex z, double theta) const {
        Complex a = a_.back();
        for (std::size_t k = a_.size() - 1; k-- > 0;) a = a * z + a_[k];
        Complex h = 1.0 / (z * scale_ * a);
        if (!odd_) h *= 1.0 + z;
        const Complex w = std::polar(1.0, theta) * std::exp(std::log(h) / static_cast<double>(n_));
        return w / (1.0 + std::sqrt(1.0 - w * w));
    }

   private:
    // p'/p from the reversed polynomial evaluated at 1/z.
    Complex outside(Complex z) const {
        const std::size_t d = monic_.size() - 1;
        const Complex y = 1.0 / z;
        Complex rp = monic_[0];
        Complex rdp = 0;
        for (std::size_t k = 1; k <= d; ++k) {
            rdp = rdp * y + rp;
            rp = rp * y + monic_[k];
        }
        return (static_cast<double>(d) * rp - y * rdp) / (z * rp);
    }

    static Complex power(Complex w, int e) {
        Complex out = 1.0;
        while (e) {
            if (e & 1) out *= w;
            e >>= 1;
            if (e) w *= w;
        }
        return out;
    }

    int n_;
    bool odd_;
    std::vector<double> monic_;  // the polynomial being solved, divided by its leading coefficient
    std::vector<double> a_;  // E / E(0), ascending
    double scale_;           // E(0) / 2^n
};

// Approximants z_m, moved towards the roots of P_n by a few fixed-point steps and
// perturbed slightly so that no two seeds coincide.
std::vector<Complex> initial_guesses(int n, std::size_t degree, const LogDerivative& dlog) {
    constexpr int kRefineSteps = 3;
    constexpr double kPerturbation = 1e-4;
    std::vector<Complex> seeds;
    if (n >= 8) {
        const auto zm = approximants(n);
        for (std::size_t m = 0; m < zm.size(); ++m) {
            const double theta = 2 * std::numbers::pi * static_cast<double>(m + 1) / n;
            Complex z = zm[m];
            for (int k = 0; k < kRefineSteps; ++k) {
                const Complex next = dlog.refine(z, theta);
                if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
                z = next;
            }
            seeds.push_back(z + kPerturbation * std::polar(1.0, 0.7 * static_cast<double>(m + 1)));
        }
        if (seeds.size() > degree) {
            // Odd n: the deflated trivial root takes the approximant nearest -1.
            auto nearest = std::min_element(seeds.begin(), seeds.end(), [](Complex a, Complex b) {
                return std::abs(a + 1.0) < std::abs(b + 1.0);
            });
            seeds.erase(nearest);
        }
    } else {
        for (std::size_t k = 0; k < degree; ++k) {
            const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) + 0.4;
            seeds.push_back(std::polar(0.7, angle));
        }
    }
    return seeds;
}

}  // namespace

double scaled_residual(const std::vector<double>& ascending, Complex z) {
    using LComplex = std::complex<long double>;
    const LComplex zz(z.real(), z.imag());
    const long double r = std::abs(zz);
    LComplex p = 0;
    long double bound = 0;
    for (std::size_t k = ascending.size(); k-- > 0;) {
        p = p * zz + static_cast<long double>(ascending[k]);
        bound = bound * r + std::fabs(static_cast<long double>(ascending[k]));
    }
    if (bound == 0) return 0;
    return static_cast<double>(std::abs(p) / bound);
}

RootSet solve_roots(int n, const Tolerances& tol) {
    if (n < 1) throw DomainError("solve_roots: n must be at least 1, got " + std::to_string(n));
    if (n > kMaxRootDegree) {
        throw ResourceError("solve_roots: n=" + std::to_string(n) + " exceeds the cap " +
                            std::to_string(kMaxRootDegree));
    }

    const bool odd = n % 2 == 1;
    const auto degree = static_cast<std::size_t>(odd ? n - 1 : n);
    const LogDerivative dlog(n, monic_doubles(odd ? exact_divide(p_poly(n), IntPoly{1, 1}) : p_poly(n)));

    RootSet rs;
    rs.n = n;
    std::vector<Complex> z = initial_guesses(n, degree, dlog);
    std::vector<bool> done(degree, false);

    // A root is frozen once its correction is negligible or F(z) equals 1 to rounding
    // level; iterating further only adds noise.
    constexpr double kStopRelative = 1e-12;
    const double noise_floor = 4.0 * (n + 1.0) * std::numeric_limits<double>::epsilon();
    rs.converged = degree == 0;
    for (int iter = 1; iter <= tol.max_iterations && !rs.converged; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < degree; ++i) {
            if (done[i]) continue;
            const Complex d = dlog(z[i]).dlog;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            const Complex step = 1.0 / (d - repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                z[i] *= Complex(1.0, 1e-3);  // landed on a pole or a critical point: nudge
                all_done = false;
                continue;
            }
            z[i] -= step;
            const double f_distance = dlog(z[i]).f_distance;
            if (f_distance < noise_floor ||
                (f_distance < 1e-8 && std::abs(step) <= kStopRelative * std::max(1.0, std::abs(z[i])))) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        rs.iterations = iter;
        rs.converged = all_done;
    }

    std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
        const double aa = std::arg(a);
        const double ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
    if (odd) z.push_back(Complex(-1.0, 0.0));

    const auto full_coeffs = monic_doubles(p_poly(n));
    rs.roots = std::move(z);
    rs.residuals.reserve(rs.roots.size());
    for (const auto& root : rs.roots) rs.residuals.push_back(scaled_residual(full_coeffs, root));

    const double worst = rs.worst_residual();
    if (!(worst < tol.residual)) {
        throw NumericError("solve_roots: n=" + std::to_string(n) + " did not converge after " +
                               std::to_string(rs.iterations) + " iterations",
                           worst);
    }
    return rs;
}

RootClass classify(const RootSet& rs, std::size_t i, double imag_tol) {
    if (rs.is_trivial(i)) return RootClass::trivial;
    const Complex z = rs.roots.at(i);
    if (std::abs(z.imag()) < imag_tol) return RootClass::real;
    if (std::abs(z.real()) < imag_tol) return RootClass::imaginary;
    return RootClass::generic;
}

int count_real_roots(const RootSet& rs, double imag_tol) {
    return static_cast<int>(std::count_if(rs.roots.begin(), rs.roots.end(),
                                          [&](Complex z) { return std::abs(z.imag()) < imag_tol; }));
}

int count_imaginary_pairs(const RootSet& rs, double imag_tol) {
    return static_cast<int>(std::count_if(rs.roots.begin(), rs.roots.end(), [&](Complex z) {
        return std::abs(z.real()) < imag_tol && z.imag() >= imag_tol;
    }));
}

AnnulusReport annulus_check(const RootSet& rs, double tol) {
    const double inner = std::numbers::sqrt2 - 1.0;
    AnnulusReport report;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (rs.is_trivial(i)) continue;
        const double r = std::abs(rs.roots[i]);
        report.min_norm = report.min_norm ? std::min(*report.min_norm, r) : r;
        report.max_norm = report.max_norm ? std::max(*report.max_norm, r) : r;
        if (!(r > inner - tol && r < 1.0 + tol)) report.violations.push_back(i);
    }
    return report;
}

VietaReport vieta_check(const RootSet& rs, double vieta_per_degree) {
    VietaReport report;
    report.sum = 0;
    report.product = 1;
    for (const auto& z : rs.roots) {
        report.sum += z;
        report.product *= z;
    }
    const int n = rs.n;
    report.expected_sum = n % 2 == 1 ? -1.0 : 2.0 / (n + 2.0) - 1.0;
    const double central = to_double(pascalian_number(n, 0));
    report.expected_product = (n % 2 == 0 ? 1.0 : -1.0) / central;
    report.sum_error = std::abs(report.sum - report.expected_sum);
    report.product_error = std::abs(report.product - report.expected_product);
    report.sum_ok = report.sum_error < vieta_per_degree * n;
    report.product_ok = report.product_error < vieta_per_degree;
    return report;
}

}  // namespace pascalian
