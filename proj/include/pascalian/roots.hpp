#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace pascalian {

using Complex = std::complex<double>;

/// Largest n accepted by solve_roots: C(512,256) ~ 4.7e152 still fits a double.
inline constexpr int kMaxRootDegree = 512;

struct Tolerances {
    double residual = 1e-10;          // scaled residual every root must beat
    double imag = 1e-8;               // |im| (real root) or |re| (imaginary root) threshold
    double vieta_per_degree = 1e-6;   // root-sum tolerance is this times n; product uses it as is
    double annulus = 1e-9;            // slack on sqrt(2)-1 < |z| < 1
    double boundary = 1e-9;           // slack on the K_n comparison for Gamma_n
    int max_iterations = 200;
};

enum class RootClass { trivial, real, imaginary, generic };

std::string_view to_string(RootClass c);

/// All n complex roots of P_n. For odd n the trivial root -1 is stored last and
/// is exact; the rest are sorted by argument, then modulus.
struct RootSet {
    int n = 0;
    std::vector<Complex> roots;
    std::vector<double> residuals;  // |P_n(z)| / sum |c_k| |z|^k, per root
    int iterations = 0;             // Aberth sweeps used
    bool converged = false;         // every root met the stopping rule before max_iterations

    bool has_trivial_root() const { return n % 2 == 1; }
    std::optional<std::size_t> trivial_index() const;
    bool is_trivial(std::size_t i) const;
    double worst_residual() const;
};

/// Aberth-Ehrlich simultaneous iteration seeded at the limit-curve approximants.
/// Throws DomainError for n < 1, ResourceError for n > kMaxRootDegree and
/// NumericError (carrying the worst residual) when the residual tolerance is missed.
RootSet solve_roots(int n, const Tolerances& tol = {});

/// Scaled residual of `z` against ascending real coefficients.
double scaled_residual(const std::vector<double>& ascending, Complex z);

RootClass classify(const RootSet& rs, std::size_t i, double imag_tol = Tolerances{}.imag);

/// Roots with |im| < imag_tol (the trivial root included).
int count_real_roots(const RootSet& rs, double imag_tol = Tolerances{}.imag);

/// Roots with |re| < imag_tol and positive imaginary part; one per conjugate pair.
int count_imaginary_pairs(const RootSet& rs, double imag_tol = Tolerances{}.imag);

struct AnnulusReport {
    std::optional<double> min_norm;  // empty when there are no nontrivial roots
    std::optional<double> max_norm;
    std::vector<std::size_t> violations;

    bool passed() const { return violations.empty(); }
};

/// Nontrivial roots against sqrt(2)-1 - tol < |z| < 1 + tol.
AnnulusReport annulus_check(const RootSet& rs, double tol = Tolerances{}.annulus);

struct VietaReport {
    Complex sum;
    Complex product;
    double expected_sum = 0;      // -1 for odd n, 2/(n+2) - 1 for even n
    double expected_product = 0;  // (-1)^n / C(n, n/2)
    double sum_error = 0;
    double product_error = 0;
    bool sum_ok = false;
    bool product_ok = false;

    bool passed() const { return sum_ok && product_ok; }
};

VietaReport vieta_check(const RootSet& rs, double vieta_per_degree = Tolerances{}.vieta_per_degree);

}  // namespace pascalian
