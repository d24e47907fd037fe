#pragma once

#include <cstddef>
#include <vector>

#include "pascalian/roots.hpp"

namespace pascalian {

/// Selects Gamma_n (finite n >= 2) or the limit region Gamma.
class CurveSpec {
   public:
    static CurveSpec finite(int n);
    static CurveSpec limit() { return CurveSpec(0); }

    bool is_limit() const { return n_ == 0; }
    int n() const { return n_; }
    /// K_n = (n^2 - 1) / (2 n^2), or 1/2 at the limit.
    double K() const;

   private:
    explicit CurveSpec(int n) : n_(n) {}
    int n_;
};

/// |z| / (|1+z|^(1/n) |1+z^2|), or |z| / |1+z^2| at the limit.
/// +infinity where the denominator vanishes and z != 0.
double gamma_value(Complex z, const CurveSpec& spec);

/// gamma_value(z) <= K and |z| <= 1.
bool in_gamma(Complex z, const CurveSpec& spec);

/// The solution of w z^2 - 2z + w = 0 (w = e^{i theta}) inside the closed unit disk.
Complex boundary_point(double theta);

/// z_m = boundary_point(2 pi m / n), m = 1..n.
std::vector<Complex> approximants(int n);

/// `count` points boundary_point(2 pi j / count), j = 0..count-1.
std::vector<Complex> boundary_samples(std::size_t count);

/// Boundary of Gamma_n traced along `count` rays from the origin (Gamma_n is
/// star-shaped about 0): on each ray, the first radius where gamma_value reaches
/// K_n, or the unit circle if it never does.
std::vector<Complex> gamma_n_boundary(int n, std::size_t count);

/// Distance from z to the limit curve: nearest of `samples` parametric points,
/// then golden-section refinement on the neighbouring parameter interval.
double distance_to_curve(Complex z, std::size_t samples = 4096);

/// |z - i| <= sqrt(2) and |z + i| <= sqrt(2).
bool limit_region_check(Complex z);

struct GammaReport {
    double K = 0;
    double min_margin = 0;  // min over roots with |z| <= 1 of gamma_value - K_n
    std::vector<std::size_t> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks that no root lies in Gamma_n. Throws DomainError for n < 2.
GammaReport no_roots_in_gamma(const RootSet& rs, double tol = Tolerances{}.boundary);

struct ConvergenceMetrics {
    double hausdorff_to_curve = 0;  // max over nontrivial roots of distance to the limit curve
    double max_match_to_zm = 0;     // max over all roots of the distance to the nearest z_m
    double fill_gap = 0;            // max over curve samples of distance to the nearest root
};

/// Throws DomainError for n < 3.
ConvergenceMetrics convergence_metrics(const RootSet& rs, std::size_t samples = 4096);

}  // namespace pascalian
