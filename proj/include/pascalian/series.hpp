#pragma once

#include <vector>

#include "pascalian/int_poly.hpp"

namespace pascalian {

/// Truncated power series in z whose coefficients are integer polynomials in x.
/// Arithmetic is exact modulo z^(order+1).
class SeriesZ {
   public:
    explicit SeriesZ(int order);
    SeriesZ(int order, std::vector<IntPoly> coeffs);

    int order() const { return order_; }

    /// Coefficient of z^j (an IntPoly in x); zero for j > order.
    const IntPoly& coeff(int j) const;
    void set_coeff(int j, IntPoly value);
    const std::vector<IntPoly>& coefficients() const { return coeffs_; }

    SeriesZ& operator+=(const SeriesZ& rhs);
    SeriesZ& operator-=(const SeriesZ& rhs);
    friend SeriesZ operator+(SeriesZ lhs, const SeriesZ& rhs) { return lhs += rhs; }
    friend SeriesZ operator-(SeriesZ lhs, const SeriesZ& rhs) { return lhs -= rhs; }
    /// Truncated product; the result has the smaller of the two orders.
    friend SeriesZ operator*(const SeriesZ& lhs, const SeriesZ& rhs);
    friend SeriesZ operator*(const IntPoly& lhs, const SeriesZ& rhs);

    /// Every coefficient divided by d; throws DomainError if any division is inexact.
    SeriesZ divided_exactly(const BigInt& d) const;

    /// Substitutes x = value in every coefficient.
    std::vector<BigInt> evaluate_x(const BigInt& value) const;

    bool operator==(const SeriesZ& rhs) const = default;

   private:
    int order_;
    std::vector<IntPoly> coeffs_;
};

/// <n 0> = C(n, floor(n/2)) for n = 0..order.
std::vector<BigInt> central_binomial_series(int order);

/// sqrt((1+2xz)/(1-2xz)) mod z^(order+1), obtained by extracting the square root of
/// the ratio series coefficient by coefficient (no closed form used).
SeriesZ sqrt_ratio_series(int order);

/// sum_n P_n(x) z^n, built from G(x,z) = (2 + (x-1)(1 - S)) / (2 (1 - z(1+x^2))).
SeriesZ gf_G_series(int order);

/// sum_n R_n(x) z^n, built from H(x,z) = (2x + (1-x)(1 - S(1,z))) / (2 (x - z(1+x^2)))
/// by solving the linear recurrence the denominator imposes.
SeriesZ gf_H_series(int order);

/// S^2 (1 - 2xz) - (1 + 2xz) == 0 mod z^(order+1).
bool check_sqrt_square(int order);

/// Coefficient of z^n in G(x,z) + x H(x,xz) equals (1+x)(1+x^2)^n for n <= order.
bool check_gh_relation(int order);

}  // namespace pascalian
