#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pascalian/bigint.hpp"

namespace pascalian {

/// Dense univariate polynomial over the integers, coefficients in ascending degree
/// order. Never stores a trailing zero; the zero polynomial has no coefficients.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending);
    IntPoly(std::initializer_list<BigInt> ascending);

    static IntPoly constant(const BigInt& c);
    static IntPoly monomial(const BigInt& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^i; zero beyond the degree.
    BigInt coeff(std::size_t i) const;
    std::span<const BigInt> coefficients() const { return coeffs_; }
    const BigInt& leading() const;

    /// Coefficients reversed over [0, degree]: z^deg p(1/z).
    IntPoly reversed() const;
    /// p(z^2).
    IntPoly compose_square() const;
    /// z^k p(z).
    IntPoly shifted(std::size_t k) const;
    /// p(-z).
    IntPoly negated_argument() const;

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    BigInt content() const;
    /// p / content, sign-normalized to a positive leading coefficient.
    IntPoly primitive_part() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& rhs);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(IntPoly lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend IntPoly operator*(const BigInt& lhs, IntPoly rhs) { return rhs *= lhs; }
    IntPoly operator-() const;

    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    /// Ascending list, e.g. "[1,1,3,3]".
    std::string to_string() const;

   private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Thrown by exact_divide when the divisor does not divide the dividend over Q.
/// Carries the rational remainder (ascending coefficients).
class RemainderError : public std::runtime_error {
   public:
    RemainderError(const std::string& what, std::vector<Rational> remainder)
        : std::runtime_error(what), remainder_(std::move(remainder)) {}

    const std::vector<Rational>& remainder() const noexcept { return remainder_; }

   private:
    std::vector<Rational> remainder_;
};

/// q with a = b * q. Throws DomainError for b = 0 or when the quotient exists over Q
/// but has non-integral coefficients; throws RemainderError when b does not divide a.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Q (content 1, positive leading coefficient) via the subresultant
/// remainder sequence. Throws DomainError when both inputs are zero.
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

/// Exact Horner evaluation at a rational point.
Rational eval_rational(const IntPoly& p, const Rational& x);

BigInt eval(const IntPoly& p, const BigInt& x);

}  // namespace pascalian
