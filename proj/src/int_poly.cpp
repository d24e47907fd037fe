#include "pascalian/int_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "pascalian/errors.hpp"

namespace pascalian {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<BigInt> ascending) : coeffs_(ascending) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::reversed() const {
    std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_square() const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> v(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (coeffs_.empty()) return {};
    std::vector<BigInt> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_argument() const {
    IntPoly out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (coeffs_.empty()) return {};
    BigInt g = content();
    if (coeffs_.back() < 0) g = -g;
    IntPoly out = *this;
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        const auto& a = lhs.coeffs_[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), a.get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string IntPoly::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly pow(const IntPoly& base, unsigned exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly square = base;
    while (exponent) {
        if (exponent & 1U) result *= square;
        exponent >>= 1U;
        if (exponent) square *= square;
    }
    return result;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
    if (a.is_zero()) return {};

    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    if (rem.size() <= db) {
        throw RemainderError("exact_divide: divisor has larger degree", std::move(rem));
    }

    const Rational lead(b.leading());
    std::vector<Rational> quot(rem.size() - db);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational q = rem[i + db] / lead;
        quot[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * Rational(b.coefficients()[j]);
    }
    rem.resize(db);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (!rem.empty()) throw RemainderError("exact_divide: nonzero remainder", std::move(rem));

    std::vector<BigInt> out;
    out.reserve(quot.size());
    for (const auto& q : quot) {
        if (q.get_den() != 1) throw DomainError("exact_divide: quotient is not integral");
        out.push_back(q.get_num());
    }
    return IntPoly(std::move(out));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo_remainder: division by the zero polynomial");
    if (a.degree() < b.degree()) return a;

    const int delta = a.degree() - b.degree();
    const BigInt& lb = b.leading();
    IntPoly r = a;
    int steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly t = b.shifted(static_cast<std::size_t>(r.degree() - b.degree())) * r.leading();
        r *= lb;
        r -= t;
        ++steps;
    }
    for (int i = steps; i < delta + 1; ++i) r *= lb;
    return r;
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd_primitive: both inputs are zero");
    IntPoly A = a.primitive_part();
    IntPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    if (B.is_zero()) return A;

    // Subresultant remainder sequence keeps coefficient growth polynomial.
    BigInt g = 1;
    BigInt h = 1;
    for (;;) {
        const int delta = A.degree() - B.degree();
        IntPoly R = pseudo_remainder(A, B);
        if (R.is_zero()) return B.primitive_part();
        if (R.degree() == 0) return IntPoly::constant(1);

        A = std::move(B);
        BigInt divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        std::vector<BigInt> scaled(R.coefficients().begin(), R.coefficients().end());
        for (auto& c : scaled) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        B = IntPoly(std::move(scaled));

        g = A.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt num = 1;
            for (int i = 0; i < delta; ++i) num *= g;
            BigInt den = 1;
            for (int i = 1; i < delta; ++i) den *= h;
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
}

Rational eval_rational(const IntPoly& p, const Rational& x) {
    Rational acc = 0;
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += Rational(c[i]);
    }
    acc.canonicalize();
    return acc;
}

BigInt eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    const auto c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

}  // namespace pascalian
