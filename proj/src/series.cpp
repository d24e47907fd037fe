#include "pascalian/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pascalian/combinatorics.hpp"
#include "pascalian/errors.hpp"

namespace pascalian {

SeriesZ::SeriesZ(int order) : order_(order) {
    if (order < 0) throw DomainError("SeriesZ: negative order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

SeriesZ::SeriesZ(int order, std::vector<IntPoly> coeffs) : SeriesZ(order) {
    for (std::size_t j = 0; j < coeffs.size() && j < coeffs_.size(); ++j) coeffs_[j] = std::move(coeffs[j]);
}

const IntPoly& SeriesZ::coeff(int j) const {
    static const IntPoly zero;
    if (j < 0 || j > order_) return zero;
    return coeffs_[static_cast<std::size_t>(j)];
}

void SeriesZ::set_coeff(int j, IntPoly value) {
    if (j < 0 || j > order_) throw DomainError("SeriesZ::set_coeff: index out of range");
    coeffs_[static_cast<std::size_t>(j)] = std::move(value);
}

SeriesZ& SeriesZ::operator+=(const SeriesZ& rhs) {
    for (int j = 0; j <= order_; ++j) coeffs_[j] += rhs.coeff(j);
    return *this;
}

SeriesZ& SeriesZ::operator-=(const SeriesZ& rhs) {
    for (int j = 0; j <= order_; ++j) coeffs_[j] -= rhs.coeff(j);
    return *this;
}

SeriesZ operator*(const SeriesZ& lhs, const SeriesZ& rhs) {
    const int order = std::min(lhs.order_, rhs.order_);
    SeriesZ out(order);
    for (int i = 0; i <= order; ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

SeriesZ operator*(const IntPoly& lhs, const SeriesZ& rhs) {
    SeriesZ out = rhs;
    for (auto& c : out.coeffs_) c = lhs * c;
    return out;
}

SeriesZ SeriesZ::divided_exactly(const BigInt& d) const {
    SeriesZ out(order_);
    for (int j = 0; j <= order_; ++j) {
        std::vector<BigInt> c(coeffs_[j].coefficients().begin(), coeffs_[j].coefficients().end());
        for (auto& v : c) {
            if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
                throw DomainError("SeriesZ::divided_exactly: coefficient of z^" + std::to_string(j) +
                                  " not divisible by " + d.get_str());
            }
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        }
        out.coeffs_[j] = IntPoly(std::move(c));
    }
    return out;
}

std::vector<BigInt> SeriesZ::evaluate_x(const BigInt& value) const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(eval(c, value));
    return out;
}

std::vector<BigInt> central_binomial_series(int order) {
    if (order < 0) throw DomainError("central_binomial_series: negative order");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) out.push_back(pascalian_number(n, 0));
    return out;
}

namespace {

// (1 + 2xz) / (1 - 2xz) = 1 + sum_{j>=1} 2 (2x)^j z^j.
SeriesZ ratio_series(int order) {
    SeriesZ t(order);
    t.set_coeff(0, IntPoly::constant(1));
    for (int j = 1; j <= order; ++j) {
        t.set_coeff(j, IntPoly::monomial(pow2(static_cast<unsigned long>(j) + 1), static_cast<std::size_t>(j)));
    }
    return t;
}

// 1 - z(1 + x^2) inverted: sum_j (1+x^2)^j z^j.
SeriesZ geometric_one_plus_x2(int order) {
    SeriesZ g(order);
    IntPoly power = IntPoly::constant(1);
    const IntPoly step{1, 0, 1};
    for (int j = 0; j <= order; ++j) {
        g.set_coeff(j, power);
        power *= step;
    }
    return g;
}

}  // namespace

SeriesZ sqrt_ratio_series(int order) {
    const SeriesZ t = ratio_series(order);
    // s_0 = 1 and 2 s_j = t_j - sum_{i=1}^{j-1} s_i s_{j-i}.
    SeriesZ s(order);
    s.set_coeff(0, IntPoly::constant(1));
    for (int j = 1; j <= order; ++j) {
        IntPoly acc = t.coeff(j);
        for (int i = 1; i < j; ++i) acc -= s.coeff(i) * s.coeff(j - i);
        SeriesZ single(0, {acc});
        s.set_coeff(j, single.divided_exactly(2).coeff(0));
    }
    return s;
}

SeriesZ gf_G_series(int order) {
    const SeriesZ s = sqrt_ratio_series(order);
    // Numerator 2 + (x-1)(1 - S) = 2 - (x-1)(S - 1); the factor 1/2 must cancel exactly.
    SeriesZ s_minus_one = s;
    s_minus_one.set_coeff(0, IntPoly{});
    SeriesZ numerator = IntPoly{-1, 1} * s_minus_one;
    for (int j = 0; j <= order; ++j) numerator.set_coeff(j, -numerator.coeff(j));
    numerator.set_coeff(0, numerator.coeff(0) + IntPoly::constant(2));
    return numerator.divided_exactly(2) * geometric_one_plus_x2(order);
}

SeriesZ gf_H_series(int order) {
    // S(1, z) = sqrt((1+2z)/(1-2z)); its coefficients are the x = 1 values of S(x, z).
    const std::vector<BigInt> s_at_one = sqrt_ratio_series(order).evaluate_x(1);

    // M = (2x + (1-x)(1 - S(1,z))) / 2, again with an exact halving.
    SeriesZ numerator(order);
    numerator.set_coeff(0, IntPoly{0, 2});
    for (int j = 1; j <= order; ++j) numerator.set_coeff(j, IntPoly{-1, 1} * s_at_one[j]);
    const SeriesZ m = numerator.divided_exactly(2);

    // (x - z(1+x^2)) H = M  =>  x H_j = M_j + (1+x^2) H_{j-1}.
    SeriesZ h(order);
    const IntPoly step{1, 0, 1};
    const IntPoly x{0, 1};
    for (int j = 0; j <= order; ++j) {
        IntPoly rhs = m.coeff(j);
        if (j > 0) rhs += step * h.coeff(j - 1);
        h.set_coeff(j, exact_divide(rhs, x));
    }
    return h;
}

bool check_sqrt_square(int order) {
    const SeriesZ s = sqrt_ratio_series(order);
    SeriesZ lhs = SeriesZ(order, {IntPoly::constant(1), IntPoly{0, -2}}) * (s * s);
    SeriesZ rhs(order, {IntPoly::constant(1), IntPoly{0, 2}});
    return lhs == rhs;
}

bool check_gh_relation(int order) {
    const SeriesZ g = gf_G_series(order);
    const SeriesZ h = gf_H_series(order);
    IntPoly power = IntPoly::constant(1);
    const IntPoly step{1, 0, 1};
    for (int n = 0; n <= order; ++n) {
        // x H(x, xz) contributes x^(n+1) H_n(x) to z^n.
        const IntPoly lhs = g.coeff(n) + h.coeff(n).shifted(static_cast<std::size_t>(n) + 1);
        if (lhs != IntPoly{1, 1} * power) return false;
        power *= step;
    }
    return true;
}

}  // namespace pascalian
