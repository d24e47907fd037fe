#include "pascalian/polynomials.hpp"

#include <string>
#include <vector>

#include "pascalian/combinatorics.hpp"
#include "pascalian/errors.hpp"

namespace pascalian {

namespace {

void require_nonneg(const char* what, int n) {
    if (n < 0) throw DomainError(std::string(what) + ": negative index " + std::to_string(n));
}

void require_positive(const char* what, int n) {
    if (n < 1) throw DomainError(std::string(what) + ": need n >= 1, got " + std::to_string(n));
}

BigInt central(int n) { return pascalian_number(n, 0); }

const IntPoly& one_plus_x_squared() {
    static const IntPoly p{1, 0, 1};
    return p;
}

const IntPoly& one_minus_x() {
    static const IntPoly p{1, -1};
    return p;
}

}  // namespace

IntPoly p_poly(int n) {
    require_nonneg("p_poly", n);
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[n - k] = pascalian_number(n, k);
    return IntPoly(std::move(c));
}

IntPoly r_poly(int n) {
    require_nonneg("r_poly", n);
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = pascalian_number(n, k);
    return IntPoly(std::move(c));
}

IntPoly q_poly(int n) {
    require_nonneg("q_poly", n);
    std::vector<BigInt> c(static_cast<std::size_t>(n / 2) + 1);
    for (int k = 0; k <= n / 2; ++k) c[k] = binomial(n, k);
    return IntPoly(std::move(c));
}

IntPoly u_poly(int m) {
    require_nonneg("u_poly", m);
    const int n = 2 * m;
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;
    for (int k = 1; k <= m; ++k) {
        c[k] = pascalian_number(n, n - 2 * k) - pascalian_number(n, n - 2 * k + 1);
    }
    return IntPoly(std::move(c));
}

bool check_r_recursion(int n) {
    require_positive("check_r_recursion", n);
    const IntPoly lhs = r_poly(n).shifted(1);
    const IntPoly rhs = one_plus_x_squared() * r_poly(n - 1) + IntPoly{-1, 1} * central(n - 1);
    return lhs == rhs;
}

bool check_p_recursion(int n) {
    require_positive("check_p_recursion", n);
    const IntPoly rhs = one_plus_x_squared() * p_poly(n - 1) +
                        one_minus_x().shifted(static_cast<std::size_t>(n)) * central(n - 1);
    return p_poly(n) == rhs;
}

bool check_extended_recursion(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw DomainError("check_extended_recursion: need 1 <= k <= n-1, got n=" +
                          std::to_string(n) + ", k=" + std::to_string(k));
    }
    IntPoly sum;
    IntPoly power = IntPoly::constant(1);  // (1+x^2)^j
    for (int j = 0; j < k; ++j) {
        sum += power.shifted(static_cast<std::size_t>(n - j)) * central(n - j - 1);
        power *= one_plus_x_squared();
    }
    const IntPoly rhs = power * p_poly(n - k) + one_minus_x() * sum;
    return p_poly(n) == rhs;
}

bool check_linear_decomposition(int n) {
    require_positive("check_linear_decomposition", n);
    IntPoly sum;
    for (int j = 0; j < n; ++j) {
        sum += p_poly(j).shifted(static_cast<std::size_t>(n - j - 1)) * central(n - j - 1);
    }
    const IntPoly rhs = IntPoly::monomial(pow2(static_cast<unsigned long>(n)),
                                          static_cast<std::size_t>(n)) +
                        one_minus_x() * sum;
    return p_poly(n) == rhs;
}

bool check_binomial_identity(int n) {
    require_nonneg("check_binomial_identity", n);
    const IntPoly lhs = p_poly(n) + r_poly(n).shifted(static_cast<std::size_t>(n) + 1);
    const IntPoly rhs = IntPoly{1, 1} * pow(one_plus_x_squared(), static_cast<unsigned>(n));
    return lhs == rhs;
}

bool check_u_identity(int m) {
    require_nonneg("check_u_identity", m);
    const IntPoly lhs = one_minus_x() * p_poly(2 * m);
    const IntPoly rhs =
        u_poly(m).compose_square() - IntPoly::monomial(central(2 * m), 2 * static_cast<std::size_t>(m) + 1);
    return lhs == rhs;
}

bool check_q_decomposition(int n) {
    require_nonneg("check_q_decomposition", n);
    IntPoly rhs = IntPoly{1, 1} * q_poly(n).compose_square();
    if (n % 2 == 0) rhs -= IntPoly::monomial(central(n), static_cast<std::size_t>(n) + 1);
    return p_poly(n) == rhs;
}

}  // namespace pascalian
