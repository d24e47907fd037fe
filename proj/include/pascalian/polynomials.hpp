#pragma once

#include "pascalian/int_poly.hpp"

namespace pascalian {

/// P_n(z) = sum_k <n k> z^(n-k).
IntPoly p_poly(int n);

/// R_n(x) = sum_k <n k> x^k, the reciprocal of P_n.
IntPoly r_poly(int n);

/// Truncated binomial polynomial q_n(z) = sum_{k <= n/2} C(n,k) z^k.
IntPoly q_poly(int n);

/// U_2m(z) = 1 + sum_{k=1..m} (<2m, 2m-2k> - <2m, 2m-2k+1>) z^k, which satisfies
/// (1 - z) P_2m(z) = U_2m(z^2) - <2m 0> z^(2m+1).
IntPoly u_poly(int m);

// Exact identity checks. Each compares two IntPoly values built independently and
// returns whether they agree; preconditions are enforced with DomainError.

/// x R_n(x) == (x^2 + 1) R_{n-1}(x) + <n-1 0> (x - 1), n >= 1.
bool check_r_recursion(int n);

/// P_n == (1 + x^2) P_{n-1} + <n-1 0> (1 - x) x^n, n >= 1.
bool check_p_recursion(int n);

/// P_n == (1+x^2)^k P_{n-k} + (1-x) sum_{j<k} <n-j-1 0> (1+x^2)^j x^(n-j), 1 <= k <= n-1.
bool check_extended_recursion(int n, int k);

/// P_n == (2x)^n + (1-x) sum_{j<n} <n-j-1 0> P_j x^(n-j-1), n >= 1.
bool check_linear_decomposition(int n);

/// P_n + x^(n+1) R_n == (1+x)(1+x^2)^n, n >= 0.
bool check_binomial_identity(int n);

/// (1 - z) P_2m == U_2m(z^2) - <2m 0> z^(2m+1), m >= 0.
bool check_u_identity(int m);

/// P_n == (1+z) q_n(z^2) - [n even] <n 0> z^(n+1), n >= 0.
bool check_q_decomposition(int n);

}  // namespace pascalian
