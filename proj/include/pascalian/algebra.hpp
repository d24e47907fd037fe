#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pascalian/int_poly.hpp"

namespace pascalian {

/// P_n = (1 + z) * even_part(z^2) for odd n, verified exactly.
struct FactorizationWitness {
    int n = 0;
    IntPoly linear;     // 1 + z
    IntPoly even_part;  // q_n, as a polynomial in z (compose with z^2)
    bool checked = false;
};

/// Throws DomainError for even or non-positive n.
FactorizationWitness factor_odd(int n);

/// Throws DomainError for negative input.
bool is_perfect_square(const BigInt& v);

/// Necessary condition for q_n(z^2) to be reducible when q_n is irreducible: square
/// constant and leading coefficients. The irreducibility of q_n itself is assumed
/// (it is known from the truncated-binomial literature, not proved here).
struct SquareCriterionReport {
    int n = 0;
    BigInt constant;  // of q_n
    BigInt leading;   // of q_n, C(n, floor(n/2))
    bool constant_is_square = false;
    bool leading_is_square = false;
    bool reducibility_excluded = false;  // !(constant_is_square && leading_is_square)
    bool hypothesis_applies = false;     // n odd, so that P_n = (1+z) q_n(z^2)
    // Even n only, and outside the criterion's hypothesis: P_n itself is not q(z^2).
    std::optional<bool> p_constant_is_square;
    std::optional<bool> p_leading_is_square;
    std::string note;
};

SquareCriterionReport q_square_criterion(int n);

bool is_prime(std::uint64_t v);

/// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

struct ModPCertificate {
    std::uint32_t p = 0;
    std::string target;  // label, e.g. "P_12" or "q_7"
    int degree = 0;
    bool irreducible_mod_p = false;  // true certifies irreducibility over Q
};

/// Rabin's test over F_p: f (made monic) is irreducible iff x^(p^d) = x mod f and
/// gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
/// Throws DomainError if p is not a prime below 2^31, p divides the leading
/// coefficient, or the polynomial is constant.
ModPCertificate irreducible_mod_p(const IntPoly& poly, std::uint32_t p, std::string target = "poly");

struct ConjectureScanEntry {
    int n = 0;
    std::optional<std::uint32_t> certifying_prime;  // empty: no certificate among the primes tried
};

/// For every even n in [2, n_max], the first prime certifying that P_n is
/// irreducible over Q. A missing certificate proves nothing.
std::vector<ConjectureScanEntry> conjecture_scan(int n_max, std::span<const std::uint32_t> primes);

/// Positive divisors in increasing order. Trial division up to 10^6; throws
/// ResourceError if a composite cofactor without small factors remains.
std::vector<BigInt> divisors(const BigInt& v);

/// All rational roots, exactly, by the rational root theorem. Throws DomainError for
/// the zero polynomial.
std::vector<Rational> rational_roots(const IntPoly& p);

namespace modp {

/// Dense polynomial over F_p, ascending, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPoly& f, std::uint64_t p);
Poly multiply(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero b.
Poly remainder(Poly a, const Poly& b, std::uint64_t p);
/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace pascalian
