#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pascalian/algebra.hpp"
#include "pascalian/errors.hpp"
#include "pascalian/polynomials.hpp"

using namespace pascalian;

namespace {

oracle::FpPoly to_fp(const IntPoly& f, std::uint32_t p) {
    oracle::FpPoly out;
    for (const auto& c : f.coefficients()) {
        BigInt r = c % p;
        if (r < 0) r += p;
        out.push_back(static_cast<std::uint32_t>(r.get_ui()));
    }
    return out;
}

}  // namespace

TEST_CASE("factor_odd") {
    const FactorizationWitness w3 = factor_odd(3);
    CHECK(w3.checked);
    CHECK(w3.linear == IntPoly{1, 1});
    CHECK(w3.even_part == IntPoly{1, 3});
    CHECK(factor_odd(1).even_part == IntPoly{1});
    CHECK(factor_odd(9).even_part == IntPoly{1, 9, 36, 84, 126});
    CHECK_THROWS_AS(factor_odd(4), DomainError);
    CHECK_THROWS_AS(factor_odd(-3), DomainError);
    for (int n = 1; n <= 201; n += 2) REQUIRE(factor_odd(n).checked);
}

TEST_CASE("is_perfect_square") {
    CHECK_FALSE(is_perfect_square(3));
    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(BigInt("10000000000000000000000000000000000000000")));
    CHECK_THROWS_AS(is_perfect_square(-4), DomainError);
    for (int m = 1; m <= 500; ++m) REQUIRE_FALSE(is_perfect_square(oracle::binom(2 * m + 1, m)));
}

TEST_CASE("q_square_criterion") {
    const auto r3 = q_square_criterion(3);
    CHECK(r3.constant_is_square);
    CHECK_FALSE(r3.leading_is_square);
    CHECK(r3.reducibility_excluded);
    CHECK(r3.note.find("assuming q_n irreducible") != std::string::npos);
    const auto r0 = q_square_criterion(0);
    CHECK_FALSE(r0.reducibility_excluded);
    const auto r7 = q_square_criterion(7);
    CHECK(r7.leading == 35);
    CHECK(r7.reducibility_excluded);
    const auto r4 = q_square_criterion(4);
    CHECK_FALSE(r4.hypothesis_applies);
    CHECK(r4.p_leading_is_square.has_value());
    CHECK_FALSE(*r4.p_leading_is_square);
    for (int m = 1; m <= 500; ++m) REQUIRE(q_square_criterion(2 * m + 1).reducibility_excluded);
}

TEST_CASE("primes") {
    CHECK(first_primes(6) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("irreducible_mod_p examples") {
    for (std::uint32_t p : {2U, 3U, 5U, 101U}) CHECK(irreducible_mod_p(IntPoly{1, 1}, p).irreducible_mod_p);
    const auto q4 = irreducible_mod_p(q_poly(4), 5, "q_4");
    CHECK(q4.irreducible_mod_p == oracle::fp_irreducible_exhaustive(to_fp(q_poly(4), 5), 5));
    CHECK(q4.irreducible_mod_p);
    CHECK(q4.target == "q_4");
    const auto p2 = irreducible_mod_p(p_poly(2), 3);
    CHECK(p2.irreducible_mod_p == oracle::fp_irreducible_exhaustive(to_fp(p_poly(2), 3), 3));
    CHECK(p2.irreducible_mod_p);
    CHECK_THROWS_AS(irreducible_mod_p(p_poly(2), 2), DomainError);
    CHECK_THROWS_AS(irreducible_mod_p(p_poly(3), 4), DomainError);
    CHECK_THROWS_AS(irreducible_mod_p(IntPoly{5}, 3), DomainError);
}

TEST_CASE("irreducible_mod_p agrees with exhaustive search") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
        for (int d = 1; d <= 8; ++d) {
            std::uint64_t space = 1;
            for (int i = 0; i < d; ++i) space *= p;
            const bool exhaustive = space <= 20000;
            const std::uint64_t trials = exhaustive ? space : 1500;
            for (std::uint64_t t = 0; t < trials; ++t) {
                std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
                std::uint64_t code = exhaustive ? t : rng();
                for (int i = 0; i < d; ++i) {
                    c[i] = static_cast<long>(code % p);
                    code /= p;
                }
                c[d] = exhaustive ? 1 : static_cast<long>(1 + rng() % (p - 1));
                // shift some coefficients by multiples of p to exercise the reduction
                if (t % 3 == 0) c[0] -= 2 * static_cast<long>(p);
                const IntPoly f(c);
                const bool fast = irreducible_mod_p(f, p).irreducible_mod_p;
                REQUIRE(fast == oracle::fp_irreducible_exhaustive(to_fp(f, p), p));
            }
        }
    }
}

TEST_CASE("modular arithmetic reproduces the binomial identity") {
    std::mt19937_64 rng(11);
    const auto primes = first_primes(200);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t p = primes[rng() % primes.size()];
        const int n = static_cast<int>(rng() % 60);
        const modp::Poly lhs = modp::reduce(p_poly(n) + r_poly(n).shifted(static_cast<std::size_t>(n) + 1), p);
        modp::Poly rhs = modp::reduce(IntPoly{1, 1}, p);
        const modp::Poly square = modp::reduce(IntPoly{1, 0, 1}, p);
        for (int i = 0; i < n; ++i) rhs = modp::multiply(rhs, square, p);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("modp helpers") {
    CHECK(modp::inverse(3, 7) == 5);
    CHECK(modp::remainder({1, 0, 1}, {1, 1}, 5) == modp::Poly{2});
    CHECK(modp::gcd({6, 5, 1}, {2, 1}, 7) == modp::Poly{2, 1});
    CHECK_THROWS_AS(modp::inverse(0, 7), DomainError);
}

TEST_CASE("conjecture_scan") {
    const auto primes = first_primes(25);
    const auto scan = conjecture_scan(30, primes);
    REQUIRE(scan.size() == 15);
    for (const auto& e : scan) {
        CHECK(e.n % 2 == 0);
        if (e.certifying_prime) {
            CHECK(irreducible_mod_p(p_poly(e.n), *e.certifying_prime).irreducible_mod_p);
        }
    }
    CHECK(scan.front().certifying_prime.has_value());
}

TEST_CASE("divisors and rational roots") {
    CHECK(divisors(12) == std::vector<BigInt>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(-7) == std::vector<BigInt>{1, 7});
    CHECK_THROWS_AS(divisors(0), DomainError);
    CHECK(rational_roots(IntPoly{-1, 0, 4}) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    CHECK(rational_roots(IntPoly{0, -2, 1}) == std::vector<Rational>{Rational(0), Rational(2)});
    for (int n = 1; n <= 60; n += 2) REQUIRE(rational_roots(p_poly(n)) == std::vector<Rational>{Rational(-1)});
    for (int n = 2; n <= 60; n += 2) REQUIRE(rational_roots(p_poly(n)).empty());
}
