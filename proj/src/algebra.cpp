#include "pascalian/algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "pascalian/errors.hpp"
#include "pascalian/polynomials.hpp"

namespace pascalian {

FactorizationWitness factor_odd(int n) {
    if (n < 1 || n % 2 == 0) {
        throw DomainError("factor_odd: n must be odd and positive, got " + std::to_string(n));
    }
    FactorizationWitness w;
    w.n = n;
    w.linear = IntPoly{1, 1};
    const IntPoly quotient = exact_divide(p_poly(n), w.linear);
    w.even_part = q_poly(n);
    w.checked = quotient == w.even_part.compose_square() && w.linear * quotient == p_poly(n);
    return w;
}

bool is_perfect_square(const BigInt& v) {
    if (v < 0) throw DomainError("is_perfect_square: negative input " + v.get_str());
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    return root * root == v;
}

SquareCriterionReport q_square_criterion(int n) {
    if (n < 0) throw DomainError("q_square_criterion: negative n");
    const IntPoly q = q_poly(n);
    SquareCriterionReport r;
    r.n = n;
    r.constant = q.coeff(0);
    r.leading = q.leading();
    r.constant_is_square = is_perfect_square(r.constant);
    r.leading_is_square = is_perfect_square(r.leading);
    r.reducibility_excluded = !(r.constant_is_square && r.leading_is_square);
    r.hypothesis_applies = n % 2 == 1;
    if (n % 2 == 0) {
        const IntPoly p = p_poly(n);
        r.p_constant_is_square = is_perfect_square(p.coeff(0));
        r.p_leading_is_square = is_perfect_square(p.leading());
        r.note = "even n: P_n is not of the form (1+z)q(z^2); P_n coefficient squares reported for reference only";
    } else if (r.reducibility_excluded) {
        r.note = "q_n(z^2) irreducible, assuming q_n irreducible over Q";
    } else {
        r.note = "criterion inconclusive: both coefficients are squares";
    }
    return r;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 2; out.size() < count; ++v) {
        if (is_prime(v)) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p. p < 2^31 keeps every product below 2^62.

namespace modp {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1U) r = r * b % p;
        b = b * b % p;
        e >>= 1U;
    }
    return r;
}

}  // namespace

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("modp::inverse: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

Poly reduce(const IntPoly& f, std::uint64_t p) {
    Poly out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    trim(out);
    return out;
}

Poly multiply(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

Poly remainder(Poly a, const Poly& b, std::uint64_t p) {
    if (b.empty()) throw DomainError("modp::remainder: division by zero");
    trim(a);
    const std::uint64_t inv = inverse(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t factor = a.back() * inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] = (a[shift + j] + (p - factor) * b[j]) % p;
        }
        trim(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = inverse(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

}  // namespace modp

namespace {

modp::Poly pow_mod_poly(modp::Poly base, std::uint64_t e, const modp::Poly& f, std::uint64_t p) {
    modp::Poly result{1};
    base = modp::remainder(std::move(base), f, p);
    while (e) {
        if (e & 1U) result = modp::remainder(modp::multiply(result, base, p), f, p);
        e >>= 1U;
        if (e) base = modp::remainder(modp::multiply(base, base, p), f, p);
    }
    return result;
}

modp::Poly subtract_x(modp::Poly a, std::uint64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> prime_divisors(int d) {
    std::vector<int> out;
    for (int r = 2; r * r <= d; ++r) {
        if (d % r == 0) {
            out.push_back(r);
            while (d % r == 0) d /= r;
        }
    }
    if (d > 1) out.push_back(d);
    return out;
}

}  // namespace

ModPCertificate irreducible_mod_p(const IntPoly& poly, std::uint32_t p, std::string target) {
    if (p >= (1U << 31) || !is_prime(p)) {
        throw DomainError("irreducible_mod_p: " + std::to_string(p) + " is not a prime below 2^31");
    }
    if (poly.degree() < 1) throw DomainError("irreducible_mod_p: constant polynomial");
    if (mpz_divisible_ui_p(poly.leading().get_mpz_t(), p)) {
        throw DomainError("irreducible_mod_p: p=" + std::to_string(p) + " divides the leading coefficient");
    }

    ModPCertificate cert;
    cert.p = p;
    cert.target = std::move(target);
    cert.degree = poly.degree();

    modp::Poly f = modp::reduce(poly, p);
    const std::uint64_t inv = modp::inverse(f.back(), p);
    for (auto& c : f) c = c * inv % p;

    const int d = cert.degree;
    if (d == 1) {
        cert.irreducible_mod_p = true;
        return cert;
    }

    // frob[k] = x^(p^k) mod f, k = 0..d.
    std::vector<modp::Poly> frob;
    frob.reserve(static_cast<std::size_t>(d) + 1);
    frob.push_back(modp::remainder(modp::Poly{0, 1}, f, p));
    for (int k = 1; k <= d; ++k) frob.push_back(pow_mod_poly(frob.back(), p, f, p));

    if (frob[d] != frob[0]) return cert;
    for (int r : prime_divisors(d)) {
        const modp::Poly g = modp::gcd(subtract_x(frob[d / r], p), f, p);
        if (g.size() != 1) return cert;
    }
    cert.irreducible_mod_p = true;
    return cert;
}

std::vector<ConjectureScanEntry> conjecture_scan(int n_max, std::span<const std::uint32_t> primes) {
    std::vector<ConjectureScanEntry> out;
    for (int n = 2; n <= n_max; n += 2) {
        ConjectureScanEntry entry;
        entry.n = n;
        const IntPoly pn = p_poly(n);
        for (std::uint32_t p : primes) {
            if (mpz_divisible_ui_p(pn.leading().get_mpz_t(), p)) continue;
            if (irreducible_mod_p(pn, p, "P_" + std::to_string(n)).irreducible_mod_p) {
                entry.certifying_prime = p;
                break;
            }
        }
        out.push_back(entry);
    }
    return out;
}

std::vector<BigInt> divisors(const BigInt& v) {
    if (v == 0) throw DomainError("divisors: zero has infinitely many divisors");
    BigInt rest = abs(v);
    std::map<BigInt, int> factors;
    constexpr unsigned long kTrialLimit = 1000000;
    for (unsigned long d = 2; d <= kTrialLimit && BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            ++factors[BigInt(d)];
            rest /= d;
        }
    }
    if (rest > 1) {
        const bool small = rest <= BigInt(kTrialLimit) * kTrialLimit;
        if (!small && mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0) {
            throw ResourceError("divisors: cofactor " + rest.get_str() + " has no small factors");
        }
        ++factors[rest];
    }

    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [prime, exponent] : factors) {
        const std::size_t base = out.size();
        BigInt power = 1;
        for (int e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
    std::vector<Rational> out;

    std::size_t low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low > 0) out.emplace_back(0);
    const std::vector<BigInt> c(p.coefficients().begin() + static_cast<std::ptrdiff_t>(low), p.coefficients().end());
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return out;

    const auto numerators = divisors(c.front());
    const auto denominators = divisors(c.back());
    for (const auto& d : denominators) {
        std::vector<BigInt> d_pow(deg + 1);
        d_pow[0] = 1;
        for (std::size_t k = 1; k <= deg; ++k) d_pow[k] = d_pow[k - 1] * d;
        for (const auto& a : numerators) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                const BigInt x = sign * a;
                // d^deg * p(x/d) = sum_j c_j x^j d^(deg-j), by Horner in x.
                BigInt acc = c[deg];
                for (std::size_t j = deg; j-- > 0;) acc = acc * x + c[j] * d_pow[deg - j];
                if (acc == 0) out.emplace_back(x, d);
            }
        }
    }
    for (auto& r : out) r.canonicalize();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pascalian
