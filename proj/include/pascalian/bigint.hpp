#pragma once

#include <gmpxx.h>

#include <string>

namespace pascalian {

/// Arbitrary-precision signed integer. All coefficients and counts use it.
using BigInt = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt pow2(unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

inline double to_double(const BigInt& v) { return v.get_d(); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace pascalian
