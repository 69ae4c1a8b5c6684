#pragma once

#include <gmpxx.h>

#include <string>

#include "fuchsian/errors.hpp"

namespace fuchsian {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (gcd(num, den) = 1, den > 0), which is exactly the invariant the
// scalar tower relies on.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline Rational abs_of(const Rational& q) { return abs(q); }

inline BigInt floor_of(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline BigInt ceil_of(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
    BigInt p(1);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

// Nearest dyadic with denominator 2^k (ties toward +inf); |result - q| <= 2^-(k+1).
inline Rational dyadic_round(const Rational& q, unsigned k) {
    Rational scaled = q * pow2(static_cast<long>(k));
    BigInt n = floor_of(scaled + Rational(1, 2));
    return Rational(n) * pow2(-static_cast<long>(k));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Fixed-point decimal rendering with exact rounding, for deterministic
// presentation output (never used in predicates).
inline std::string to_decimal_string(const Rational& q, unsigned digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational scaled = q * Rational(scale);
    BigInt n = floor_of(scaled + Rational(1, 2));
    bool neg = n < 0;
    if (neg) n = -n;
    std::string s = n.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace fuchsian
