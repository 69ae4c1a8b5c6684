#include "fuchsian/oracle.hpp"

namespace fuchsian {

int Sign::value() const {
    switch (kind) {
        case Kind::Negative: return -1;
        case Kind::Zero: return 0;
        case Kind::Positive: return 1;
        case Kind::Indeterminate: break;
    }
    throw Error("sign is indeterminate");
}

std::string to_string(Sign::Kind k) {
    switch (k) {
        case Sign::Kind::Negative: return "Negative";
        case Sign::Kind::Zero: return "Zero";
        case Sign::Kind::Positive: return "Positive";
        case Sign::Kind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

// gmpxx expression templates reference their operands, so every query lambda
// pins its return type to Rational; returning a deduced expression would
// dangle once the lambda's temporaries die.
DyadicOracle::DyadicOracle(const Rational& exact_value) {
    query_ = [v = exact_value](unsigned m) -> Rational {
        // Round to the 2^-(m+1) grid: error <= 2^-(m+2) < 2^-m.
        return dyadic_round(v, m + 1);
    };
}

namespace {

// Smallest k with |q| + 1 <= 2^k, an upper bound usable for any real within
// distance 1 of q.
unsigned magnitude_bits(const Rational& q) {
    BigInt bound = ceil_of(abs_of(q)) + 1;
    return static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
}

}  // namespace

DyadicOracle operator+(const DyadicOracle& a, const DyadicOracle& b) {
    return DyadicOracle([a, b](unsigned m) -> Rational {
        // Each input contributes < 2^-(m+2); grid rounding <= 2^-(m+3).
        return dyadic_round(a.query(m + 2) + b.query(m + 2), m + 2);
    });
}

DyadicOracle operator-(const DyadicOracle& a) {
    return DyadicOracle([a](unsigned m) -> Rational { return -a.query(m); });
}

DyadicOracle operator-(const DyadicOracle& a, const DyadicOracle& b) { return a + (-b); }

DyadicOracle operator*(const DyadicOracle& a, const DyadicOracle& b) {
    return DyadicOracle([a, b](unsigned m) -> Rational {
        // |ab - pq| <= |a||b - q| + |q||a - p|. Bound |a| <= 2^ka from a
        // precision-0 probe, query q at m+2+ka, then bound |q| <= 2^kq and
        // query p at m+2+kq; each term is then < 2^-(m+2).
        unsigned ka = magnitude_bits(a.query(0));
        Rational q = b.query(m + 2 + ka);
        unsigned kq = magnitude_bits(q);
        Rational p = a.query(m + 2 + kq);
        return dyadic_round(p * q, m + 2);
    });
}

DyadicOracle operator/(const DyadicOracle& a, const DyadicOracle& b) {
    DyadicOracle inv([b](unsigned m) -> Rational {
        // Separate b from zero: find n with |phi(n)| > 2*2^-n, so |b| > 2^-n.
        unsigned n = 1;
        for (;;) {
            Rational probe = b.query(n);
            if (abs_of(probe) > 2 * pow2(-static_cast<long>(n))) break;
            if (n >= 4096)
                throw DivisionByZero("oracle divisor could not be separated from zero");
            n *= 2;
        }
        // |1/b - 1/q| = |b - q| / (|b||q|) < 2^-M * 2^n * 2^(n+1) = 2^-(m+2)
        // with M = m + 2n + 3.
        unsigned M = m + 2 * n + 3;
        Rational q = b.query(M);
        return dyadic_round(Rational(1) / q, m + 2);
    });
    return a * inv;
}

DyadicOracle DyadicOracle::abs() const {
    auto q = query_;
    return DyadicOracle([q](unsigned m) -> Rational { return abs_of(q(m)); });
}

DyadicOracle DyadicOracle::max(const DyadicOracle& a, const DyadicOracle& b) {
    return DyadicOracle([a, b](unsigned m) -> Rational { return std::max(a.query(m), b.query(m)); });
}

Sign sign_at_precision(const DyadicOracle& a, unsigned max_precision) {
    for (unsigned m = 1; m <= max_precision; ++m) {
        Rational d = a.query(m);
        if (abs_of(d) > pow2(-static_cast<long>(m)))
            return d > 0 ? Sign::positive() : Sign::negative();
    }
    return Sign::indeterminate(max_precision);
}

}  // namespace fuchsian
