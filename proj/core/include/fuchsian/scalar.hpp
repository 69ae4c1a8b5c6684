#pragma once

#include <optional>
#include <string>
#include <variant>

#include "fuchsian/algebraic.hpp"
#include "fuchsian/oracle.hpp"
#include "fuchsian/rational.hpp"

namespace fuchsian {

enum class Backend { Rational, Algebraic, Interval };

std::string to_string(Backend b);

// The model-switch scalar: one of an exact rational, an element of a fixed
// real number field, or a dyadic-interval oracle. All scalars in a
// computation share a backend; rational constants embed losslessly into
// either other backend, and binary operations perform that embedding
// implicitly. Anything else is a backend mismatch.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& q) : v_(q) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(AlgebraicNumber a) : v_(std::move(a)) {}
    Scalar(DyadicOracle o) : v_(std::move(o)) {}

    Backend backend() const { return static_cast<Backend>(v_.index()); }
    bool exact() const { return backend() != Backend::Interval; }

    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const AlgebraicNumber& as_algebraic() const { return std::get<AlgebraicNumber>(v_); }
    const DyadicOracle& as_oracle() const { return std::get<DyadicOracle>(v_); }

    // This scalar carried into the other backend (rational values only).
    Scalar embedded_like(const Scalar& other) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    std::variant<Rational, AlgebraicNumber, DyadicOracle> v_;
};

// Total exact sign; throws on the interval backend.
Sign sign(const Scalar& a);

// Sign with a precision budget: exact backends ignore the budget and never
// return Indeterminate; the interval backend escalates and may.
Sign sign(const Scalar& a, unsigned max_precision);

// Exact equality test (exact backends only).
bool equal(const Scalar& a, const Scalar& b);
bool is_zero(const Scalar& a);

Scalar abs(const Scalar& a, unsigned max_precision);
Scalar max_of(const Scalar& a, const Scalar& b, unsigned max_precision);

// Smallest integer >= a; on the interval backend an upper bound from a
// precision-4 probe (sufficient for budget sizing, not a certified ceiling).
BigInt ceil_upper_bound(const Scalar& a);

// A rational approximation within 2^-precision_bits of the value, for
// presentation only.
Rational approximate(const Scalar& a, unsigned precision_bits);

// Seminorm of an exact scalar: |num|+|den| for a rational, the seminorm of
// the representing polynomial for an algebraic number. Throws on the
// interval backend.
BigInt seminorm(const Scalar& a);

}  // namespace fuchsian
