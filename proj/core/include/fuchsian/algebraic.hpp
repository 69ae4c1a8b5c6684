#pragma once

#include <memory>
#include <string>

#include "fuchsian/number_field.hpp"

namespace fuchsian {

// An element of Q(gamma), stored as its representing polynomial of degree
// < D together with a rational isolating interval for the value. Values are
// immutable; refinement returns a new value with a narrower interval.
class AlgebraicNumber {
public:
    AlgebraicNumber(FieldPtr field, RatPoly representation);
    static AlgebraicNumber embed(FieldPtr field, const Rational& value);
    static AlgebraicNumber generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const RatPoly& representation() const { return rep_; }
    const RatInterval& isolating_interval() const { return isol_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.is_constant(); }
    // Exact rational value; valid only when is_rational().
    Rational rational_value() const;

    // Exact total sign: zero is decided symbolically, nonzero values by
    // refining the generator enclosure until the value interval excludes 0.
    int sign() const;

    // Same number, isolating interval of width <= bound.
    AlgebraicNumber refined(const Rational& width_bound) const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);

    std::string str() const;

private:
    AlgebraicNumber(FieldPtr f, RatPoly rep, RatInterval gamma_iv);
    void recompute_enclosure();
    static void check_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

    FieldPtr field_;
    RatPoly rep_;          // reduced mod the minimal polynomial, degree < D
    RatInterval gamma_iv_; // value-local refinement of the generator interval
    RatInterval isol_;     // enclosure of the value over gamma_iv_
};

}  // namespace fuchsian
