#pragma once

#include <memory>
#include <string>

#include "fuchsian/polynomial.hpp"

namespace fuchsian {

// A real number field Q(gamma): the minimal polynomial of gamma (integer
// coefficients, irreducible over Q), its degree D >= 2, and a rational
// interval isolating the intended real root.
//
// Irreducibility is a documented precondition. Construction verifies what is
// cheaply certifiable: squarefreeness, degree >= 2, and that the interval
// isolates exactly one real root. Arithmetic detects a reducible polynomial
// whenever it would matter (a nonzero representation whose value is zero) and
// reports it instead of looping.
class NumberField {
public:
    static std::shared_ptr<const NumberField> make(RatPoly min_poly, RatInterval generator_interval);

    const RatPoly& min_poly() const { return min_poly_; }
    unsigned degree() const { return degree_; }
    const RatInterval& generator_interval() const { return interval_; }

    // Bisect the given enclosure of gamma (which must carry a sign change of
    // the minimal polynomial) until its width is <= bound.
    RatInterval refine(RatInterval iv, const Rational& width_bound) const;

    std::string str() const;

private:
    NumberField(RatPoly m, RatInterval iv, unsigned d)
        : min_poly_(std::move(m)), interval_(std::move(iv)), degree_(d) {}

    RatPoly min_poly_;
    RatInterval interval_;
    unsigned degree_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

}  // namespace fuchsian
