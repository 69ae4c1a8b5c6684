#include "fuchsian/number_field.hpp"

namespace fuchsian {

std::shared_ptr<const NumberField> NumberField::make(RatPoly min_poly, RatInterval iv) {
    if (min_poly.degree() < 2)
        throw Error("number field generator must have degree >= 2 (use the rational backend otherwise)");
    for (const auto& c : min_poly.coeffs())
        if (c.get_den() != 1) throw Error("minimal polynomial must have integer coefficients");
    if (!RatPoly::gcd(min_poly, min_poly.derivative()).is_constant())
        throw Error("minimal polynomial is not squarefree");
    if (min_poly.eval(iv.lo) == 0 || min_poly.eval(iv.hi) == 0)
        throw Error("generator interval endpoint is a rational root; polynomial is reducible");
    if (RatPoly::count_roots(min_poly, iv.lo, iv.hi) != 1)
        throw Error("generator interval must isolate exactly one real root");
    unsigned d = static_cast<unsigned>(min_poly.degree());
    return std::shared_ptr<const NumberField>(new NumberField(std::move(min_poly), std::move(iv), d));
}

RatInterval NumberField::refine(RatInterval iv, const Rational& width_bound) const {
    if (width_bound <= 0) throw Error("refinement width bound must be positive");
    int lo_sign = sign_of(min_poly_.eval(iv.lo));
    while (iv.width() > width_bound) {
        Rational mid = iv.midpoint();
        int ms = sign_of(min_poly_.eval(mid));
        if (ms == 0) {
            // A rational root inside the interval contradicts irreducibility.
            throw Error("minimal polynomial has a rational root; field is invalid");
        }
        if (ms == lo_sign) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    return iv;
}

std::string NumberField::str() const {
    return "Q(gamma), gamma root of " + min_poly_.str() + " in " + interval_.str();
}

}  // namespace fuchsian
