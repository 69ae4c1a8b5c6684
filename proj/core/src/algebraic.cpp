#include "fuchsian/algebraic.hpp"

namespace fuchsian {

AlgebraicNumber::AlgebraicNumber(FieldPtr field, RatPoly representation)
    : field_(std::move(field)),
      rep_(RatPoly::mod(std::move(representation), field_->min_poly())),
      gamma_iv_(field_->generator_interval()) {
    recompute_enclosure();
}

AlgebraicNumber::AlgebraicNumber(FieldPtr f, RatPoly rep, RatInterval gamma_iv)
    : field_(std::move(f)), rep_(std::move(rep)), gamma_iv_(std::move(gamma_iv)) {
    recompute_enclosure();
}

AlgebraicNumber AlgebraicNumber::embed(FieldPtr field, const Rational& value) {
    return AlgebraicNumber(std::move(field), RatPoly::constant(value));
}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
    return AlgebraicNumber(std::move(field), RatPoly::x());
}

void AlgebraicNumber::recompute_enclosure() {
    if (rep_.is_constant()) {
        Rational v = rep_.coeff(0);
        isol_ = RatInterval::point(v);
    } else {
        isol_ = rep_.eval(gamma_iv_);
    }
}

Rational AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw Error("algebraic number is not rational");
    return rep_.coeff(0);
}

void AlgebraicNumber::check_same_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.field_ != b.field_)
        throw BackendMismatch("algebraic numbers from different number fields");
}

int AlgebraicNumber::sign() const {
    if (rep_.is_zero()) return 0;
    if (rep_.is_constant()) return sign_of(rep_.coeff(0));
    RatInterval giv = gamma_iv_;
    RatInterval enc = isol_;
    unsigned rounds = 0;
    while (enc.contains_zero()) {
        if (++rounds == 16) {
            // A nonzero representation of degree < D cannot vanish at gamma
            // when the minimal polynomial is irreducible. Before bisecting
            // further, certify that the value is genuinely nonzero; if it is
            // not, the supplied polynomial was reducible.
            RatPoly g = RatPoly::gcd(rep_, field_->min_poly());
            if (!g.is_constant() && RatPoly::count_roots(g, giv.lo, giv.hi) > 0)
                throw Error("representation vanishes at gamma; minimal polynomial is reducible");
        }
        giv = field_->refine(giv, giv.width() / 2);
        enc = rep_.eval(giv);
    }
    return enc.strictly_positive() ? 1 : -1;
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width_bound) const {
    if (width_bound <= 0) throw Error("refinement width bound must be positive");
    if (isol_.width() <= width_bound) return *this;
    RatInterval giv = gamma_iv_;
    RatInterval enc = isol_;
    while (enc.width() > width_bound) {
        giv = field_->refine(giv, giv.width() / 2);
        enc = rep_.eval(giv);
    }
    return AlgebraicNumber(field_, rep_, giv);
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same_field(a, b);
    return AlgebraicNumber(a.field_, a.rep_ + b.rep_, a.gamma_iv_.intersect(b.gamma_iv_));
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same_field(a, b);
    return AlgebraicNumber(a.field_, a.rep_ - b.rep_, a.gamma_iv_.intersect(b.gamma_iv_));
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
    return AlgebraicNumber(a.field_, -a.rep_, a.gamma_iv_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same_field(a, b);
    return AlgebraicNumber(a.field_, RatPoly::mod(a.rep_ * b.rep_, a.field_->min_poly()),
                           a.gamma_iv_.intersect(b.gamma_iv_));
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber::check_same_field(a, b);
    if (b.rep_.is_zero()) throw DivisionByZero("division by zero algebraic number");
    auto [g, u, v] = poly_xgcd(b.rep_, b.field_->min_poly());
    if (!g.is_constant())
        throw Error("divisor shares a factor with the minimal polynomial; field is invalid");
    // u*b == g (a nonzero constant) mod M, so b^-1 == u/g.
    RatPoly inv = RatPoly::mod(u * (Rational(1) / g.coeff(0)), b.field_->min_poly());
    return AlgebraicNumber(a.field_, RatPoly::mod(a.rep_ * inv, a.field_->min_poly()),
                           a.gamma_iv_.intersect(b.gamma_iv_));
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return to_string(rep_.coeff(0));
    return rep_.str("g") + " ~ " + isol_.str();
}

}  // namespace fuchsian
