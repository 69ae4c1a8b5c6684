#include "fuchsian/scalar.hpp"

namespace fuchsian {

std::string to_string(Backend b) {
    switch (b) {
        case Backend::Rational: return "rational";
        case Backend::Algebraic: return "algebraic";
        case Backend::Interval: return "interval";
    }
    return "?";
}

Scalar Scalar::embedded_like(const Scalar& other) const {
    if (backend() == other.backend()) return *this;
    if (backend() != Backend::Rational)
        throw BackendMismatch("only rational scalars embed into other backends");
    const Rational& q = as_rational();
    switch (other.backend()) {
        case Backend::Algebraic:
            return Scalar(AlgebraicNumber::embed(other.as_algebraic().field(), q));
        case Backend::Interval:
            return Scalar(DyadicOracle(q));
        case Backend::Rational: break;
    }
    return *this;
}

namespace {

// Promote rational constants to the partner backend, then require equality.
template <typename F>
Scalar binop(const Scalar& a, const Scalar& b, F&& f) {
    if (a.backend() != b.backend()) {
        if (a.backend() == Backend::Rational) return f(a.embedded_like(b), b);
        if (b.backend() == Backend::Rational) return f(a, b.embedded_like(a));
        throw BackendMismatch("scalar arithmetic across " + to_string(a.backend()) + " and " +
                              to_string(b.backend()) + " backends");
    }
    return f(a, b);
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Scalar& x, const Scalar& y) -> Scalar {
        switch (x.backend()) {
            case Backend::Rational: return Scalar(Rational(x.as_rational() + y.as_rational()));
            case Backend::Algebraic: return Scalar(x.as_algebraic() + y.as_algebraic());
            case Backend::Interval: return Scalar(x.as_oracle() + y.as_oracle());
        }
        throw Error("unreachable");
    });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Scalar& x, const Scalar& y) -> Scalar {
        switch (x.backend()) {
            case Backend::Rational: return Scalar(Rational(x.as_rational() - y.as_rational()));
            case Backend::Algebraic: return Scalar(x.as_algebraic() - y.as_algebraic());
            case Backend::Interval: return Scalar(x.as_oracle() - y.as_oracle());
        }
        throw Error("unreachable");
    });
}

Scalar operator-(const Scalar& a) {
    switch (a.backend()) {
        case Backend::Rational: return Scalar(Rational(-a.as_rational()));
        case Backend::Algebraic: return Scalar(-a.as_algebraic());
        case Backend::Interval: return Scalar(-a.as_oracle());
    }
    throw Error("unreachable");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Scalar& x, const Scalar& y) -> Scalar {
        switch (x.backend()) {
            case Backend::Rational: return Scalar(Rational(x.as_rational() * y.as_rational()));
            case Backend::Algebraic: return Scalar(x.as_algebraic() * y.as_algebraic());
            case Backend::Interval: return Scalar(x.as_oracle() * y.as_oracle());
        }
        throw Error("unreachable");
    });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return binop(a, b, [](const Scalar& x, const Scalar& y) -> Scalar {
        switch (x.backend()) {
            case Backend::Rational:
                if (y.as_rational() == 0) throw DivisionByZero("rational division by zero");
                return Scalar(Rational(x.as_rational() / y.as_rational()));
            case Backend::Algebraic: return Scalar(x.as_algebraic() / y.as_algebraic());
            case Backend::Interval: return Scalar(x.as_oracle() / y.as_oracle());
        }
        throw Error("unreachable");
    });
}

Sign sign(const Scalar& a) {
    switch (a.backend()) {
        case Backend::Rational: return Sign::of_int(sign_of(a.as_rational()));
        case Backend::Algebraic: return Sign::of_int(a.as_algebraic().sign());
        case Backend::Interval:
            throw Error("total sign is not available on the interval backend");
    }
    throw Error("unreachable");
}

Sign sign(const Scalar& a, unsigned max_precision) {
    if (a.exact()) return sign(a);
    return sign_at_precision(a.as_oracle(), max_precision);
}

bool is_zero(const Scalar& a) { return sign(a).is_zero(); }

bool equal(const Scalar& a, const Scalar& b) { return is_zero(a - b); }

Scalar abs(const Scalar& a, unsigned max_precision) {
    if (a.backend() == Backend::Interval) return Scalar(a.as_oracle().abs());
    return sign(a).is_negative() ? -a : a;
}

Scalar max_of(const Scalar& a, const Scalar& b, unsigned max_precision) {
    if (a.backend() == Backend::Interval || b.backend() == Backend::Interval) {
        Scalar ap = a.embedded_like(b), bp = b.embedded_like(a);
        return Scalar(DyadicOracle::max(ap.as_oracle(), bp.as_oracle()));
    }
    Sign s = sign(a - b);
    return s.is_negative() ? b : a;
}

BigInt ceil_upper_bound(const Scalar& a) {
    switch (a.backend()) {
        case Backend::Rational: return ceil_of(a.as_rational());
        case Backend::Algebraic: return ceil_of(a.as_algebraic().isolating_interval().hi);
        case Backend::Interval: return ceil_of(a.as_oracle().query(4) + Rational(1, 16));
    }
    throw Error("unreachable");
}

Rational approximate(const Scalar& a, unsigned precision_bits) {
    switch (a.backend()) {
        case Backend::Rational: return a.as_rational();
        case Backend::Algebraic: {
            AlgebraicNumber r = a.as_algebraic().refined(pow2(-static_cast<long>(precision_bits)));
            return r.isolating_interval().midpoint();
        }
        case Backend::Interval: return a.as_oracle().query(precision_bits);
    }
    throw Error("unreachable");
}

BigInt seminorm(const Scalar& a) {
    switch (a.backend()) {
        case Backend::Rational: return seminorm(a.as_rational());
        case Backend::Algebraic: return seminorm(a.as_algebraic().representation());
        case Backend::Interval:
            throw Error("seminorm is a symbolic-model measure; not defined for oracles");
    }
    throw Error("unreachable");
}

std::string Scalar::str() const {
    switch (backend()) {
        case Backend::Rational: return to_string(as_rational());
        case Backend::Algebraic: return as_algebraic().str();
        case Backend::Interval:
            return "~" + to_decimal_string(as_oracle().query(20), 6);
    }
    throw Error("unreachable");
}

}  // namespace fuchsian
