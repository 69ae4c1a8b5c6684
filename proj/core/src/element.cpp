#include "fuchsian/element.hpp"

namespace fuchsian {

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::Identity: return "Identity";
        case ElementClass::Hyperbolic: return "Hyperbolic";
        case ElementClass::Parabolic: return "Parabolic";
        case ElementClass::Elliptic: return "Elliptic";
    }
    return "?";
}

ElementClass classify(const Mat2& m, unsigned max_precision) {
    Scalar t = m.trace();
    Scalar gap = abs(t, max_precision) - Scalar(2).embedded_like(t);
    Sign s = sign(gap, max_precision);
    if (!s.determinate())
        throw UnresolvedComparison(s.precision_reached, "|trace| - 2 straddles zero");
    if (s.is_positive()) return ElementClass::Hyperbolic;
    if (s.is_negative()) return ElementClass::Elliptic;
    return m.is_identity_up_to_sign() ? ElementClass::Identity : ElementClass::Parabolic;
}

PSLElement::PSLElement(const Mat2& m, unsigned max_precision) : m_(m), negated_(false) {
    if (m.backend() == Backend::Interval) {
        // Best effort: negate when the trace sign certifies negative.
        Sign s = sign_at_precision(m.trace().as_oracle(), max_precision);
        if (s.is_negative()) {
            m_ = m.negated();
            negated_ = true;
        }
    } else if (sign(m.trace()).is_negative()) {
        m_ = m.negated();
        negated_ = true;
    }
    class_ = classify(m_, max_precision);
}

Scalar maximal_initial_trace(const Mat2& a, const Mat2& b, unsigned max_precision) {
    Scalar t1 = abs(a.trace(), max_precision);
    Scalar t2 = abs(b.trace(), max_precision);
    Scalar t3 = abs((a * b).trace(), max_precision);
    Scalar t4 = abs((a * b.inverse()).trace(), max_precision);
    return max_of(max_of(t1, t2, max_precision), max_of(t3, t4, max_precision), max_precision);
}

FixedPointSet fixed_points(const Mat2& m, unsigned max_precision) {
    ElementClass cls = classify(m, max_precision);
    if (cls == ElementClass::Identity) throw Error("fixed points of the identity");
    if (cls == ElementClass::Elliptic) return {};

    Scalar two = Scalar(2).embedded_like(m.a());
    Sign sc = sign(m.c(), max_precision);
    if (!sc.determinate()) throw UnresolvedComparison(sc.precision_reached, "c entry sign");

    if (sc.is_zero()) {
        // Fixed equation degenerates: x = infinity, plus b/(d-a) if a != d.
        if (cls == ElementClass::Parabolic) return {{BoundaryPoint::infinity()}, std::nullopt};
        FixedPointSet fps;
        fps.points.push_back(BoundaryPoint::infinity());
        fps.points.push_back(BoundaryPoint::finite(m.b() / (m.d() - m.a())));
        // infinity attracts iff |a| > |d|; with det 1 that is a^2 > 1.
        Sign sa = sign(m.a() * m.a() - Scalar(1).embedded_like(m.a()), max_precision);
        if (!sa.determinate()) throw UnresolvedComparison(sa.precision_reached, "attractor");
        fps.attractor_index = sa.is_positive() ? 0u : 1u;
        return fps;
    }

    // Roots of c x^2 + (d - a) x - b; the discriminant is tr^2 - 4.
    Scalar inv2c = Scalar(1) / (two * m.c());
    Scalar base = (m.a() - m.d()) * inv2c;
    if (cls == ElementClass::Parabolic) {
        return {{BoundaryPoint::finite(base)}, std::nullopt};
    }
    Scalar tr = m.trace();
    Scalar disc = tr * tr - two * two;
    // Eigenvector (lambda - d, c) gives x = ((a-d) +- sqrt(disc)) / (2c),
    // with "+" belonging to the larger eigenvalue. For tr > 0 that one
    // attracts; for tr < 0 the smaller does.
    Sign st = sign(tr, max_precision);
    if (!st.determinate()) throw UnresolvedComparison(st.precision_reached, "trace sign");
    FixedPointSet fps;
    fps.points.push_back(BoundaryPoint::surd(base, inv2c, disc));
    fps.points.push_back(BoundaryPoint::surd(base, -inv2c, disc));
    fps.attractor_index = st.is_positive() ? 0u : 1u;
    return fps;
}

Geodesic axis(const Mat2& m, unsigned max_precision) {
    FixedPointSet fps = fixed_points(m, max_precision);
    if (fps.points.size() != 2) throw Error("axis requires a hyperbolic element");
    std::size_t att = *fps.attractor_index;
    return Geodesic{fps.points[1 - att], fps.points[att], true};
}

namespace {

bool rational_trace(const Mat2& e, Rational& out) {
    Scalar t = e.trace();
    if (t.backend() == Backend::Rational) {
        out = t.as_rational();
        return true;
    }
    if (t.backend() == Backend::Algebraic && t.as_algebraic().is_rational()) {
        out = t.as_algebraic().rational_value();
        return true;
    }
    return false;
}

}  // namespace

EllipticOrder elliptic_order(const Mat2& e, unsigned field_degree,
                             std::optional<unsigned> max_order) {
    if (!e.trace().exact()) throw Error("elliptic order requires an exact backend");
    if (classify(e, 0) != ElementClass::Elliptic) throw Error("element is not elliptic");

    Rational t;
    if (!max_order && rational_trace(e, t)) {
        // Niven: 2cos(q*pi) rational only for 2cos in {0, +-1, +-2}; the
        // elliptic range leaves {0, +-1}, orders 2 and 3.
        if (t == 0) return {EllipticOrder::Kind::Finite, 2, 0};
        if (t == 1 || t == -1) return {EllipticOrder::Kind::Finite, 3, 0};
        return {EllipticOrder::Kind::Infinite, 0, 0};
    }

    unsigned certifying = 32 * field_degree * field_degree;
    unsigned cap = max_order ? *max_order : certifying;
    Mat2 power = e;
    for (unsigned n = 1; n <= cap; ++n) {
        if (n > 1) power = power * e;
        if (power.is_identity_up_to_sign()) return {EllipticOrder::Kind::Finite, n, 0};
    }
    if (cap < certifying) return {EllipticOrder::Kind::ExceedsBound, 0, cap};
    return {EllipticOrder::Kind::Infinite, 0, 0};
}

bool is_elementary_pair(const Mat2& a, const Mat2& b, unsigned max_precision) {
    if (a.backend() != Backend::Interval && a.is_identity_up_to_sign())
        throw Error("elementarity test requires non-identity elements");
    if (b.backend() != Backend::Interval && b.is_identity_up_to_sign())
        throw Error("elementarity test requires non-identity elements");
    // tr[A,B] = 2 iff A and B share a fixed point on the Riemann sphere,
    // which covers a common boundary point and the common interior fixed
    // point of two elliptics.
    Scalar gap = commutator(a, b).trace() - Scalar(2).embedded_like(a.a());
    Sign s = sign(gap, max_precision);
    if (!s.determinate())
        throw UnresolvedComparison(s.precision_reached, "commutator trace vs 2");
    return s.is_zero();
}

OrientedPair coherently_orient(const Mat2& a, const Mat2& b, unsigned max_precision) {
    Scalar two = Scalar(2).embedded_like(a.a());
    auto require_hyperbolic_positive = [&](const Mat2& m) {
        Sign s = sign(m.trace() - two, max_precision);
        if (!s.determinate()) throw UnresolvedComparison(s.precision_reached, "trace - 2");
        if (!s.is_positive())
            throw Error("coherent orientation requires trace > 2 pullbacks");
    };
    require_hyperbolic_positive(a);
    require_hyperbolic_positive(b);

    PairRelation rel = relate(axis(a, max_precision), axis(b, max_precision), max_precision);
    if (rel != PairRelation::Disjoint)
        throw Error("coherent orientation requires disjoint axes (got " + to_string(rel) + ")");

    OrientedPair out{a, b};
    Sign ord = sign(a.trace() - b.trace(), max_precision);
    if (!ord.determinate()) throw UnresolvedComparison(ord.precision_reached, "trace order");
    if (ord.is_negative()) {
        out.first = b;
        out.second = a;
        out.swapped = true;
    }

    Sign prod = sign((out.first * out.second).trace() - two, max_precision);
    if (!prod.determinate()) throw UnresolvedComparison(prod.precision_reached, "tr AB vs 2");
    if (!prod.is_positive()) {
        out.second = out.second.inverse();
        out.second_inverted = true;
        // tr AB + tr AB^-1 = trA trB > 4, so the other choice must work.
        Sign check = sign((out.first * out.second).trace() - two, max_precision);
        if (!check.determinate())
            throw UnresolvedComparison(check.precision_reached, "tr AB vs 2");
        if (!check.is_positive())
            throw Error("coherent orientation failed for both choices of B");
    }
    return out;
}

}  // namespace fuchsian
