#include "fuchsian/boundary.hpp"

namespace fuchsian {

BoundaryPoint BoundaryPoint::infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
}

BoundaryPoint BoundaryPoint::finite(Scalar u) {
    BoundaryPoint p;
    p.u_ = std::move(u);
    p.v_ = Scalar(0).embedded_like(p.u_);
    p.s_ = p.v_;
    return p;
}

BoundaryPoint BoundaryPoint::surd(Scalar u, Scalar v, Scalar s) {
    BoundaryPoint p;
    p.u_ = std::move(u);
    p.v_ = std::move(v);
    p.s_ = std::move(s);
    return p;
}

Rational BoundaryPoint::approximate(unsigned precision_bits) const {
    if (infinite_) throw Error("no finite approximation of infinity");
    Rational base = fuchsian::approximate(u_, precision_bits);
    Rational vv = fuchsian::approximate(v_, precision_bits);
    Rational ss = fuchsian::approximate(s_, precision_bits);
    if (vv == 0 || ss <= 0) return base;
    // Bisect sqrt(ss) to the requested width; presentation only.
    Rational lo(0), hi = ss < 1 ? Rational(1) : ss;
    Rational width = pow2(-static_cast<long>(precision_bits));
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        (mid * mid <= ss ? lo : hi) = mid;
    }
    return base + vv * ((lo + hi) / 2);
}

std::string BoundaryPoint::str() const {
    if (infinite_) return "oo";
    if (v_.exact() && is_zero(v_)) return u_.str();
    return u_.str() + " + (" + v_.str() + ")*sqrt(" + s_.str() + ")";
}

Sign surd_sign(const Scalar& u, const Scalar& v, const Scalar& s, unsigned max_precision) {
    Sign ss = sign(s, max_precision);
    if (!ss.determinate()) throw UnresolvedComparison(ss.precision_reached, "radicand sign");
    if (ss.is_zero()) return sign(u, max_precision);
    Sign sv = sign(v, max_precision);
    if (!sv.determinate()) throw UnresolvedComparison(sv.precision_reached, "surd coefficient");
    if (sv.is_zero()) return sign(u, max_precision);
    Sign su = sign(u, max_precision);
    if (!su.determinate()) throw UnresolvedComparison(su.precision_reached, "surd base");
    if (su.is_zero()) return sv;
    if (su.value() == sv.value()) return su;
    // Opposite signs: decide |u| vs |v|*sqrt(s) via u^2 - v^2 s.
    Sign t = sign(u * u - v * v * s, max_precision);
    if (!t.determinate()) throw UnresolvedComparison(t.precision_reached, "surd discriminant");
    if (t.is_zero()) return Sign::zero();
    return t.is_positive() ? su : sv;
}

Sign compare(const BoundaryPoint& a, const BoundaryPoint& b, unsigned max_precision) {
    if (a.is_infinity() && b.is_infinity()) return Sign::zero();
    if (a.is_infinity()) return Sign::positive();
    if (b.is_infinity()) return Sign::negative();
    // a - b = A + B with A = (ua - ub) + va*sqrt(sa) and B = -vb*sqrt(sb);
    // both halves are single surds over the base field.
    Scalar du = a.u() - b.u();
    Sign sA = surd_sign(du, a.v(), a.s(), max_precision);
    Sign sB = surd_sign(Scalar(0).embedded_like(du), -b.v(), b.s(), max_precision);
    if (sA.is_zero()) return sB;
    if (sB.is_zero()) return sA;
    if (sA.value() == sB.value()) return sA;
    // Opposite: compare A^2 vs B^2. A^2 = (du^2 + va^2 sa) + (2 du va) sqrt(sa)
    // is again a single surd, and B^2 = vb^2 sb is in the field.
    Scalar a2u = du * du + a.v() * a.v() * a.s();
    Scalar a2v = Scalar(2).embedded_like(du) * du * a.v();
    Scalar b2 = b.v() * b.v() * b.s();
    Sign t = surd_sign(a2u - b2, a2v, a.s(), max_precision);
    if (t.is_zero()) return Sign::zero();
    return t.is_positive() ? sA : sB;
}

BoundaryPoint apply_moebius(const Mat2& m, const BoundaryPoint& p, unsigned max_precision) {
    if (p.is_infinity()) {
        Sign sc = sign(m.c(), max_precision);
        if (!sc.determinate()) throw UnresolvedComparison(sc.precision_reached, "c entry sign");
        if (sc.is_zero()) return BoundaryPoint::infinity();
        return BoundaryPoint::finite(m.a() / m.c());
    }
    // numerator   N = (a u + b) + a v sqrt(s)
    // denominator D = (c u + d) + c v sqrt(s)
    Scalar nu = m.a() * p.u() + m.b();
    Scalar nv = m.a() * p.v();
    Scalar du = m.c() * p.u() + m.d();
    Scalar dv = m.c() * p.v();
    // Rationalize: N/D = N * conj(D) / (D * conj(D)).
    Scalar denom = du * du - dv * dv * p.s();
    Sign sd = sign(denom, max_precision);
    if (!sd.determinate()) throw UnresolvedComparison(sd.precision_reached, "pole test");
    if (sd.is_zero()) {
        // D*conj(D) = 0: either p is the pole of the map (D = 0) or the
        // conjugate surd is (conj(D) = 0, so du = dv*sqrt(s)).
        Sign sD = surd_sign(du, dv, p.s(), max_precision);
        if (!sD.determinate()) throw UnresolvedComparison(sD.precision_reached, "pole test");
        if (sD.is_zero()) return BoundaryPoint::infinity();
        // N/D = N/(2 dv sqrt(s)) = nv/(2 dv) + (nu/(2 dv s)) sqrt(s).
        Scalar two = Scalar(2).embedded_like(dv);
        return BoundaryPoint::surd(nv / (two * dv), nu / (two * dv * p.s()), p.s());
    }
    Scalar ru = (nu * du - nv * dv * p.s()) / denom;
    Scalar rv = (nv * du - nu * dv) / denom;
    return BoundaryPoint::surd(ru, rv, p.s());
}

}  // namespace fuchsian
