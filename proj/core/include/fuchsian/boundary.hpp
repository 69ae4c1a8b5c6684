#pragma once

#include <optional>
#include <string>

#include "fuchsian/matrix.hpp"

namespace fuchsian {

// A point of the boundary circle R union {infinity}. Finite points are
// quadratic surds u + v*sqrt(s) over the working backend (s >= 0), which is
// where the fixed points of determinant-1 matrices live: s is trace^2 - 4.
// Keeping the radical symbolic makes every comparison a finite sequence of
// base-field sign tests, with no field extension machinery.
class BoundaryPoint {
public:
    static BoundaryPoint infinity();
    static BoundaryPoint finite(Scalar u);                      // u
    static BoundaryPoint surd(Scalar u, Scalar v, Scalar s);    // u + v*sqrt(s)

    bool is_infinity() const { return infinite_; }
    const Scalar& u() const { return u_; }
    const Scalar& v() const { return v_; }
    const Scalar& s() const { return s_; }

    // Decimal presentation value (midpoint rendering for surds); not for
    // predicates.
    Rational approximate(unsigned precision_bits) const;

    std::string str() const;

private:
    BoundaryPoint() = default;
    bool infinite_ = false;
    Scalar u_, v_, s_;
};

// Sign of (a - b) with infinity as the greatest element of the chart.
// Exact backends always decide; the interval backend may throw
// UnresolvedComparison. compare(a, a) with a = infinity is Zero.
Sign compare(const BoundaryPoint& a, const BoundaryPoint& b, unsigned max_precision);

inline bool same_point(const BoundaryPoint& a, const BoundaryPoint& b, unsigned max_precision) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
    return compare(a, b, max_precision).is_zero();
}

// Sign of u + v*sqrt(s) by base-field sign tests (s >= 0 assumed).
Sign surd_sign(const Scalar& u, const Scalar& v, const Scalar& s, unsigned max_precision);

// Image of a boundary point under z -> (az+b)/(cz+d).
BoundaryPoint apply_moebius(const Mat2& m, const BoundaryPoint& p, unsigned max_precision);

}  // namespace fuchsian
