#pragma once

#include <algorithm>
#include <string>

#include "fuchsian/rational.hpp"

namespace fuchsian {

// Closed interval with rational endpoints. Arithmetic is outward-exact: the
// result interval contains every pointwise result.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval endpoints out of order");
    }

    static RatInterval point(const Rational& v) { return {v, v}; }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }

    bool intersects(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }

    RatInterval intersect(const RatInterval& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))};
    }

    std::string str() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }
};

}  // namespace fuchsian
