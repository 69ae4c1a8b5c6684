#include "fuchsian/polynomial.hpp"

#include <sstream>

namespace fuchsian {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& v) {
    RatPoly p;
    if (v != 0) p.c_ = {v};
    return p;
}

RatPoly RatPoly::x() {
    RatPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> out = a.c_;
    for (auto& v : out) v = -v;
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const Rational& k) {
    std::vector<Rational> out = a.c_;
    for (auto& v : out) v *= k;
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational q = rem[static_cast<std::size_t>(i)] / b.leading();
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(out));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval RatPoly::eval(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rational(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    return acc;
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rational(1) / a.leading());
    return a;
}

PolyXGcd poly_xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(1), u1;
    RatPoly v0, v1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = RatPoly::divmod(r0, r1);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv;
        u0 = u0 * inv;
        v0 = v0 * inv;
    }
    return {r0, u0, v0};
}

namespace {

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int RatPoly::count_roots(const RatPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw Error("root count of zero polynomial");
    if (lo >= hi) return 0;
    std::vector<RatPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        RatPoly r = -mod(chain[chain.size() - 2], chain.back());
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        Rational a = abs_of(v);
        if (i == 0 || a != 1) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BigInt seminorm(const Rational& q) {
    return abs(q.get_num()) + q.get_den();
}

BigInt seminorm(const RatPoly& p) {
    if (p.is_zero()) return 1;  // the single coefficient 0/1
    BigInt sn(0);
    for (const auto& v : p.coeffs()) sn += seminorm(v);
    return sn;
}

unsigned log_measure(const BigInt& sn) {
    if (sn < 1) throw Error("log_measure requires a positive size");
    // Bracket e by partial sums of sum 1/i!: s_m < e < s_m + 2/(m+1)!.
    // Decide e^k <= sn by exact comparison of the k-th powers of the bounds,
    // refining until they separate (e^k is irrational, so they always do).
    auto cmp_exp_power = [&](unsigned k) {
        // Returns true iff e^k < sn.
        Rational lo(2), hi(3);
        unsigned terms = 4;
        for (;;) {
            Rational l(1), h(1);
            for (unsigned i = 0; i < k; ++i) {
                l *= lo;
                h *= hi;
            }
            if (h < Rational(sn)) return true;
            if (l > Rational(sn)) return false;
            Rational s(0), fact(1);
            for (unsigned i = 1; i <= terms; ++i) {
                fact /= Rational(static_cast<long>(i));
                s += fact;
            }
            lo = Rational(1) + s;
            hi = lo + 2 * fact / Rational(static_cast<long>(terms + 1));
            terms += 4;
        }
    };
    unsigned k = 0;
    while (cmp_exp_power(k + 1)) ++k;
    return k + 1;
}

}  // namespace fuchsian
