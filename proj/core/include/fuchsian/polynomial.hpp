#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuchsian/interval.hpp"
#include "fuchsian/rational.hpp"

namespace fuchsian {

// Dense univariate polynomial with rational coefficients, ascending order.
// The zero polynomial is stored with no coefficients; degree() is then -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rational& v);
    static RatPoly x();  // the monomial x

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& leading() const;
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const Rational& k);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    static RatPoly mod(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

    RatPoly derivative() const;
    Rational eval(const Rational& x) const;
    RatInterval eval(const RatInterval& x) const;

    // Monic gcd, and extended gcd g = u*a + v*b (g monic unless zero).
    static RatPoly gcd(RatPoly a, RatPoly b);

    // Number of distinct real roots in the half-open interval (lo, hi],
    // by Sturm's theorem. Requires a squarefree input for exact counts.
    static int count_roots(const RatPoly& p, const Rational& lo, const Rational& hi);

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyXGcd {
    RatPoly g, u, v;  // g = u*a + v*b, g monic unless zero
};
PolyXGcd poly_xgcd(const RatPoly& a, const RatPoly& b);

// Sum of the absolute values of all numerators and denominators of the
// coefficient list (lowest terms), the symbolic-model size measure. The zero
// polynomial counts as the single coefficient 0/1.
BigInt seminorm(const RatPoly& p);
BigInt seminorm(const Rational& q);

// floor(ln(sn)) + 1, computed by exact comparison against rational bounds on
// powers of e. Throws on sn < 1.
unsigned log_measure(const BigInt& sn);

}  // namespace fuchsian
