#pragma once

#include <array>
#include <string>

#include "fuchsian/scalar.hpp"

namespace fuchsian {

// Determinant-1 2x2 matrix over one scalar backend, acting on the upper half
// plane as z -> (az+b)/(cz+d). Exact backends verify det = 1 exactly at
// construction; the interval backend checks the claim at finite precision
// (it can refute, never certify).
class Mat2 {
public:
    Mat2(Scalar a, Scalar b, Scalar c, Scalar d, unsigned check_precision = 32);

    static Mat2 identity();
    static Mat2 diagonal(const Scalar& lambda);  // diag(lambda, 1/lambda)

    const Scalar& a() const { return e_[0]; }
    const Scalar& b() const { return e_[1]; }
    const Scalar& c() const { return e_[2]; }
    const Scalar& d() const { return e_[3]; }

    Backend backend() const { return e_[0].backend(); }

    Scalar trace() const { return e_[0] + e_[3]; }
    Scalar det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    Mat2 inverse() const;  // [d, -b; -c, a]
    Mat2 negated() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);

    // Exact backends only: is this +-I?
    bool is_identity_up_to_sign() const;

    std::string str() const;

private:
    struct Unchecked {};
    Mat2(Unchecked, Scalar a, Scalar b, Scalar c, Scalar d);
    std::array<Scalar, 4> e_;
};

Mat2 commutator(const Mat2& x, const Mat2& y);  // x y x^-1 y^-1

// Conjugation z X z^-1 where z is any invertible rational matrix [p q; r s];
// the determinant of z cancels, so no unit normalization is needed.
Mat2 conjugate(const Mat2& x, const Rational& p, const Rational& q, const Rational& r,
               const Rational& s);

}  // namespace fuchsian
