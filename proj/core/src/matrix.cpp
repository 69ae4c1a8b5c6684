#include "fuchsian/matrix.hpp"

namespace fuchsian {

Mat2::Mat2(Unchecked, Scalar a, Scalar b, Scalar c, Scalar d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Mat2::Mat2(Scalar a, Scalar b, Scalar c, Scalar d, unsigned check_precision)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    // Unify backends (rational constants may ride along with field elements).
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (e_[static_cast<std::size_t>(i)].backend() !=
                e_[static_cast<std::size_t>(j)].backend())
                e_[static_cast<std::size_t>(i)] =
                    e_[static_cast<std::size_t>(i)].embedded_like(e_[static_cast<std::size_t>(j)]);

    Scalar dm1 = det() - Scalar(1);
    if (dm1.exact()) {
        if (!is_zero(dm1)) throw Error("matrix determinant is not 1");
    } else {
        Rational probe = dm1.as_oracle().query(check_precision);
        if (abs_of(probe) >= pow2(-static_cast<long>(check_precision)))
            throw Error("matrix determinant differs from 1 at finite precision");
    }
}

Mat2 Mat2::identity() { return Mat2(Unchecked{}, Scalar(1), Scalar(0), Scalar(0), Scalar(1)); }

Mat2 Mat2::diagonal(const Scalar& lambda) {
    return Mat2(lambda, Scalar(0), Scalar(0), Scalar(1) / lambda);
}

Mat2 Mat2::inverse() const {
    return Mat2(Unchecked{}, e_[3], -e_[1], -e_[2], e_[0]);
}

Mat2 Mat2::negated() const {
    return Mat2(Unchecked{}, -e_[0], -e_[1], -e_[2], -e_[3]);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2(Mat2::Unchecked{},
                x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
}

bool Mat2::is_identity_up_to_sign() const {
    return is_zero(e_[1]) && is_zero(e_[2]) && is_zero(e_[0] - e_[3]);
}

std::string Mat2::str() const {
    return "[[" + e_[0].str() + ", " + e_[1].str() + "], [" + e_[2].str() + ", " + e_[3].str() +
           "]]";
}

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y * x.inverse() * y.inverse(); }

Mat2 conjugate(const Mat2& x, const Rational& p, const Rational& q, const Rational& r,
               const Rational& s) {
    Rational dz = p * s - q * r;
    if (dz == 0) throw Error("conjugator is singular");
    auto emb = [&x](const Rational& v) { return Scalar(v).embedded_like(x.a()); };
    Scalar P = emb(p), Q = emb(q), R = emb(r), S = emb(s), D = emb(dz);
    // (1/dz) * [p q; r s] * x * [s -q; -r p]; determinant dz^2 / dz^2 = 1.
    Scalar t0 = P * x.a() + Q * x.c(), t1 = P * x.b() + Q * x.d();
    Scalar t2 = R * x.a() + S * x.c(), t3 = R * x.b() + S * x.d();
    return Mat2((t0 * S - t1 * R) / D, (t1 * P - t0 * Q) / D,
                (t2 * S - t3 * R) / D, (t3 * P - t2 * Q) / D);
}

}  // namespace fuchsian
