#include "fuchsian/input.hpp"

#include <cctype>

namespace fuchsian {

namespace {

struct Scanner {
    const std::string& src;
    std::size_t i = 0;

    void skip_ws() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < src.size() && src[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(i, std::string("expected '") + c + "'");
    }
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = std::string(w).size();
        if (src.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    void expect_end() {
        skip_ws();
        if (i < src.size()) throw ParseError(i, "trailing input");
    }

    Rational rational() {
        skip_ws();
        std::size_t start = i;
        if (i < src.size() && (src[i] == '-' || src[i] == '+')) ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(src[start]))))
            throw ParseError(start, "expected a rational literal");
        std::string num = src.substr(start, i - start);
        if (eat('/')) {
            skip_ws();
            std::size_t dstart = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i == dstart) throw ParseError(dstart, "expected a denominator");
            std::string den = src.substr(dstart, i - dstart);
            if (Rational(den) == 0) throw ParseError(dstart, "zero denominator");
            Rational q(num + "/" + den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    std::vector<Rational> coeff_list() {
        expect('[');
        std::vector<Rational> out;
        if (eat(']')) return out;
        out.push_back(rational());
        while (eat(',')) out.push_back(rational());
        expect(']');
        return out;
    }
};

FieldPtr field_from(Scanner& sc) {
    std::vector<Rational> m = sc.coeff_list();
    sc.expect(';');
    sc.expect('[');
    Rational lo = sc.rational();
    sc.expect(',');
    Rational hi = sc.rational();
    sc.expect(']');
    return NumberField::make(RatPoly(std::move(m)), RatInterval(lo, hi));
}

Scalar scalar_from(Scanner& sc, const InputContext& ctx) {
    sc.skip_ws();
    if (sc.eat_word("alg(")) {
        FieldPtr field = field_from(sc);
        sc.expect(';');
        std::vector<Rational> rep = sc.coeff_list();
        sc.expect(')');
        if (ctx.backend != Backend::Algebraic)
            throw ParseError(sc.i, "algebraic literal on a non-algebraic backend");
        return Scalar(AlgebraicNumber(std::move(field), RatPoly(std::move(rep))));
    }
    if (sc.eat_word("sqrt(")) {
        Rational q = sc.rational();
        sc.expect(')');
        if (ctx.backend != Backend::Interval)
            throw ParseError(sc.i, "sqrt(...) demo constants exist only on the interval backend");
        if (q < 0) throw ParseError(sc.i, "sqrt of a negative rational");
        return Scalar(sqrt_oracle(q));
    }
    sc.skip_ws();
    if (sc.i < sc.src.size() && sc.src[sc.i] == '[') {
        std::vector<Rational> rep = sc.coeff_list();
        if (ctx.backend != Backend::Algebraic || !ctx.field)
            throw ParseError(sc.i, "representation literal needs the algebraic backend and a field");
        return Scalar(AlgebraicNumber(ctx.field, RatPoly(std::move(rep))));
    }
    Rational q = sc.rational();
    switch (ctx.backend) {
        case Backend::Rational: return Scalar(q);
        case Backend::Algebraic:
            if (!ctx.field) throw ParseError(sc.i, "algebraic backend needs a field (--field)");
            return Scalar(AlgebraicNumber::embed(ctx.field, q));
        case Backend::Interval: return Scalar(DyadicOracle(q));
    }
    throw ParseError(sc.i, "unreachable");
}

}  // namespace

FieldPtr parse_field_spec(const std::string& text) {
    Scanner sc{text};
    FieldPtr f = field_from(sc);
    sc.expect_end();
    return f;
}

Scalar parse_scalar(const std::string& text, const InputContext& ctx) {
    Scanner sc{text};
    Scalar s = scalar_from(sc, ctx);
    sc.expect_end();
    return s;
}

Mat2 parse_matrix(const std::string& text, const InputContext& ctx) {
    Scanner sc{text};
    sc.expect('[');
    sc.expect('[');
    Scalar a = scalar_from(sc, ctx);
    sc.expect(',');
    Scalar b = scalar_from(sc, ctx);
    sc.expect(']');
    sc.expect(',');
    sc.expect('[');
    Scalar c = scalar_from(sc, ctx);
    sc.expect(',');
    Scalar d = scalar_from(sc, ctx);
    sc.expect(']');
    sc.expect(']');
    sc.expect_end();
    return Mat2(std::move(a), std::move(b), std::move(c), std::move(d));
}

DyadicOracle sqrt_oracle(const Rational& q) {
    if (q < 0) throw Error("sqrt of a negative rational");
    return DyadicOracle([q](unsigned m) -> Rational {
        // k = isqrt(floor(q * 4^(m+1))) gives k/2^(m+1) <= sqrt(q) <
        // (k+1)/2^(m+1), so the error is below 2^-(m+1).
        BigInt scaled = floor_of(q * pow2(2 * static_cast<long>(m + 1)));
        BigInt k;
        mpz_sqrt(k.get_mpz_t(), scaled.get_mpz_t());
        return Rational(k) * pow2(-static_cast<long>(m + 1));
    });
}

}  // namespace fuchsian
