#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuchsian/semialg.hpp"
#include "test_support.hpp"

using namespace fuchsian;
using fuchsian::testing::make_rng;
using fuchsian::testing::rand_rational;
using fuchsian::testing::sqrt2_field;

namespace {

// x^2 + y^2 < 1
SAFormula unit_disk() {
    MultiPoly x = MultiPoly::variable(0, 2), y = MultiPoly::variable(1, 2);
    return SAFormula::atom(x * x + y * y - MultiPoly::constant(1), Relation::Lt);
}

std::vector<Scalar> pt(std::initializer_list<Rational> cs) {
    std::vector<Scalar> out;
    for (const auto& c : cs) out.emplace_back(c);
    return out;
}

}  // namespace

TEST_CASE("membership of simple atoms") {
    SAFormula disk = unit_disk();
    CHECK(eval_membership(disk, pt({make_rational(1, 2), make_rational(1, 2)})));
    CHECK(!eval_membership(disk, pt({Rational(1), Rational(0)})));  // boundary excluded
    CHECK_THROWS_AS(eval_membership(disk, pt({Rational(1)})), Error);
}

TEST_CASE("membership over the algebraic backend") {
    MultiPoly x = MultiPoly::variable(0, 1);
    SAFormula f = SAFormula::atom(x * x - MultiPoly::constant(2), Relation::Eq);
    Scalar gamma(AlgebraicNumber::generator(sqrt2_field()));
    CHECK(eval_membership(f, {gamma}));
    CHECK(!eval_membership(f, pt({Rational(1)})));
}

TEST_CASE("interval scalars are rejected") {
    SAFormula disk = unit_disk();
    std::vector<Scalar> p{Scalar(DyadicOracle(Rational(0))), Scalar(DyadicOracle(Rational(0)))};
    CHECK_THROWS_AS(eval_membership(disk, p), Error);
}

TEST_CASE("family evaluation is one-sided") {
    // {x = n} for n = 0, 1, 2, ...
    auto member = [](std::size_t n) {
        MultiPoly x = MultiPoly::variable(0, 1);
        return SAFormula::atom(x - MultiPoly::constant(Rational(static_cast<long>(n))),
                               Relation::Eq);
    };
    SAFamily family(member, 10);
    auto at3 = family.eval(pt({Rational(3)}));
    CHECK(at3.in_union);
    CHECK(at3.index_or_bound == 3);
    CHECK(eval_membership(member(at3.index_or_bound), pt({Rational(3)})));

    auto athalf = family.eval(pt({make_rational(1, 2)}));
    CHECK(!athalf.in_union);
    CHECK(athalf.index_or_bound == 10);

    // Shrinking disks around moving centers: (x - 3 + n)^2 <= 4^-n. An
    // independent scan finds the first containing index for x = 3.
    auto disks = [](std::size_t n) {
        MultiPoly x = MultiPoly::variable(0, 1);
        MultiPoly center = x - MultiPoly::constant(Rational(3 - static_cast<long>(n)));
        return SAFormula::atom(center * center - MultiPoly::constant(pow2(-2 * static_cast<long>(n))),
                               Relation::Le);
    };
    SAFamily shrinking(disks, 16);
    auto r = shrinking.eval(pt({Rational(3)}));
    std::size_t expected = 0;
    bool found = false;
    for (; expected < 16; ++expected) {
        Rational center(3 - static_cast<long>(expected));
        if ((Rational(3) - center) * (Rational(3) - center) <=
            pow2(-2 * static_cast<long>(expected))) {
            found = true;
            break;
        }
    }
    REQUIRE(found);
    CHECK(r.in_union);
    CHECK(r.index_or_bound == expected);
    CHECK(expected == 0);
}

TEST_CASE("domain documents load, evaluate and round-trip") {
    const std::string doc =
        "(domain (vars x y z)\n"
        "  (note \"toy trace domain\")\n"
        "  (and (> x 2) (> y 2) (> z 2)\n"
        "       (< (* x y z) (+ (* x x) (* y y) (* z z)))))";
    TraceParameterDomain dom = load_domain(doc);
    CHECK(dom.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(dom.provenance == "toy trace domain");

    CHECK(eval_membership(dom.formula, pt({make_rational(21, 10), make_rational(21, 10),
                                           make_rational(21, 10)})));
    CHECK(!eval_membership(dom.formula, pt({Rational(3), Rational(3), Rational(3)})));
    CHECK(!eval_membership(dom.formula, pt({Rational(1), Rational(3), Rational(3)})));

    // Round trip: print, parse again, agree on a grid.
    TraceParameterDomain again = load_domain(print_domain(dom));
    CHECK(again.variables == dom.variables);
    for (long i = 0; i <= 4; ++i)
        for (long j = 0; j <= 4; ++j)
            for (long k = 0; k <= 4; ++k) {
                auto p = pt({make_rational(2 * i, 3), make_rational(2 * j, 3),
                             make_rational(2 * k, 3)});
                CHECK(eval_membership(dom.formula, p) == eval_membership(again.formula, p));
            }
    // And print is a fixed point after one round.
    CHECK(print_domain(again) == print_domain(load_domain(print_domain(again))));
}

TEST_CASE("domain parse errors carry positions") {
    CHECK_THROWS_AS(load_domain("(domain (vars))"), ParseError);
    CHECK_THROWS_AS(load_domain("(domain (vars x))"), ParseError);  // no formula
    CHECK_THROWS_AS(load_domain("(domain (vars x) (>< x 1))"), ParseError);
    CHECK_THROWS_AS(load_domain("(domain (vars x) (> y 1))"), ParseError);  // unbound
    CHECK_THROWS_AS(load_domain("(domain (vars x) (> x 1)"), ParseError);   // unterminated
    try {
        load_domain("(domain (vars x) (>< x 1))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("de Morgan rewrites preserve membership") {
    const std::string doc =
        "(domain (vars x y)"
        " (not (or (and (> x 0) (<= y 1)) (not (or (= x y) (< (* x y) 2))))))";
    TraceParameterDomain dom = load_domain(doc);
    SAFormula rewritten = dom.formula.demorgan_normal();
    auto rng = make_rng(79);
    for (int i = 0; i < 300; ++i) {
        auto p = pt({rand_rational(rng), rand_rational(rng)});
        CHECK(eval_membership(dom.formula, p) == eval_membership(rewritten, p));
    }
}

TEST_CASE("formula evaluation agrees with a hand-written oracle on a grid") {
    // The same sets, written once as documents and once as plain lambdas.
    struct Fixture {
        std::string doc;
        std::function<bool(const Rational&, const Rational&)> oracle;
    };
    const Fixture fixtures[] = {
        {"(domain (vars x y) (< (+ (* x x) (* y y)) 1))",
         [](const Rational& x, const Rational& y) { return x * x + y * y < 1; }},
        {"(domain (vars x y) (and (> x 0) (> y 0) (<= (* x y) 1)))",
         [](const Rational& x, const Rational& y) { return x > 0 && y > 0 && x * y <= 1; }},
        {"(domain (vars x y) (or (= x y) (> (- x y) 1)))",
         [](const Rational& x, const Rational& y) { return x == y || x - y > 1; }},
        {"(domain (vars x y) (not (>= (+ x y) 0)))",
         [](const Rational& x, const Rational& y) { return !(x + y >= 0); }},
        {"(domain (vars x y) (!= (- (^ x 2) y) 0))",
         [](const Rational& x, const Rational& y) { return x * x - y != 0; }},
    };
    for (const auto& fx : fixtures) {
        TraceParameterDomain dom = load_domain(fx.doc);
        for (long i = -6; i <= 6; ++i)
            for (long j = -6; j <= 6; ++j) {
                Rational x = make_rational(i, 3), y = make_rational(j, 3);
                CHECK(eval_membership(dom.formula, pt({x, y})) == fx.oracle(x, y));
            }
    }
}
