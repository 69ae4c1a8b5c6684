#include <benchmark/benchmark.h>

#include <random>

#include "fuchsian/engine.hpp"
#include "fuchsian/input.hpp"

namespace {

using namespace fuchsian;

Mat2 rational_fixture_a() {
    InputContext ctx;
    return parse_matrix("[[2,0],[0,1/2]]", ctx);
}

Mat2 rational_fixture_b() {
    InputContext ctx;
    return parse_matrix("[[25/3,-32],[4/3,-5]]", ctx);
}

void BM_RationalMatMul(benchmark::State& state) {
    Mat2 a = rational_fixture_a(), b = rational_fixture_b();
    for (auto _ : state) {
        Mat2 c = a * b;
        benchmark::DoNotOptimize(c.trace());
    }
}
BENCHMARK(BM_RationalMatMul);

void BM_AlgebraicMul(benchmark::State& state) {
    FieldPtr f = NumberField::make(RatPoly({Rational(-2), Rational(0), Rational(1)}),
                                   RatInterval(Rational(1), Rational(2)));
    AlgebraicNumber x(f, RatPoly({make_rational(3, 7), make_rational(5, 11)}));
    AlgebraicNumber y(f, RatPoly({make_rational(-2, 9), make_rational(8, 3)}));
    for (auto _ : state) {
        AlgebraicNumber z = x * y;
        benchmark::DoNotOptimize(z.representation().degree());
    }
}
BENCHMARK(BM_AlgebraicMul);

void BM_AlgebraicSign(benchmark::State& state) {
    FieldPtr f = NumberField::make(RatPoly({Rational(-2), Rational(0), Rational(1)}),
                                   RatInterval(Rational(1), Rational(2)));
    // gamma - 577/408: the Pell convergent keeps the sign test refining.
    AlgebraicNumber v = AlgebraicNumber::generator(f) -
                        AlgebraicNumber::embed(f, make_rational(577, 408));
    for (auto _ : state) benchmark::DoNotOptimize(v.sign());
}
BENCHMARK(BM_AlgebraicSign);

void BM_OracleSignEscalation(benchmark::State& state) {
    DyadicOracle o{pow2(-static_cast<long>(state.range(0)))};
    for (auto _ : state) benchmark::DoNotOptimize(sign_at_precision(o, 256));
}
BENCHMARK(BM_OracleSignEscalation)->Arg(8)->Arg(32)->Arg(128);

void BM_RunReduction(benchmark::State& state) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> lam(2, 9), off(1, 12);
    std::vector<std::pair<Mat2, Mat2>> pairs;
    for (int i = 0; i < 32; ++i) {
        Mat2 a = Mat2::diagonal(Scalar(Rational(lam(rng))));
        Rational u(off(rng)), v = u + off(rng);
        Mat2 b = conjugate(Mat2::diagonal(Scalar(Rational(lam(rng)))), v, u, Rational(1),
                           Rational(1));
        pairs.emplace_back(a, b);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ % pairs.size()];
        RunResult res = run(a, b);
        benchmark::DoNotOptimize(res.state.step_index());
    }
}
BENCHMARK(BM_RunReduction);

void BM_JorgensenSum(benchmark::State& state) {
    Mat2 a = rational_fixture_a(), b = rational_fixture_b();
    for (auto _ : state) benchmark::DoNotOptimize(jorgensen_sum(a, b));
}
BENCHMARK(BM_JorgensenSum);

}  // namespace

BENCHMARK_MAIN();
