// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance in code; all checks on exact
// backends are exact.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "fuchsian/input.hpp"
#include "fuchsian/reporting.hpp"
#include "fuchsian/semialg.hpp"
#include "test_support.hpp"

using namespace fuchsian;
using namespace fuchsian::testing;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> check;
};

const std::string kTestDir = FUCHSIAN_TEST_DIR;

// Runs recorded by criterion 2 and reused by criteria 3 and 7.
struct RecordedRun {
    Mat2 a, b;
    RunResult result;
};
std::vector<RecordedRun> g_recorded;

// ---------------------------------------------------------------------------
// 1. Negative-trace equivalence on >= 1000 coherent pairs; exact agreement.
bool criterion_theorem_equivalence(std::string& detail) {
    auto rng = make_rng(101);
    int agree = 0, below = 0, above = 0;
    const int kPairs = 1000;
    for (int i = 0; i < kPairs; ++i) {
        auto [a, b] = rand_coherent_pair(rng);
        ConsistencyReport rep = geometric_trace_consistency(a, b, 64);
        if (rep.agree) ++agree;
        if (rep.algebraic == ConsistencyReport::AlgebraicCase::BelowMinus2) ++below;
        if (rep.algebraic == ConsistencyReport::AlgebraicCase::AbovePlus2) ++above;
    }
    std::ostringstream os;
    os << agree << "/" << kPairs << " agree (" << below << " bound a region, " << above
       << " have a separating axis)";
    detail = os.str();
    return agree == kPairs && below > 0 && above > 0;
}

// ---------------------------------------------------------------------------
// 2. O(T): >= 500 random rational hyperbolic-hyperbolic inputs with T <= 100
//    terminate with steps <= 8*T and no budget trips.
bool criterion_step_count(std::string& detail) {
    auto rng = make_rng(103);
    int runs = 0, budget_trips = 0;
    Rational max_ratio(0);
    unsigned max_steps = 0;
    auto rand_hyperbolic = [&rng]() {
        auto [p, q, r, s] = rand_conjugator(rng);
        return conjugated_hyperbolic(rand_positive_rational(rng, 9, 3) + 1, p, q, r, s);
    };
    while (runs < 500) {
        // Alternate between oriented pairs (long reductions) and raw
        // conjugated hyperbolics (any axis configuration).
        auto coherent = rand_coherent_pair(rng);
        Mat2 a = runs % 2 == 0 ? coherent.first : rand_hyperbolic();
        Mat2 b = runs % 2 == 0 ? coherent.second : rand_hyperbolic();
        Scalar t = maximal_initial_trace(a, b, 64);
        if (!(t.as_rational() <= 100)) continue;
        ++runs;
        RunResult res = run(a, b);
        if (res.verdict.reason == UnresolvedReason::StepBudgetExceeded) ++budget_trips;
        Rational ratio = Rational(res.state.step_index()) / t.as_rational();
        max_ratio = std::max(max_ratio, ratio);
        max_steps = std::max(max_steps, res.state.step_index());
        if (!(Rational(res.state.step_index()) <= 8 * t.as_rational())) {
            detail = "step count exceeded 8*T";
            return false;
        }
        g_recorded.push_back({a, b, std::move(res)});
    }
    std::ostringstream os;
    os << runs << " runs, 0 budget trips expected (got " << budget_trips
       << "), max steps " << max_steps << ", max steps/T ratio " << max_ratio.get_str();
    detail = os.str();
    return budget_trips == 0;
}

// ---------------------------------------------------------------------------
// 3. Seminorm discipline along every recorded run: each step's polynomial
//    products satisfy SN(PQ) <= SN(P)SN(Q) entrywise (recorded per step),
//    re-verified here against an independent recomputation of the bound.
bool criterion_seminorm(std::string& detail) {
    std::size_t steps_checked = 0;
    for (const RecordedRun& rr : g_recorded) {
        const ReductionState& st = rr.result.state;
        for (std::size_t i = 0; i < st.visited.size(); ++i) {
            if (!st.visited[i].product_bound_ok) {
                detail = "recorded product bound violated";
                return false;
            }
            if (i == 0) continue;
            ++steps_checked;
            // Independent recomputation: rebuild the factor matrices from
            // the word ledger and check every scalar product of the step.
            Mat2 f = st.visited[i - 1].word_first.evaluate(rr.a, rr.b);
            Mat2 g = st.visited[i - 1].word_second.evaluate(rr.a, rr.b).inverse();
            const Scalar* fe[4] = {&f.a(), &f.b(), &f.c(), &f.d()};
            const Scalar* ge[4] = {&g.a(), &g.b(), &g.c(), &g.d()};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    for (int k = 0; k < 2; ++k) {
                        const Scalar& p = *fe[2 * r + k];
                        const Scalar& q = *ge[2 * k + c];
                        if (seminorm(p * q) > seminorm(p) * seminorm(q)) {
                            detail = "SN(PQ) > SN(P)SN(Q) at a recorded step";
                            return false;
                        }
                    }
        }
    }
    detail = std::to_string(steps_checked) + " replacement steps checked";
    return steps_checked > 0;
}

// ---------------------------------------------------------------------------
// 4. Elliptic order suite vs a brute-force matrix-power oracle.
bool criterion_elliptic_orders(std::string& detail) {
    struct Case {
        Mat2 e;
        unsigned degree;
        bool rational_trace;
    };
    std::vector<Case> cases;
    FieldPtr f2 = sqrt2_field();
    for (long num : {0L, 1L, -1L}) {
        Rational t = make_rational(num, 1);
        cases.push_back({Mat2(Scalar(AlgebraicNumber::embed(f2, t)), Scalar(-1), Scalar(1),
                              Scalar(0)),
                         2, true});
    }
    for (long num : {1L, -1L, 3L, -3L}) {
        Rational t = make_rational(num, 2);
        cases.push_back({Mat2(Scalar(AlgebraicNumber::embed(f2, t)), Scalar(-1), Scalar(1),
                              Scalar(0)),
                         2, true});
    }
    FieldPtr f7 = cos7_field();
    cases.push_back(
        {Mat2(Scalar(AlgebraicNumber::generator(f7)), Scalar(-1), Scalar(1), Scalar(0)), 3,
         false});
    // 2cos(pi/7) - 1 is another irrational elliptic trace in the same field.
    cases.push_back({Mat2(Scalar(AlgebraicNumber::generator(f7)) - Scalar(1), Scalar(-1),
                          Scalar(1), Scalar(0)),
                     3, false});

    int finite_seen = 0, infinite_seen = 0;
    for (const Case& c : cases) {
        unsigned bound = 32 * c.degree * c.degree;
        // Brute force oracle: first n <= bound with E^n = +-I.
        unsigned oracle_order = 0;
        Mat2 power = c.e;
        for (unsigned n = 1; n <= bound && oracle_order == 0; ++n) {
            if (n > 1) power = power * c.e;
            if (power.is_identity_up_to_sign()) oracle_order = n;
        }
        EllipticOrder ord = elliptic_order(c.e, c.degree);
        if (oracle_order != 0) {
            ++finite_seen;
            if (ord.kind != EllipticOrder::Kind::Finite || ord.order != oracle_order) {
                detail = "finite order mismatch against the power oracle";
                return false;
            }
            if (!(ord.order <= bound)) {
                detail = "order exceeds 32 D^2";
                return false;
            }
        } else {
            ++infinite_seen;
            if (ord.kind != EllipticOrder::Kind::Infinite) {
                detail = "expected Infinite, got something else";
                return false;
            }
            if (c.rational_trace) {
                Scalar t = c.e.trace();
                Rational tr = t.as_algebraic().rational_value();
                if (tr == 0 || tr == 1 || tr == -1) {
                    detail = "Niven fast path misclassified a finite order";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(finite_seen) + " finite, " + std::to_string(infinite_seen) +
             " certified infinite (traces 0, +-1, +-1/2, +-3/2, 2cos(pi/7), 2cos(pi/7)-1)";
    return finite_seen >= 4 && infinite_seen >= 4;
}

// ---------------------------------------------------------------------------
// 5. Bit-model obstruction.
bool criterion_bit_model(std::string& detail) {
    Sign zero_sign = sign_at_precision(DyadicOracle(Rational(0)), 256);
    if (zero_sign.determinate() || zero_sign.precision_reached != 256) {
        detail = "exact-zero oracle did not stay indeterminate at 256";
        return false;
    }
    for (unsigned k = 1; k <= 64; ++k) {
        for (int s : {+1, -1}) {
            DyadicOracle o{Rational(s) * pow2(-static_cast<long>(k))};
            unsigned resolved = 0;
            for (unsigned m = 1; m <= k + 2 && resolved == 0; ++m) {
                Rational phi = o.query(m);
                if (abs_of(phi) > pow2(-static_cast<long>(m))) {
                    if ((phi > 0 ? +1 : -1) != s) {
                        detail = "escalation certified the wrong sign";
                        return false;
                    }
                    resolved = m;
                }
            }
            if (resolved == 0) {
                detail = "2^-" + std::to_string(k) + " not certified by m = k+2";
                return false;
            }
        }
    }

    // tr AB^-1 = 2 exactly, entries arranged so every other comparison is
    // strict (a conjugate of the diagonal form of the fixture).
    InputContext exact_ctx;
    Mat2 a = parse_matrix("[[2,0],[3/2,1/2]]", exact_ctx);
    Mat2 b = parse_matrix("[[17/9,-1/9],[13/9,4/9]]", exact_ctx);
    Scalar t = a.trace() * b.trace() - (a * b).trace();
    if (!(t.as_rational() == 2)) {
        detail = "fixture does not have tr AB^-1 = 2";
        return false;
    }
    RunResult exact = run(a, b);
    if (exact.verdict.kind != VerdictKind::Unresolved ||
        exact.verdict.reason != UnresolvedReason::ParabolicCase) {
        detail = "exact backend did not route tr AB^-1 = 2 to the parabolic case";
        return false;
    }
    InputContext oracle_ctx;
    oracle_ctx.backend = Backend::Interval;
    RunResult oracle = run(parse_matrix("[[2,0],[3/2,1/2]]", oracle_ctx),
                           parse_matrix("[[17/9,-1/9],[13/9,4/9]]", oracle_ctx), {}, 256);
    if (oracle.verdict.kind != VerdictKind::Unresolved ||
        oracle.verdict.reason != UnresolvedReason::OracleIndeterminate) {
        detail = "interval backend did not surface OracleIndeterminate";
        return false;
    }
    detail =
        "zero oracle indeterminate at 256; +-2^-k certified by k+2 for k <= 64; "
        "tr AB^-1 = 2 fixture: exact -> ParabolicCase, interval -> OracleIndeterminate";
    return true;
}

// ---------------------------------------------------------------------------
// 6. Verdict regression corpus with replay re-certification and byte-stable
//    structured reports.
bool criterion_verdict_regression(std::string& detail) {
    std::ifstream in(kTestDir + "/fixtures/verdict_corpus.txt");
    if (!in) {
        detail = "missing fixtures/verdict_corpus.txt";
        return false;
    }
    InputContext ctx;
    std::string line;
    std::string all_reports;
    int n = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string ta, tb, expect_kind, expect_reason;
        ls >> ta >> tb >> expect_kind >> expect_reason;
        Mat2 a = parse_matrix(ta, ctx);
        Mat2 b = parse_matrix(tb, ctx);
        RunResult res = run(a, b);
        ++n;
        if (to_string(res.verdict.kind) != expect_kind) {
            detail = "verdict mismatch on corpus line " + std::to_string(n);
            return false;
        }
        std::string reason =
            res.verdict.reason == UnresolvedReason::None ? "-" : to_string(res.verdict.reason);
        if (reason != expect_reason) {
            detail = "reason mismatch on corpus line " + std::to_string(n);
            return false;
        }
        ReplayReport rr = verify_verdict(a, b, res.verdict, res.state);
        if (!rr.ok) {
            detail = "replay failed on corpus line " + std::to_string(n) + ": " + rr.detail;
            return false;
        }
        all_reports += "# corpus " + std::to_string(n) + "\n";
        all_reports += run_report(res, "rational", 256).print();
    }
    if (n < 20) {
        detail = "corpus has fewer than 20 pairs";
        return false;
    }
    std::string golden_path = kTestDir + "/golden/verdict_corpus.reports";
    if (std::getenv("UPDATE_GOLDEN")) {
        std::ofstream out(golden_path, std::ios::binary);
        out << all_reports;
    } else {
        std::ifstream gf(golden_path, std::ios::binary);
        if (!gf) {
            detail = "missing golden/verdict_corpus.reports";
            return false;
        }
        std::stringstream ss;
        ss << gf.rdbuf();
        if (ss.str() != all_reports) {
            detail = "structured reports differ from the golden corpus";
            return false;
        }
    }
    detail = std::to_string(n) + " pairs re-certified, reports byte-stable";
    return true;
}

// ---------------------------------------------------------------------------
// 7. Trace monotonicity across all recorded runs.
bool criterion_trace_monotonicity(std::string& detail) {
    std::size_t continue_steps = 0;
    for (const RecordedRun& rr : g_recorded) {
        const auto& visited = rr.result.state.visited;
        for (std::size_t i = 0; i + 1 < visited.size(); ++i) {
            ++continue_steps;
            Sign drop = sign(visited[i].trace_first - visited[i + 1].trace_first);
            if (!drop.is_positive()) {
                detail = "max trace did not strictly decrease on a Continue step";
                return false;
            }
        }
    }
    detail = std::to_string(continue_steps) + " Continue steps, all strictly decreasing";
    return continue_steps > 0;
}

// ---------------------------------------------------------------------------
// 8. Conjugation invariance: verdict and step kinds unchanged under 100
//    random exact conjugators.
bool criterion_conjugation_invariance(std::string& detail) {
    auto rng = make_rng(107);
    int checked = 0;
    for (int base = 0; base < 10; ++base) {
        auto [a, b] = rand_coherent_pair(rng);
        RunResult ref = run(a, b);
        for (int j = 0; j < 10; ++j) {
            auto [p, q, r, s] = rand_conjugator(rng);
            RunResult moved = run(conjugate(a, p, q, r, s), conjugate(b, p, q, r, s));
            ++checked;
            if (moved.verdict.kind != ref.verdict.kind ||
                moved.verdict.reason != ref.verdict.reason ||
                moved.state.step_kinds != ref.state.step_kinds) {
                detail = "conjugation changed the verdict or the step kinds";
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " conjugated runs match";
    return checked == 100;
}

// ---------------------------------------------------------------------------
// 9. Semialgebraic membership vs the brute-force atom evaluator on a 41x41
//    grid for 10 fixture formulas.
bool criterion_semialg_grid(std::string& detail) {
    struct Fixture {
        std::string doc;
        std::function<bool(const Rational&, const Rational&)> oracle;
    };
    using R = Rational;
    const std::vector<Fixture> fixtures = {
        {"(domain (vars x y) (< (+ (* x x) (* y y)) 1))",
         [](const R& x, const R& y) { return x * x + y * y < 1; }},
        {"(domain (vars x y) (<= (+ (* x x) (* y y)) 4))",
         [](const R& x, const R& y) { return x * x + y * y <= 4; }},
        {"(domain (vars x y) (and (> x 0) (> y 0) (< (* x y) 1)))",
         [](const R& x, const R& y) { return x > 0 && y > 0 && x * y < 1; }},
        {"(domain (vars x y) (or (= x y) (> (- x y) 1)))",
         [](const R& x, const R& y) { return x == y || x - y > 1; }},
        {"(domain (vars x y) (not (>= (+ x y) 0)))",
         [](const R& x, const R& y) { return !(x + y >= 0); }},
        {"(domain (vars x y) (!= (- (^ x 2) y) 0))",
         [](const R& x, const R& y) { return x * x != y; }},
        {"(domain (vars x y) (and (>= x -1) (<= x 1) (>= y -1) (<= y 1)))",
         [](const R& x, const R& y) { return x >= -1 && x <= 1 && y >= -1 && y <= 1; }},
        {"(domain (vars x y) (or (and (> x 0) (> y 0)) (and (< x 0) (< y 0))))",
         [](const R& x, const R& y) { return (x > 0 && y > 0) || (x < 0 && y < 0); }},
        {"(domain (vars x y) (> (- (* 4 (^ x 3)) (* 3 x)) y))",
         [](const R& x, const R& y) { return 4 * x * x * x - 3 * x > y; }},
        {"(domain (vars x y) (not (and (not (< x y)) (not (> x y)))))",
         [](const R& x, const R& y) { return !(!(x < y) && !(x > y)); }},
    };
    long grid_points = 0;
    for (const Fixture& fx : fixtures) {
        TraceParameterDomain dom = load_domain(fx.doc);
        for (long i = -20; i <= 20; ++i) {
            for (long j = -20; j <= 20; ++j) {
                Rational x = make_rational(i, 10), y = make_rational(j, 10);
                std::vector<Scalar> p{Scalar(x), Scalar(y)};
                ++grid_points;
                if (eval_membership(dom.formula, p) != fx.oracle(x, y)) {
                    detail = "mismatch for " + fx.doc + " at (" + to_string(x) + ", " +
                             to_string(y) + ")";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(fixtures.size()) + " formulas x " + std::to_string(grid_points / 10) +
             " grid points agree with the brute-force evaluator";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 negative-trace equivalence (>=1000 coherent pairs, exact)",
         criterion_theorem_equivalence},
        {"2 O(T) step bound (>=500 runs, T <= 100, steps <= 8T)", criterion_step_count},
        {"3 seminorm discipline SN(PQ) <= SN(P)SN(Q) along recorded runs", criterion_seminorm},
        {"4 elliptic orders vs power oracle, 32D^2 bound, Niven", criterion_elliptic_orders},
        {"5 bit-model obstruction (sign escalation + tr AB^-1 = 2 fixture)", criterion_bit_model},
        {"6 verdict regression corpus (replay + byte-stable reports)",
         criterion_verdict_regression},
        {"7 trace monotonicity on Continue steps", criterion_trace_monotonicity},
        {"8 conjugation invariance (100 conjugators)", criterion_conjugation_invariance},
        {"9 semialgebraic membership vs brute force (41x41 grid, 10 formulas)",
         criterion_semialg_grid},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << " [" << ms << " ms]"
                  << (detail.empty() ? "" : " -- " + detail) << "\n";
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
