#include "fuchsian/engine.hpp"

namespace fuchsian {

std::string to_string(StepKind k) { return k == StepKind::Linear ? "Linear" : "Fibonacci"; }

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::DiscreteFree: return "DiscreteFree";
        case VerdictKind::NotDiscrete: return "NotDiscrete";
        case VerdictKind::NotDiscreteOrElementary: return "NotDiscreteOrElementary";
        case VerdictKind::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string to_string(UnresolvedReason r) {
    switch (r) {
        case UnresolvedReason::None: return "None";
        case UnresolvedReason::ParabolicCase: return "ParabolicCase";
        case UnresolvedReason::EllipticCaseBeyondScope: return "EllipticCaseBeyondScope";
        case UnresolvedReason::OracleIndeterminate: return "OracleIndeterminate";
        case UnresolvedReason::StepBudgetExceeded: return "StepBudgetExceeded";
        case UnresolvedReason::ElementaryInput: return "ElementaryInput";
    }
    return "?";
}

std::string to_string(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::FinalStop: return "FinalStop";
        case Witness::Kind::JorgensenViolation: return "JorgensenViolation";
        case Witness::Kind::InfiniteOrderElliptic: return "InfiniteOrderElliptic";
    }
    return "?";
}

namespace {

Sign checked_sign(const Scalar& v, unsigned max_precision, const char* what) {
    Sign s = sign(v, max_precision);
    if (!s.determinate()) throw UnresolvedComparison(s.precision_reached, what);
    return s;
}

unsigned field_degree_of(const Mat2& m) {
    if (m.backend() == Backend::Algebraic) return m.a().as_algebraic().field()->degree();
    return 1;
}

BigInt entry_seminorm(const Scalar& s) {
    return s.exact() ? seminorm(s) : BigInt(0);
}

BigInt max_entry_seminorm(const Mat2& m) {
    BigInt sn = entry_seminorm(m.a());
    for (const Scalar* e : {&m.b(), &m.c(), &m.d()}) sn = std::max(sn, entry_seminorm(*e));
    return sn;
}

// The size law SN(AB) <= SN(A)SN(B), checked on every scalar product and
// sum that forms an entry of F * G.
bool product_seminorm_ok(const Mat2& f, const Mat2& g) {
    if (f.backend() == Backend::Interval) return true;
    const Scalar* fe[4] = {&f.a(), &f.b(), &f.c(), &f.d()};
    const Scalar* ge[4] = {&g.a(), &g.b(), &g.c(), &g.d()};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Scalar& p1 = *fe[2 * i];
            const Scalar& q1 = *ge[j];
            const Scalar& p2 = *fe[2 * i + 1];
            const Scalar& q2 = *ge[2 + j];
            Scalar m1 = p1 * q1, m2 = p2 * q2;
            if (seminorm(m1) > seminorm(p1) * seminorm(q1)) return false;
            if (seminorm(m2) > seminorm(p2) * seminorm(q2)) return false;
            if (seminorm(m1 + m2) > seminorm(m1) * seminorm(m2)) return false;
        }
    }
    return true;
}

StepRecord make_record(const GeneratorPair& pair, std::optional<StepKind> produced_by,
                       bool bound_ok) {
    StepRecord rec;
    rec.produced_by = produced_by;
    rec.trace_first = pair.first.trace();
    rec.trace_second = pair.second.trace();
    rec.seminorm_first = max_entry_seminorm(pair.first);
    rec.seminorm_second = max_entry_seminorm(pair.second);
    rec.product_bound_ok = bound_ok;
    rec.word_first = pair.word_first;
    rec.word_second = pair.word_second;
    return rec;
}

}  // namespace

Scalar jorgensen_sum(const Mat2& a, const Mat2& b) {
    Scalar ta = a.trace();
    Scalar four = Scalar(4).embedded_like(ta);
    Scalar two = Scalar(2).embedded_like(ta);
    // Absolute values are pointwise on every backend; 256 is a dummy budget
    // for the exact ones.
    return abs(ta * ta - four, 256) + abs(commutator(a, b).trace() - two, 256);
}

JorgensenResult jorgensen_test(const Mat2& a, const Mat2& b, unsigned max_precision) {
    if (is_elementary_pair(a, b, max_precision))
        throw Error("Jorgensen test requires a non-elementary pair");
    Scalar one = Scalar(1).embedded_like(a.a());
    Sign s = checked_sign(jorgensen_sum(a, b) - one, max_precision, "Jorgensen sum vs 1");
    return s.is_negative() ? JorgensenResult::Violation : JorgensenResult::Pass;
}

BranchOutcome branch(const GeneratorPair& pair, unsigned max_precision) {
    Mat2 product = pair.first * pair.second.inverse();
    Scalar t = product.trace();
    Scalar two = Scalar(2).embedded_like(t);
    Sign lo = checked_sign(t + two, max_precision, "tr AB^-1 vs -2");
    if (!lo.is_positive()) return {BranchKind::Stop, product, t};
    Sign hi = checked_sign(t - two, max_precision, "tr AB^-1 vs 2");
    if (hi.is_positive()) return {BranchKind::Continue, product, t};
    if (hi.is_zero()) return {BranchKind::ParabolicBoundary, product, t};
    return {BranchKind::EllipticProduct, product, t};
}

std::pair<GeneratorPair, StepKind> next_pair(const GeneratorPair& pair, unsigned max_precision) {
    Mat2 product = pair.first * pair.second.inverse();
    FreeWord word_product = pair.word_first * pair.word_second.inverse();
    Sign ord = checked_sign(product.trace() - pair.second.trace(), max_precision,
                            "replacement trace order");
    bool linear = !ord.is_negative();  // ties toward Linear
    GeneratorPair next =
        linear ? GeneratorPair{product, pair.second, word_product, pair.word_second}
               : GeneratorPair{pair.second, product, pair.word_second, word_product};
    StepKind kind = linear ? StepKind::Linear : StepKind::Fibonacci;
    // tr(first * second) equals tr A or tr BAB^-1, both > 2 here; assert it.
    Scalar two = Scalar(2).embedded_like(next.first.a());
    Sign coherent = checked_sign((next.first * next.second).trace() - two, max_precision,
                                 "replacement orientation");
    if (!coherent.is_positive())
        throw Error("replacement pair lost coherent orientation");
    return {std::move(next), kind};
}

RunResult run(const Mat2& a_in, const Mat2& b_in, const StepBudget& budget,
              unsigned max_precision) {
    ReductionState state;
    auto unresolved = [&state](UnresolvedReason reason, std::string detail) {
        return RunResult{Verdict{VerdictKind::Unresolved, reason, std::nullopt, std::move(detail)},
                         std::move(state)};
    };

    try {
        bool exact = a_in.backend() != Backend::Interval;
        if (exact && (a_in.is_identity_up_to_sign() || b_in.is_identity_up_to_sign()))
            throw Error("generators must differ from +-I");

        // Trace-positive pullbacks.
        PSLElement pa(a_in, max_precision);
        PSLElement pb(b_in, max_precision);
        const Mat2& a = pa.matrix();
        const Mat2& b = pb.matrix();

        // Elementarity screen. The reduction loop preserves the generated
        // group, so one screen up front covers every later pair. On the
        // interval backend the screen may stay open; the verdict lattice
        // keeps track of that.
        bool nonelementary_certified = false;
        std::optional<bool> elementary;
        try {
            elementary = is_elementary_pair(a, b, max_precision);
        } catch (const UnresolvedComparison&) {
            if (exact) throw;
        }
        if (elementary.has_value() && *elementary)
            return unresolved(UnresolvedReason::ElementaryInput,
                              "generators share a fixed point (tr[A,B] = 2)");
        nonelementary_certified = elementary.has_value();

        // Only the hyperbolic-hyperbolic case is in scope.
        ElementClass ca = pa.element_class();
        ElementClass cb = pb.element_class();
        if (ca == ElementClass::Parabolic || cb == ElementClass::Parabolic)
            return unresolved(UnresolvedReason::ParabolicCase,
                              "a generator is parabolic; parabolic case analysis not implemented");
        if (ca != ElementClass::Hyperbolic || cb != ElementClass::Hyperbolic)
            return unresolved(UnresolvedReason::EllipticCaseBeyondScope,
                              "a generator is elliptic; elliptic case analysis not implemented");

        PairRelation axes = relate(axis(a, max_precision), axis(b, max_precision), max_precision);
        if (axes != PairRelation::Disjoint)
            return unresolved(UnresolvedReason::EllipticCaseBeyondScope,
                              "axes configuration " + to_string(axes) + " is not implemented");
        // Disjoint hyperbolic axes certify a non-elementary pair even when
        // the commutator screen stayed open.
        nonelementary_certified = true;

        state.maximal_trace = maximal_initial_trace(a, b, max_precision);
        if (budget.override_steps) {
            state.budget = *budget.override_steps;
        } else {
            BigInt steps = ceil_upper_bound(*state.maximal_trace *
                                            Scalar(static_cast<long>(budget.constant)));
            state.budget = steps.fits_uint_p() ? static_cast<unsigned>(steps.get_ui()) : ~0u;
        }

        OrientedPair op = coherently_orient(a, b, max_precision);
        GeneratorPair pair{op.first, op.second, FreeWord::generator_a(), FreeWord::generator_b()};
        if (op.swapped) std::swap(pair.word_first, pair.word_second);
        if (op.second_inverted) pair.word_second = pair.word_second.inverse();

        state.visited.push_back(make_record(pair, std::nullopt, true));

        for (;;) {
            if (state.step_index() >= state.budget) {
                state.pair = pair;
                return unresolved(UnresolvedReason::StepBudgetExceeded,
                                  "no verdict within " + std::to_string(state.budget) +
                                      " steps (budget constant " +
                                      std::to_string(budget.constant) + ")");
            }

            // Jorgensen's inequality, dovetailed with the trace branching.
            Scalar one = Scalar(1).embedded_like(pair.first.a());
            Scalar jsum = jorgensen_sum(pair.first, pair.second);
            if (checked_sign(jsum - one, max_precision, "Jorgensen sum vs 1").is_negative()) {
                Witness w{Witness::Kind::JorgensenViolation, pair.word_first, pair.word_second,
                          jsum, nonelementary_certified};
                state.pair = pair;
                VerdictKind kind = nonelementary_certified ? VerdictKind::NotDiscrete
                                                           : VerdictKind::NotDiscreteOrElementary;
                return {Verdict{kind, UnresolvedReason::None, w,
                                "Jorgensen's inequality violated at pair (" +
                                    pair.word_first.str() + ", " + pair.word_second.str() + ")"},
                        std::move(state)};
            }

            BranchOutcome out = branch(pair, max_precision);
            state.visited.back().trace_product_inverse = out.trace;

            switch (out.kind) {
                case BranchKind::Stop: {
                    Witness w{Witness::Kind::FinalStop, pair.word_first, pair.word_second,
                              out.trace, nonelementary_certified};
                    state.pair = pair;
                    return {Verdict{VerdictKind::DiscreteFree, UnresolvedReason::None, w,
                                    "tr AB^-1 <= -2 at step " + std::to_string(state.step_index())},
                            std::move(state)};
                }
                case BranchKind::ParabolicBoundary: {
                    state.pair = pair;
                    return unresolved(UnresolvedReason::ParabolicCase,
                                      "tr AB^-1 = 2; parabolic case analysis not implemented");
                }
                case BranchKind::EllipticProduct: {
                    state.pair = pair;
                    if (!exact)
                        return unresolved(UnresolvedReason::OracleIndeterminate,
                                          "elliptic order is not decidable on the interval backend");
                    EllipticOrder ord = elliptic_order(out.product, field_degree_of(out.product));
                    if (ord.kind == EllipticOrder::Kind::Infinite) {
                        Witness w{Witness::Kind::InfiniteOrderElliptic,
                                  pair.word_first * pair.word_second.inverse(), FreeWord{},
                                  out.trace, nonelementary_certified};
                        return {Verdict{VerdictKind::NotDiscrete, UnresolvedReason::None, w,
                                        "AB^-1 is an elliptic of infinite order"},
                                std::move(state)};
                    }
                    if (!state.first_elliptic_order) state.first_elliptic_order = ord.order;
                    return unresolved(UnresolvedReason::EllipticCaseBeyondScope,
                                      "AB^-1 is elliptic of finite order " +
                                          std::to_string(ord.order) +
                                          "; elliptic case analysis not implemented");
                }
                case BranchKind::Continue: {
                    auto [next, kind] = next_pair(pair, max_precision);
                    PairRelation next_axes = relate(axis(next.first, max_precision),
                                                    axis(next.second, max_precision),
                                                    max_precision);
                    if (next_axes != PairRelation::Disjoint) {
                        state.pair = next;
                        return unresolved(UnresolvedReason::EllipticCaseBeyondScope,
                                          "replacement pair axes configuration " +
                                              to_string(next_axes) + " is not implemented");
                    }
                    bool bound_ok = product_seminorm_ok(pair.first, pair.second.inverse());
                    state.step_kinds.push_back(kind);
                    state.visited.push_back(make_record(next, kind, bound_ok));
                    pair = std::move(next);
                    break;
                }
            }
        }
    } catch (const UnresolvedComparison& e) {
        return unresolved(UnresolvedReason::OracleIndeterminate, e.what());
    }
}

InstrumentationReport instrumentation_report(const ReductionState& state,
                                             unsigned max_precision) {
    InstrumentationReport rep;
    rep.steps = state.step_index();
    for (StepKind k : state.step_kinds)
        (k == StepKind::Linear ? rep.linear_steps : rep.fibonacci_steps)++;
    rep.maximal_trace = state.maximal_trace;
    rep.first_elliptic_order = state.first_elliptic_order;
    if (state.maximal_trace) {
        Rational t = approximate(*state.maximal_trace, 20);
        if (t > 0) rep.steps_per_trace = Rational(static_cast<long>(rep.steps)) / t;
    }
    rep.max_seminorm = 0;
    for (const StepRecord& r : state.visited) {
        rep.max_seminorm = std::max({rep.max_seminorm, r.seminorm_first, r.seminorm_second});
        if (!r.product_bound_ok) rep.seminorm_discipline_ok = false;
    }
    for (std::size_t i = 0; i + 1 < state.visited.size(); ++i) {
        // Pairs are trace-ordered, so trace_first is the pair maximum.
        Scalar drop = state.visited[i].trace_first - state.visited[i + 1].trace_first;
        Sign s = sign(drop, max_precision);
        if (!s.determinate() || !s.is_positive()) rep.trace_strictly_decreasing = false;
    }
    return rep;
}

}  // namespace fuchsian
