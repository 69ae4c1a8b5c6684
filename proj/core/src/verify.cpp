#include "fuchsian/engine.hpp"

namespace fuchsian {

namespace {

struct Fail {
    std::string why;
};

Sign need_sign(const Scalar& v, unsigned max_precision, const char* what) {
    Sign s = sign(v, max_precision);
    if (!s.determinate()) throw Fail{std::string("sign of ") + what + " unresolved"};
    return s;
}

void require(bool cond, const std::string& why) {
    if (!cond) throw Fail{why};
}

// Loop preconditions at a visited pair: trace order, hyperbolicity, coherent
// orientation, disjoint axes, and Jorgensen's inequality.
void check_pair_preconditions(const GeneratorPair& p, unsigned mp) {
    Scalar two = Scalar(2).embedded_like(p.first.a());
    require(need_sign(p.second.trace() - two, mp, "tr B - 2").is_positive(), "tr B <= 2");
    require(!need_sign(p.first.trace() - p.second.trace(), mp, "trace order").is_negative(),
            "pair not trace-ordered");
    require(need_sign((p.first * p.second).trace() - two, mp, "tr AB - 2").is_positive(),
            "pair not coherently oriented");
    require(relate(axis(p.first, mp), axis(p.second, mp), mp) == PairRelation::Disjoint,
            "axes not disjoint");
    Scalar one = Scalar(1).embedded_like(p.first.a());
    require(!need_sign(jorgensen_sum(p.first, p.second) - one, mp, "Jorgensen sum").is_negative(),
            "Jorgensen inequality failed along the accepted trace");
}

}  // namespace

ReplayReport verify_verdict(const Mat2& a_in, const Mat2& b_in, const Verdict& verdict,
                            const ReductionState& state, unsigned max_precision) {
    const unsigned mp = max_precision;
    try {
        PSLElement pa(a_in, mp);
        PSLElement pb(b_in, mp);
        const Mat2& a = pa.matrix();
        const Mat2& b = pb.matrix();

        switch (verdict.kind) {
            case VerdictKind::Unresolved: {
                switch (verdict.reason) {
                    case UnresolvedReason::ElementaryInput:
                        require(is_elementary_pair(a, b, mp), "pair is not elementary");
                        return {true, "elementary input re-certified"};
                    case UnresolvedReason::ParabolicCase: {
                        if (pa.element_class() == ElementClass::Parabolic ||
                            pb.element_class() == ElementClass::Parabolic)
                            return {true, "parabolic generator re-certified"};
                        // Otherwise the loop must have reached tr AB^-1 = 2;
                        // replay to the recorded final pair and test exactly.
                        require(state.pair.has_value(), "no final pair recorded");
                        Mat2 c = state.pair->first * state.pair->second.inverse();
                        Scalar two = Scalar(2).embedded_like(c.a());
                        require(need_sign(c.trace() - two, mp, "tr AB^-1 - 2").is_zero(),
                                "tr AB^-1 is not exactly 2");
                        return {true, "parabolic boundary re-certified"};
                    }
                    default:
                        // Out-of-scope configurations, oracle indeterminacy and
                        // budget trips carry no mathematical claim to certify.
                        return {true, "diagnostic verdict; nothing to certify"};
                }
            }

            case VerdictKind::DiscreteFree: {
                // Rebuild the orientation deterministically, then replay the
                // recorded step kinds only.
                OrientedPair op = coherently_orient(a, b, mp);
                GeneratorPair pair{op.first, op.second, FreeWord::generator_a(),
                                   FreeWord::generator_b()};
                if (op.swapped) std::swap(pair.word_first, pair.word_second);
                if (op.second_inverted) pair.word_second = pair.word_second.inverse();

                for (StepKind k : state.step_kinds) {
                    check_pair_preconditions(pair, mp);
                    Mat2 product = pair.first * pair.second.inverse();
                    Scalar two = Scalar(2).embedded_like(product.a());
                    require(need_sign(product.trace() - two, mp, "tr AB^-1 - 2").is_positive(),
                            "recorded Continue step without tr AB^-1 > 2");
                    FreeWord wp = pair.word_first * pair.word_second.inverse();
                    Sign ord = need_sign(product.trace() - pair.second.trace(), mp, "step order");
                    StepKind expect = !ord.is_negative() ? StepKind::Linear : StepKind::Fibonacci;
                    require(expect == k, "recorded step kind contradicts the trace order");
                    if (k == StepKind::Linear)
                        pair = {product, pair.second, wp, pair.word_second};
                    else
                        pair = {pair.second, product, pair.word_second, wp};
                }
                check_pair_preconditions(pair, mp);

                // Stop condition, exactly.
                Mat2 c = pair.first * pair.second.inverse();
                Scalar two = Scalar(2).embedded_like(c.a());
                require(!need_sign(c.trace() + two, mp, "tr AB^-1 + 2").is_positive(),
                        "stop condition tr AB^-1 <= -2 fails");

                // The word ledger must reproduce the final matrices.
                require(state.pair.has_value(), "no final pair recorded");
                Mat2 wa = state.pair->word_first.evaluate(a, b);
                Mat2 wb = state.pair->word_second.evaluate(a, b);
                if (a.backend() != Backend::Interval) {
                    require(is_zero(wa.a() - pair.first.a()) && is_zero(wa.b() - pair.first.b()) &&
                                is_zero(wa.c() - pair.first.c()) &&
                                is_zero(wa.d() - pair.first.d()),
                            "word ledger does not reproduce the first element");
                    require(is_zero(wb.a() - pair.second.a()) &&
                                is_zero(wb.b() - pair.second.b()) &&
                                is_zero(wb.c() - pair.second.c()) &&
                                is_zero(wb.d() - pair.second.d()),
                            "word ledger does not reproduce the second element");
                }
                return {true, "DiscreteFree re-certified: replayed " +
                                  std::to_string(state.step_kinds.size()) +
                                  " steps, all preconditions hold, final tr AB^-1 <= -2"};
            }

            case VerdictKind::NotDiscrete:
            case VerdictKind::NotDiscreteOrElementary: {
                require(verdict.witness.has_value(), "missing witness");
                const Witness& w = *verdict.witness;
                if (w.kind == Witness::Kind::JorgensenViolation) {
                    Mat2 m1 = w.word_first.evaluate(a, b);
                    Mat2 m2 = w.word_second.evaluate(a, b);
                    Scalar one = Scalar(1).embedded_like(m1.a());
                    require(need_sign(jorgensen_sum(m1, m2) - one, mp, "Jorgensen sum")
                                .is_negative(),
                            "witness pair does not violate Jorgensen's inequality");
                    if (verdict.kind == VerdictKind::NotDiscrete)
                        require(!is_elementary_pair(m1, m2, mp),
                                "witness pair is elementary; violation certifies nothing");
                    return {true, "Jorgensen violation re-certified from witness words"};
                }
                if (w.kind == Witness::Kind::InfiniteOrderElliptic) {
                    require(verdict.kind == VerdictKind::NotDiscrete,
                            "elliptic witness must certify NotDiscrete");
                    Mat2 e = w.word_first.evaluate(a, b);
                    require(classify(e, mp) == ElementClass::Elliptic, "witness is not elliptic");
                    unsigned deg = 1;
                    if (e.backend() == Backend::Algebraic)
                        deg = e.a().as_algebraic().field()->degree();
                    EllipticOrder ord = elliptic_order(e, deg);
                    require(ord.kind == EllipticOrder::Kind::Infinite,
                            "witness elliptic has finite order");
                    return {true, "infinite-order elliptic re-certified from witness word"};
                }
                return {false, "unexpected witness kind for a non-discreteness verdict"};
            }
        }
        return {false, "unknown verdict kind"};
    } catch (const Fail& f) {
        return {false, f.why};
    } catch (const Error& e) {
        return {false, std::string("replay error: ") + e.what()};
    }
}

}  // namespace fuchsian
