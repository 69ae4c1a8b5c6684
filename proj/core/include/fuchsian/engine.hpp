#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fuchsian/element.hpp"
#include "fuchsian/word.hpp"

namespace fuchsian {

// Nielsen replacement flavors: (A,B) -> (AB^-1, B) keeps the new element in
// front (linear step); (A,B) -> (B, AB^-1) rotates it behind (Fibonacci
// step, which makes word lengths follow the Fibonacci recurrence).
enum class StepKind { Linear, Fibonacci };

std::string to_string(StepKind k);

// An ordered generating pair with the words expressing each element in the
// original input generators.
struct GeneratorPair {
    Mat2 first, second;
    FreeWord word_first, word_second;
};

enum class VerdictKind {
    DiscreteFree,
    NotDiscrete,
    NotDiscreteOrElementary,
    Unresolved,
};

enum class UnresolvedReason {
    None,
    ParabolicCase,
    EllipticCaseBeyondScope,
    OracleIndeterminate,
    StepBudgetExceeded,
    ElementaryInput,
};

std::string to_string(VerdictKind k);
std::string to_string(UnresolvedReason r);

// The certificate a definite verdict rests on. Words are in the input
// generators; evaluating them reproduces the matrices the claim is about.
struct Witness {
    enum class Kind { FinalStop, JorgensenViolation, InfiniteOrderElliptic };
    Kind kind;
    FreeWord word_first, word_second;  // the pair at the event
    Scalar certificate;                // tr AB^-1, the Jorgensen sum, or the elliptic trace
    bool nonelementary_certified = false;
};

std::string to_string(Witness::Kind k);

struct Verdict {
    VerdictKind kind;
    UnresolvedReason reason = UnresolvedReason::None;
    std::optional<Witness> witness;
    std::string detail;

    bool certified() const { return kind != VerdictKind::Unresolved; }
};

// One visited pair. Seminorms are max entry seminorms (exact backends; zero
// on the interval backend). product_bound_ok records that the polynomial
// arithmetic forming this pair respected SN(PQ) <= SN(P)SN(Q) entrywise.
struct StepRecord {
    std::optional<StepKind> produced_by;  // empty for the initial pair
    Scalar trace_first, trace_second;
    std::optional<Scalar> trace_product_inverse;  // tr AB^-1, once branched on
    BigInt seminorm_first, seminorm_second;
    bool product_bound_ok = true;
    FreeWord word_first, word_second;
};

struct StepBudget {
    unsigned constant = 8;                   // budget = constant * ceil(T)
    std::optional<unsigned> override_steps;  // use exactly this many steps instead
};

struct ReductionState {
    std::optional<GeneratorPair> pair;  // final oriented pair (absent if never oriented)
    std::vector<StepRecord> visited;
    std::vector<StepKind> step_kinds;
    std::optional<Scalar> maximal_trace;  // T
    unsigned budget = 0;
    std::optional<unsigned> first_elliptic_order;  // d

    unsigned step_index() const { return static_cast<unsigned>(step_kinds.size()); }
};

struct RunResult {
    Verdict verdict;
    ReductionState state;
};

// --- individual algorithm steps -------------------------------------------

enum class JorgensenResult { Pass, Violation };

// |tr^2 A - 4| + |tr[A,B] - 2|, and its test against 1. A violation
// certifies "not discrete or elementary". The standalone test rejects
// elementary pairs; inside the reduction loop elementarity is screened once
// up front (Nielsen replacements do not change the generated group).
Scalar jorgensen_sum(const Mat2& a, const Mat2& b);
JorgensenResult jorgensen_test(const Mat2& a, const Mat2& b, unsigned max_precision);

enum class BranchKind { Stop, Continue, ParabolicBoundary, EllipticProduct };

struct BranchOutcome {
    BranchKind kind;
    Mat2 product;  // AB^-1
    Scalar trace;  // tr AB^-1
};

// The four-way trace test on tr AB^-1: <= -2 stop (discrete and free);
// > 2 continue; = 2 parabolic boundary; inside (-2, 2) elliptic product.
// (-2 itself is claimed by the stop case.)
BranchOutcome branch(const GeneratorPair& pair, unsigned max_precision);

// Replacement pair and its step kind: descending trace order, ties toward
// Linear. The returned pair is coherently oriented (asserted exactly).
std::pair<GeneratorPair, StepKind> next_pair(const GeneratorPair& pair, unsigned max_precision);

// --- the full pipeline -----------------------------------------------------

// Elementarity screen, classification, axis configuration, orientation, then
// the Jorgensen-dovetailed reduction loop. Never emits an uncertified
// definite verdict: out-of-scope cases and oracle indeterminacy surface as
// Unresolved with a machine-readable reason. The full state is always
// returned.
RunResult run(const Mat2& a, const Mat2& b, const StepBudget& budget = {},
              unsigned max_precision = 256);

// --- instrumentation ---------------------------------------------------------

struct InstrumentationReport {
    unsigned steps = 0, linear_steps = 0, fibonacci_steps = 0;
    std::optional<Scalar> maximal_trace;
    std::optional<Rational> steps_per_trace;  // steps / T (T approximated if irrational)
    std::optional<unsigned> first_elliptic_order;
    BigInt max_seminorm;             // over all visited entries (exact backends)
    bool seminorm_discipline_ok = true;
    bool trace_strictly_decreasing = true;  // max trace along Continue steps
};

InstrumentationReport instrumentation_report(const ReductionState& state,
                                             unsigned max_precision = 256);

// --- independent re-certification -------------------------------------------

struct ReplayReport {
    bool ok = false;
    std::string detail;
};

// Replays the recorded step kinds from the original input and re-derives
// every claim the verdict rests on: loop preconditions at each visited pair,
// the stop condition for DiscreteFree, and the stored witness for
// NotDiscrete verdicts. Does not reuse the run loop's branching logic.
ReplayReport verify_verdict(const Mat2& a, const Mat2& b, const Verdict& verdict,
                            const ReductionState& state, unsigned max_precision = 256);

}  // namespace fuchsian
