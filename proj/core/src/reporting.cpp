#include "fuchsian/reporting.hpp"

namespace fuchsian {

Report run_report(const RunResult& res, const std::string& backend_label, unsigned max_precision,
                  std::optional<long> timing_ms) {
    Report rep;
    rep.put("command", "run-gm");
    rep.put("backend", backend_label);
    rep.put("verdict", to_string(res.verdict.kind));
    if (res.verdict.reason != UnresolvedReason::None)
        rep.put("reason", to_string(res.verdict.reason));
    if (!res.verdict.detail.empty()) rep.put("detail", res.verdict.detail);
    if (res.verdict.witness) {
        const Witness& w = *res.verdict.witness;
        rep.put("witness.kind", to_string(w.kind));
        rep.put("witness.word.first", w.word_first.str());
        if (w.kind != Witness::Kind::InfiniteOrderElliptic)
            rep.put("witness.word.second", w.word_second.str());
        rep.put("witness.certificate", w.certificate.str());
        rep.put("witness.nonelementary", w.nonelementary_certified);
    }
    const ReductionState& st = res.state;
    if (st.maximal_trace) rep.put("T", st.maximal_trace->str());
    if (st.budget > 0) rep.put("budget", static_cast<unsigned long>(st.budget));
    rep.put("steps", static_cast<unsigned long>(st.step_index()));
    InstrumentationReport ins = instrumentation_report(st, max_precision);
    rep.put("steps.linear", static_cast<unsigned long>(ins.linear_steps));
    rep.put("steps.fibonacci", static_cast<unsigned long>(ins.fibonacci_steps));
    if (ins.steps_per_trace) rep.put("steps_per_T", to_decimal_string(*ins.steps_per_trace, 4));
    if (st.first_elliptic_order)
        rep.put("d", static_cast<unsigned long>(*st.first_elliptic_order));
    for (std::size_t i = 0; i < st.visited.size(); ++i) {
        const StepRecord& r = st.visited[i];
        std::string p = "step." + std::to_string(i) + ".";
        if (r.produced_by) rep.put(p + "kind", to_string(*r.produced_by));
        rep.put(p + "trace.first", r.trace_first.str());
        rep.put(p + "trace.second", r.trace_second.str());
        if (r.trace_product_inverse)
            rep.put(p + "trace.product_inverse", r.trace_product_inverse->str());
        if (r.seminorm_first != 0) rep.put(p + "seminorm.first", r.seminorm_first.get_str());
        if (r.seminorm_second != 0) rep.put(p + "seminorm.second", r.seminorm_second.get_str());
        rep.put(p + "word.first", r.word_first.str());
        rep.put(p + "word.second", r.word_second.str());
    }
    if (!st.visited.empty()) {
        rep.put("max_seminorm", ins.max_seminorm.get_str());
        rep.put("seminorm_ok", ins.seminorm_discipline_ok);
        rep.put("trace_monotone", ins.trace_strictly_decreasing);
    }
    if (timing_ms) rep.put("timing_ms", *timing_ms);
    return rep;
}

}  // namespace fuchsian
