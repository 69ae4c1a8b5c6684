// fuchsian: discreteness questions for two-generator subgroups of PSL(2,R)
// over exact rational, real algebraic, and dyadic-interval scalars.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuchsian/engine.hpp"
#include "fuchsian/input.hpp"
#include "fuchsian/reporting.hpp"
#include "fuchsian/semialg.hpp"
#include "fuchsian/svg.hpp"

namespace {

using namespace fuchsian;

constexpr int kExitCertified = 0;
constexpr int kExitUnresolved = 1;
constexpr int kExitInputError = 2;

struct GlobalOptions {
    std::string backend = "rational";
    std::string field_spec;
    unsigned max_precision = 256;
    unsigned budget_constant = 8;
    std::string format = "text";
    std::string render_dir;
    bool timing = false;
    bool verify = false;

    InputContext context() const {
        InputContext ctx;
        if (backend == "rational") ctx.backend = Backend::Rational;
        else if (backend == "algebraic") ctx.backend = Backend::Algebraic;
        else if (backend == "interval") ctx.backend = Backend::Interval;
        else throw Error("unknown backend '" + backend + "'");
        if (!field_spec.empty()) ctx.field = parse_field_spec(field_spec);
        if (ctx.backend == Backend::Algebraic && !ctx.field)
            throw Error("the algebraic backend needs --field \"[c0,...,cD];[lo,hi]\"");
        return ctx;
    }
};

void emit(const Report& rep, const GlobalOptions& opt) {
    if (opt.format == "structured") {
        std::cout << rep.print();
        return;
    }
    for (const auto& [k, v] : rep.fields()) std::cout << k << ": " << v << "\n";
}

std::string scalar_text(const Scalar& s) { return s.str(); }

// --- classify ---------------------------------------------------------------

int cmd_classify(const std::string& matrix_text, const GlobalOptions& opt) {
    InputContext ctx = opt.context();
    Mat2 m = parse_matrix(matrix_text, ctx);
    Report rep;
    rep.put("command", "classify");
    rep.put("backend", opt.backend);
    try {
        ElementClass cls = classify(m, opt.max_precision);
        rep.put("class", to_string(cls));
        rep.put("trace", scalar_text(m.trace()));
        if (cls == ElementClass::Hyperbolic || cls == ElementClass::Parabolic) {
            FixedPointSet fps = fixed_points(m, opt.max_precision);
            for (std::size_t i = 0; i < fps.points.size(); ++i)
                rep.put("fixed_point." + std::to_string(i), fps.points[i].str());
            if (fps.attractor_index)
                rep.put("attractor", std::to_string(*fps.attractor_index));
            if (cls == ElementClass::Hyperbolic)
                rep.put("axis", axis(m, opt.max_precision).str());
        }
        emit(rep, opt);
        return kExitCertified;
    } catch (const UnresolvedComparison& e) {
        rep.put("class", "Unresolved");
        rep.put("reason", e.what());
        emit(rep, opt);
        return kExitUnresolved;
    }
}

// --- run-gm -----------------------------------------------------------------

void render_run_steps(const Mat2& a, const Mat2& b, const ReductionState& st,
                      const GlobalOptions& opt) {
    namespace fs = std::filesystem;
    fs::create_directories(opt.render_dir);
    for (std::size_t i = 0; i < st.visited.size(); ++i) {
        const StepRecord& r = st.visited[i];
        Mat2 first = r.word_first.evaluate(a, b);
        Mat2 second = r.word_second.evaluate(a, b);
        std::vector<SceneItem> scene;
        scene.push_back(scene_geodesic(axis(first, opt.max_precision), "A"));
        scene.push_back(scene_geodesic(axis(second, opt.max_precision), "B"));
        Mat2 prod = first * second.inverse();
        if (classify(prod, opt.max_precision) == ElementClass::Hyperbolic)
            scene.push_back(scene_geodesic(axis(prod, opt.max_precision), "AB^-1"));
        char name[32];
        std::snprintf(name, sizeof name, "step_%03zu.svg", i);
        std::ofstream out(fs::path(opt.render_dir) / name, std::ios::binary);
        out << render_scene(scene);
    }
}

int run_gm_once(const std::string& a_text, const std::string& b_text, const GlobalOptions& opt,
                std::ostream& os, bool render_allowed) {
    InputContext ctx = opt.context();
    Mat2 a = parse_matrix(a_text, ctx);
    Mat2 b = parse_matrix(b_text, ctx);
    StepBudget budget;
    budget.constant = opt.budget_constant;
    auto t0 = std::chrono::steady_clock::now();
    RunResult res = run(a, b, budget, opt.max_precision);
    auto t1 = std::chrono::steady_clock::now();
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    Report rep = run_report(res, opt.backend, opt.max_precision,
                            opt.timing ? std::optional<long>(ms) : std::nullopt);
    if (opt.verify && res.verdict.certified()) {
        ReplayReport rr = verify_verdict(a, b, res.verdict, res.state, opt.max_precision);
        rep.put("replay.ok", rr.ok);
        rep.put("replay.detail", rr.detail);
    }
    if (render_allowed && !opt.render_dir.empty() && a.backend() != Backend::Interval)
        render_run_steps(a, b, res.state, opt);
    if (opt.format == "structured") {
        os << rep.print();
    } else {
        for (const auto& [k, v] : rep.fields()) os << k << ": " << v << "\n";
    }
    return res.verdict.certified() ? kExitCertified : kExitUnresolved;
}

int cmd_run_gm(const std::string& a_text, const std::string& b_text, const std::string& batch,
               const GlobalOptions& opt) {
    if (batch.empty()) return run_gm_once(a_text, b_text, opt, std::cout, true);

    std::ifstream in(batch);
    if (!in) throw Error("cannot open batch file '" + batch + "'");
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string ta, tb;
        if (!(ls >> ta >> tb))
            throw ParseError(lineno, "batch line needs two matrix literals");
        inputs.emplace_back(ta, tb);
    }
    // Parallel evaluation, deterministic output order.
    std::vector<std::future<std::pair<int, std::string>>> futures;
    for (const auto& [ta, tb] : inputs) {
        futures.push_back(std::async(std::launch::async, [ta, tb, &opt] {
            std::ostringstream os;
            int code = run_gm_once(ta, tb, opt, os, false);
            return std::make_pair(code, os.str());
        }));
    }
    int worst = kExitCertified;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        auto [code, text] = futures[i].get();
        std::cout << "# input " << i << "\n" << text;
        worst = std::max(worst, code);
    }
    return worst;
}

// --- bit-demo -----------------------------------------------------------------

int cmd_bit_demo(const std::string& value_text, const GlobalOptions& opt) {
    InputContext ctx;
    ctx.backend = Backend::Interval;
    Scalar v = parse_scalar(value_text, ctx);
    const DyadicOracle& oracle = v.as_oracle();
    Report rep;
    rep.put("command", "bit-demo");
    rep.put("value", value_text);
    rep.put("max_precision", static_cast<unsigned long>(opt.max_precision));
    Sign result = Sign::indeterminate(opt.max_precision);
    for (unsigned m = 1; m <= opt.max_precision; ++m) {
        Rational phi = oracle.query(m);
        bool certified = abs_of(phi) > pow2(-static_cast<long>(m));
        std::string p = "query." + std::to_string(m) + ".";
        rep.put(p + "phi", to_string(phi));
        rep.put(p + "certified", certified);
        if (certified) {
            result = phi > 0 ? Sign::positive() : Sign::negative();
            break;
        }
    }
    rep.put("sign", to_string(result.kind));
    if (!result.determinate())
        rep.put("precision_reached", static_cast<unsigned long>(opt.max_precision));
    emit(rep, opt);
    return result.determinate() ? kExitCertified : kExitUnresolved;
}

// --- sa-member ----------------------------------------------------------------

int cmd_sa_member(const std::string& domain_file, const std::vector<std::string>& coords,
                  const GlobalOptions& opt) {
    std::ifstream in(domain_file);
    if (!in) throw Error("cannot open domain file '" + domain_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    TraceParameterDomain dom = load_domain(buf.str());

    InputContext ctx = opt.context();
    if (ctx.backend == Backend::Interval)
        throw Error("membership evaluation requires an exact backend");
    if (coords.size() != dom.variables.size())
        throw Error("point dimension " + std::to_string(coords.size()) +
                    " does not match domain dimension " + std::to_string(dom.variables.size()));
    std::vector<Scalar> point;
    for (const auto& c : coords) point.push_back(parse_scalar(c, ctx));

    std::vector<SAFormula::AtomResult> atoms;
    bool member = dom.formula.eval_explained(point, dom.variables, atoms);

    Report rep;
    rep.put("command", "sa-member");
    rep.put("domain", domain_file);
    if (!dom.provenance.empty()) rep.put("note", dom.provenance);
    for (std::size_t i = 0; i < dom.variables.size(); ++i)
        rep.put("point." + dom.variables[i], scalar_text(point[i]));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        rep.put("atom." + std::to_string(i), atoms[i].text);
        rep.put("atom." + std::to_string(i) + ".holds", atoms[i].holds);
    }
    rep.put("member", member);
    emit(rep, opt);
    return kExitCertified;
}

// --- render -------------------------------------------------------------------

int cmd_render(const std::string& scene_file, const std::string& out_file,
               const GlobalOptions& opt) {
    std::ifstream in(scene_file);
    if (!in) throw Error("cannot open scene file '" + scene_file + "'");
    std::vector<SceneItem> items;
    std::string line;
    std::size_t lineno = 0;
    auto parse_endpoint = [](const std::string& tok) -> std::optional<Rational> {
        if (tok == "oo" || tok == "inf") return std::nullopt;
        InputContext rational_ctx;
        Scalar s = parse_scalar(tok, rational_ctx);
        return s.as_rational();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "geodesic") {
            std::string p, q, label;
            if (!(ls >> p >> q)) throw ParseError(lineno, "geodesic needs two endpoints");
            ls >> label;
            SceneItem item{SceneItem::Kind::Geodesic, parse_endpoint(p), parse_endpoint(q),
                           Rational(0), label};
            if (!item.x1 && !item.x2)
                throw ParseError(lineno, "geodesic cannot have two infinite endpoints");
            if (!item.x1 || (item.x2 && *item.x2 < *item.x1)) std::swap(item.x1, item.x2);
            items.push_back(std::move(item));
        } else if (kind == "point") {
            std::string x, y, label;
            if (!(ls >> x >> y)) throw ParseError(lineno, "point needs two coordinates");
            ls >> label;
            InputContext rational_ctx;
            items.push_back(scene_point(parse_scalar(x, rational_ctx).as_rational(),
                                        parse_scalar(y, rational_ctx).as_rational(), label));
        } else {
            throw ParseError(lineno, "unknown scene item '" + kind + "'");
        }
    }
    std::string svg = render_scene(items);
    if (out_file.empty() || out_file == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        out << svg;
    }
    return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gilman-Maskit reduction for two-generator subgroups of PSL(2,R)"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--backend", opt.backend, "Scalar backend: rational | algebraic | interval")
        ->envname("FUCHSIAN_BACKEND");
    app.add_option("--field", opt.field_spec,
                   "Number field \"[c0,...,cD];[lo,hi]\" for the algebraic backend");
    app.add_option("--max-precision", opt.max_precision,
                   "Interval backend precision budget (>= 8)")
        ->check(CLI::Range(8u, 1u << 20))
        ->envname("FUCHSIAN_MAX_PRECISION");
    app.add_option("--budget-constant", opt.budget_constant,
                   "Step budget constant c in ceil(c*T)")
        ->check(CLI::Range(1u, 1u << 20));
    app.add_option("--format", opt.format, "Output format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--render-dir", opt.render_dir, "Directory for per-step axis figures");
    app.add_flag("--timing", opt.timing, "Include timing in reports (breaks byte stability)");
    app.add_flag("--verify", opt.verify, "Re-certify definite verdicts by independent replay");

    std::string matrix_text, a_text, b_text, batch_file, value_text, domain_file, scene_file,
        out_file;
    std::vector<std::string> coords;

    CLI::App* classify_cmd = app.add_subcommand("classify", "Trace-classify one matrix");
    classify_cmd->add_option("matrix", matrix_text, "Matrix literal [[a,b],[c,d]]")->required();

    CLI::App* run_cmd = app.add_subcommand("run-gm", "Run the reduction on a generator pair");
    run_cmd->add_option("A", a_text, "First generator");
    run_cmd->add_option("B", b_text, "Second generator");
    run_cmd->add_option("--batch", batch_file, "File with one 'A B' pair per line");

    CLI::App* bit_cmd = app.add_subcommand("bit-demo", "Precision-escalation sign determination");
    bit_cmd->add_option("value", value_text, "Rational literal or sqrt(q)")->required();

    CLI::App* sa_cmd = app.add_subcommand("sa-member", "Semialgebraic domain membership");
    sa_cmd->add_option("--domain", domain_file, "Domain document file")->required();
    sa_cmd->add_option("point", coords, "Point coordinates (one scalar per variable)");

    CLI::App* render_cmd = app.add_subcommand("render", "Render a geodesic scene to SVG");
    render_cmd->add_option("--scene", scene_file, "Scene file")->required();
    render_cmd->add_option("-o,--output", out_file, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(matrix_text, opt);
        if (run_cmd->parsed()) {
            if (batch_file.empty() && (a_text.empty() || b_text.empty()))
                throw Error("run-gm needs two matrices or --batch FILE");
            return cmd_run_gm(a_text, b_text, batch_file, opt);
        }
        if (bit_cmd->parsed()) return cmd_bit_demo(value_text, opt);
        if (sa_cmd->parsed()) return cmd_sa_member(domain_file, coords, opt);
        if (render_cmd->parsed()) return cmd_render(scene_file, out_file, opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
