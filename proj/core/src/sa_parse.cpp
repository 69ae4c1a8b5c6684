#include <cctype>

#include "fuchsian/semialg.hpp"

namespace fuchsian {

namespace {

// Minimal s-expression reader with position tracking.
struct SExpr {
    enum class Kind { List, Symbol, String } kind;
    std::vector<SExpr> items;  // List
    std::string text;          // Symbol / String
    std::size_t pos = 0;
};

struct Reader {
    const std::string& src;
    std::size_t i = 0;

    void skip_ws() {
        while (i < src.size()) {
            if (std::isspace(static_cast<unsigned char>(src[i]))) {
                ++i;
            } else if (src[i] == ';') {  // comment to end of line
                while (i < src.size() && src[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }

    SExpr read() {
        skip_ws();
        if (i >= src.size()) throw ParseError(i, "unexpected end of input");
        std::size_t at = i;
        if (src[i] == '(') {
            ++i;
            SExpr e{SExpr::Kind::List, {}, "", at};
            for (;;) {
                skip_ws();
                if (i >= src.size()) throw ParseError(at, "unterminated list");
                if (src[i] == ')') {
                    ++i;
                    return e;
                }
                e.items.push_back(read());
            }
        }
        if (src[i] == ')') throw ParseError(i, "unexpected ')'");
        if (src[i] == '"') {
            ++i;
            std::string s;
            while (i < src.size() && src[i] != '"') s += src[i++];
            if (i >= src.size()) throw ParseError(at, "unterminated string");
            ++i;
            return {SExpr::Kind::String, {}, s, at};
        }
        std::string s;
        while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) &&
               src[i] != '(' && src[i] != ')' && src[i] != ';')
            s += src[i++];
        return {SExpr::Kind::Symbol, {}, s, at};
    }
};

bool is_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t k = 0;
    if (s[0] == '-' || s[0] == '+') k = 1;
    if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    bool slash = false;
    for (; k < s.size(); ++k) {
        if (s[k] == '/' && !slash) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

struct DomainBuilder {
    std::vector<std::string> vars;

    std::size_t var_index(const SExpr& e) const {
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == e.text) return j;
        throw ParseError(e.pos, "unbound variable '" + e.text + "'");
    }

    MultiPoly poly(const SExpr& e) const {
        if (e.kind == SExpr::Kind::Symbol) {
            if (is_rational_literal(e.text)) return MultiPoly::constant(Rational(e.text));
            return MultiPoly::variable(var_index(e), vars.size());
        }
        if (e.kind != SExpr::Kind::List || e.items.empty())
            throw ParseError(e.pos, "expected a polynomial expression");
        const SExpr& op = e.items[0];
        if (op.kind != SExpr::Kind::Symbol) throw ParseError(op.pos, "expected an operator");
        std::size_t n = e.items.size() - 1;
        if (op.text == "+") {
            MultiPoly acc = MultiPoly::constant(0);
            for (std::size_t j = 1; j < e.items.size(); ++j) acc = acc + poly(e.items[j]);
            return acc;
        }
        if (op.text == "*") {
            MultiPoly acc = MultiPoly::constant(1);
            for (std::size_t j = 1; j < e.items.size(); ++j) acc = acc * poly(e.items[j]);
            return acc;
        }
        if (op.text == "-") {
            if (n == 1) return -poly(e.items[1]);
            if (n == 2) return poly(e.items[1]) - poly(e.items[2]);
            throw ParseError(e.pos, "'-' takes one or two arguments");
        }
        if (op.text == "^") {
            if (n != 2 || !is_rational_literal(e.items[2].text))
                throw ParseError(e.pos, "'^' takes a base and a nonnegative integer exponent");
            Rational k(e.items[2].text);
            if (k < 0 || k.get_den() != 1) throw ParseError(e.items[2].pos, "bad exponent");
            return poly(e.items[1]).pow(static_cast<unsigned>(k.get_num().get_ui()));
        }
        throw ParseError(op.pos, "unknown polynomial operator '" + op.text + "'");
    }

    SAFormula formula(const SExpr& e) const {
        if (e.kind != SExpr::Kind::List || e.items.empty())
            throw ParseError(e.pos, "expected a formula");
        const SExpr& op = e.items[0];
        if (op.kind != SExpr::Kind::Symbol) throw ParseError(op.pos, "expected a connective");
        if (op.text == "and" || op.text == "or") {
            std::vector<SAFormula> children;
            for (std::size_t j = 1; j < e.items.size(); ++j) children.push_back(formula(e.items[j]));
            if (children.empty()) throw ParseError(e.pos, "empty connective");
            return op.text == "and" ? SAFormula::conjunction(std::move(children))
                                    : SAFormula::disjunction(std::move(children));
        }
        if (op.text == "not") {
            if (e.items.size() != 2) throw ParseError(e.pos, "'not' takes one formula");
            return SAFormula::negation(formula(e.items[1]));
        }
        Relation rel;
        if (op.text == "=") rel = Relation::Eq;
        else if (op.text == "!=") rel = Relation::Ne;
        else if (op.text == "<") rel = Relation::Lt;
        else if (op.text == "<=") rel = Relation::Le;
        else if (op.text == ">") rel = Relation::Gt;
        else if (op.text == ">=") rel = Relation::Ge;
        else throw ParseError(op.pos, "unknown relation or connective '" + op.text + "'");
        if (e.items.size() == 2)  // (rel p): compare against 0
            return SAFormula::atom(poly(e.items[1]), rel);
        if (e.items.size() == 3)  // (rel p q): p - q compared against 0
            return SAFormula::atom(poly(e.items[1]) - poly(e.items[2]), rel);
        throw ParseError(e.pos, "a relation takes one or two polynomials");
    }
};

}  // namespace

TraceParameterDomain load_domain(const std::string& document) {
    Reader r{document};
    SExpr top = r.read();
    r.skip_ws();
    if (r.i < document.size()) throw ParseError(r.i, "trailing input after document");
    if (top.kind != SExpr::Kind::List || top.items.empty() ||
        top.items[0].kind != SExpr::Kind::Symbol || top.items[0].text != "domain")
        throw ParseError(top.pos, "expected (domain ...)");

    DomainBuilder b;
    std::string provenance;
    std::vector<const SExpr*> clauses;
    for (std::size_t j = 1; j < top.items.size(); ++j) clauses.push_back(&top.items[j]);
    if (clauses.empty()) throw ParseError(top.pos, "domain has no variable list");

    const SExpr& vars = *clauses[0];
    if (vars.kind != SExpr::Kind::List || vars.items.empty() ||
        vars.items[0].kind != SExpr::Kind::Symbol || vars.items[0].text != "vars")
        throw ParseError(vars.pos, "expected (vars ...) first");
    for (std::size_t j = 1; j < vars.items.size(); ++j) {
        if (vars.items[j].kind != SExpr::Kind::Symbol || is_rational_literal(vars.items[j].text))
            throw ParseError(vars.items[j].pos, "bad variable name");
        b.vars.push_back(vars.items[j].text);
    }
    if (b.vars.empty()) throw ParseError(vars.pos, "no variables declared");

    std::size_t k = 1;
    if (k < clauses.size() && clauses[k]->kind == SExpr::Kind::List && !clauses[k]->items.empty() &&
        clauses[k]->items[0].kind == SExpr::Kind::Symbol && clauses[k]->items[0].text == "note") {
        if (clauses[k]->items.size() == 2 && clauses[k]->items[1].kind == SExpr::Kind::String)
            provenance = clauses[k]->items[1].text;
        else
            throw ParseError(clauses[k]->pos, "(note \"...\") takes one string");
        ++k;
    }
    if (k >= clauses.size()) throw ParseError(top.pos, "domain has no formula");
    if (k + 1 != clauses.size()) throw ParseError(clauses[k + 1]->pos, "extra clauses after formula");

    return {b.vars, b.formula(*clauses[k]), provenance};
}

std::string print_domain(const TraceParameterDomain& d) {
    std::string s = "(domain (vars";
    for (const auto& v : d.variables) s += " " + v;
    s += ")";
    if (!d.provenance.empty()) s += " (note \"" + d.provenance + "\")";
    s += " " + d.formula.str(d.variables) + ")";
    return s;
}

}  // namespace fuchsian
