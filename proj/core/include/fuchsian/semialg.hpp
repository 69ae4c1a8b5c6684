#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuchsian/scalar.hpp"

namespace fuchsian {

// Multivariate polynomial with rational coefficients: a sum of terms
// coefficient * prod x_i^e_i, variables addressed by index.
class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(std::size_t index, std::size_t arity);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly pow(unsigned e) const;

    // Exact evaluation over an exact-backend point.
    Scalar eval(const std::vector<Scalar>& point) const;

    std::string str(const std::vector<std::string>& names) const;    // infix, for reports
    std::string sexpr(const std::vector<std::string>& names) const;  // prefix, re-parseable

private:
    // exponent vector (padded to arity) -> coefficient, zero coefficients
    // removed; canonical, so structural equality is semantic equality.
    std::map<std::vector<unsigned>, Rational> terms_;
    std::size_t arity_ = 0;
    void set_arity(std::size_t a);
    void insert(std::vector<unsigned> exps, const Rational& c);
};

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

std::string to_string(Relation r);
bool relation_holds(Relation r, int sign_of_difference);

// A semialgebraic formula: polynomial atoms compared against zero, combined
// with and / or / not.
class SAFormula {
public:
    static SAFormula atom(MultiPoly p, Relation rel);
    static SAFormula conjunction(std::vector<SAFormula> children);
    static SAFormula disjunction(std::vector<SAFormula> children);
    static SAFormula negation(SAFormula child);

    std::size_t arity() const;

    // Exact truth value at an exact point; throws on dimension mismatch or
    // an interval-backend scalar.
    bool eval(const std::vector<Scalar>& point) const;

    // Per-atom breakdown in evaluation order, for explanatory output.
    struct AtomResult {
        std::string text;
        bool holds;
    };
    bool eval_explained(const std::vector<Scalar>& point,
                        const std::vector<std::string>& names,
                        std::vector<AtomResult>& atoms) const;

    std::string str(const std::vector<std::string>& names) const;

    // Structural rewrite pushing every negation to the atoms (de Morgan);
    // the result has no Not nodes and the same truth table.
    SAFormula demorgan_normal() const;

private:
    struct Atom {
        MultiPoly poly;
        Relation rel;
    };
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        std::variant<Atom, std::vector<SAFormula>> payload;
        enum class Kind { Atom, And, Or, Not } kind;
    };
    NodePtr node_;
};

// A countable union evaluated to an explicit finite bound. Membership is
// one-sided: InUnion(i) is certified, NotInFirstN only says the first
// `bound` members all reject the point.
class SAFamily {
public:
    SAFamily(std::function<SAFormula(std::size_t)> member, std::size_t bound)
        : member_(std::move(member)), bound_(bound) {}

    struct Result {
        bool in_union;
        std::size_t index_or_bound;  // first satisfying index, or the bound
    };
    Result eval(const std::vector<Scalar>& point) const;

    std::size_t bound() const { return bound_; }

private:
    std::function<SAFormula(std::size_t)> member_;
    std::size_t bound_;
};

// A named system of trace-parameter constraints, loadable from the
// s-expression domain grammar.
struct TraceParameterDomain {
    std::vector<std::string> variables;
    SAFormula formula;
    std::string provenance;  // free-form note carried from the document
};

// Exact membership of a point in the set a formula carves out. The point
// dimension must cover every variable the formula mentions.
inline bool eval_membership(const SAFormula& f, const std::vector<Scalar>& point) {
    if (point.size() < f.arity())
        throw Error("point dimension does not match the formula");
    return f.eval(point);
}

inline SAFamily::Result eval_family(const SAFamily& fam, const std::vector<Scalar>& point) {
    return fam.eval(point);
}

// Parses a domain document:
//   (domain (vars x y z) [(note "...")] <formula>)
// with formulas (and ...), (or ...), (not f), (rel poly poly) for
// rel in {= != < <= > >=}, and polynomials built from rational literals,
// variables, (+ ...), (- a b), (- a), (* ...), (^ x k).
TraceParameterDomain load_domain(const std::string& document);

std::string print_domain(const TraceParameterDomain& d);

}  // namespace fuchsian
