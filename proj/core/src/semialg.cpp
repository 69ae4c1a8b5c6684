#include "fuchsian/semialg.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsian {

void MultiPoly::set_arity(std::size_t a) {
    if (a <= arity_) return;
    std::map<std::vector<unsigned>, Rational> widened;
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> w = e;
        w.resize(a, 0);
        widened.emplace(std::move(w), c);
    }
    terms_ = std::move(widened);
    arity_ = a;
}

void MultiPoly::insert(std::vector<unsigned> exps, const Rational& c) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::move(exps), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(std::vector<unsigned>{}, c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t arity) {
    if (index >= arity) throw Error("variable index out of range");
    MultiPoly p;
    p.arity_ = arity;
    std::vector<unsigned> e(arity, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    out.set_arity(b.arity_);
    for (const auto& [e, c] : b.terms_) {
        std::vector<unsigned> w = e;
        w.resize(out.arity_, 0);
        out.insert(std::move(w), c);
    }
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    out.set_arity(std::max(a.arity_, b.arity_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<unsigned> e(out.arity_, 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.insert(std::move(e), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = MultiPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() < arity_) throw Error("point dimension does not match the formula");
    for (const auto& s : point)
        if (!s.exact()) throw Error("membership evaluation requires an exact backend");
    Scalar acc(0);
    if (!point.empty()) acc = acc.embedded_like(point[0]);
    for (const auto& [e, c] : terms_) {
        Scalar term = Scalar(c);
        if (!point.empty()) term = term.embedded_like(point[0]);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * point[i];
        acc = acc + term;
    }
    return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs_of(c);
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        if (!has_var || a != 1) os << to_string(a);
        bool printed = !has_var || a != 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            printed = true;
            os << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::string MultiPoly::sexpr(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto name = [&names](std::size_t i) {
        return i < names.size() ? names[i] : "x" + std::to_string(i);
    };
    std::vector<std::string> parts;
    for (const auto& [e, c] : terms_) {
        std::vector<std::string> factors;
        if (c != 1 || std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; }))
            factors.push_back(to_string(c));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1)
                factors.push_back(name(i));
            else
                factors.push_back("(^ " + name(i) + " " + std::to_string(e[i]) + ")");
        }
        if (factors.size() == 1) {
            parts.push_back(factors[0]);
        } else {
            std::string t = "(*";
            for (const auto& f : factors) t += " " + f;
            parts.push_back(t + ")");
        }
    }
    if (parts.size() == 1) return parts[0];
    std::string s = "(+";
    for (const auto& p : parts) s += " " + p;
    return s + ")";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Eq: return "=";
        case Relation::Ne: return "!=";
        case Relation::Lt: return "<";
        case Relation::Le: return "<=";
        case Relation::Gt: return ">";
        case Relation::Ge: return ">=";
    }
    return "?";
}

bool relation_holds(Relation r, int s) {
    switch (r) {
        case Relation::Eq: return s == 0;
        case Relation::Ne: return s != 0;
        case Relation::Lt: return s < 0;
        case Relation::Le: return s <= 0;
        case Relation::Gt: return s > 0;
        case Relation::Ge: return s >= 0;
    }
    return false;
}

SAFormula SAFormula::atom(MultiPoly p, Relation rel) {
    SAFormula f;
    f.node_ = std::make_shared<Node>(Node{Atom{std::move(p), rel}, Node::Kind::Atom});
    return f;
}

SAFormula SAFormula::conjunction(std::vector<SAFormula> children) {
    if (children.empty()) throw Error("empty conjunction");
    SAFormula f;
    f.node_ = std::make_shared<Node>(Node{std::move(children), Node::Kind::And});
    return f;
}

SAFormula SAFormula::disjunction(std::vector<SAFormula> children) {
    if (children.empty()) throw Error("empty disjunction");
    SAFormula f;
    f.node_ = std::make_shared<Node>(Node{std::move(children), Node::Kind::Or});
    return f;
}

SAFormula SAFormula::negation(SAFormula child) {
    SAFormula f;
    f.node_ = std::make_shared<Node>(Node{std::vector<SAFormula>{std::move(child)}, Node::Kind::Not});
    return f;
}

std::size_t SAFormula::arity() const {
    if (!node_) throw Error("empty formula");
    if (node_->kind == Node::Kind::Atom) return std::get<Atom>(node_->payload).poly.arity();
    std::size_t a = 0;
    for (const auto& c : std::get<std::vector<SAFormula>>(node_->payload))
        a = std::max(a, c.arity());
    return a;
}

bool SAFormula::eval(const std::vector<Scalar>& point) const {
    std::vector<AtomResult> ignored;
    return eval_explained(point, {}, ignored);
}

bool SAFormula::eval_explained(const std::vector<Scalar>& point,
                               const std::vector<std::string>& names,
                               std::vector<AtomResult>& atoms) const {
    if (!node_) throw Error("empty formula");
    switch (node_->kind) {
        case Node::Kind::Atom: {
            const Atom& at = std::get<Atom>(node_->payload);
            int s = sign(at.poly.eval(point)).value();
            bool holds = relation_holds(at.rel, s);
            atoms.push_back({at.poly.str(names) + " " + to_string(at.rel) + " 0", holds});
            return holds;
        }
        case Node::Kind::And: {
            bool all = true;
            for (const auto& c : std::get<std::vector<SAFormula>>(node_->payload))
                all = c.eval_explained(point, names, atoms) && all;
            return all;
        }
        case Node::Kind::Or: {
            bool any = false;
            for (const auto& c : std::get<std::vector<SAFormula>>(node_->payload))
                any = c.eval_explained(point, names, atoms) || any;
            return any;
        }
        case Node::Kind::Not:
            return !std::get<std::vector<SAFormula>>(node_->payload)[0].eval_explained(point, names,
                                                                                       atoms);
    }
    throw Error("unreachable");
}

std::string SAFormula::str(const std::vector<std::string>& names) const {
    if (!node_) throw Error("empty formula");
    switch (node_->kind) {
        case Node::Kind::Atom: {
            const Atom& at = std::get<Atom>(node_->payload);
            return "(" + to_string(at.rel) + " " + at.poly.sexpr(names) + " 0)";
        }
        case Node::Kind::And:
        case Node::Kind::Or: {
            std::string s = node_->kind == Node::Kind::And ? "(and" : "(or";
            for (const auto& c : std::get<std::vector<SAFormula>>(node_->payload))
                s += " " + c.str(names);
            return s + ")";
        }
        case Node::Kind::Not:
            return "(not " + std::get<std::vector<SAFormula>>(node_->payload)[0].str(names) + ")";
    }
    throw Error("unreachable");
}

namespace {

Relation negate_relation(Relation r) {
    switch (r) {
        case Relation::Eq: return Relation::Ne;
        case Relation::Ne: return Relation::Eq;
        case Relation::Lt: return Relation::Ge;
        case Relation::Le: return Relation::Gt;
        case Relation::Gt: return Relation::Le;
        case Relation::Ge: return Relation::Lt;
    }
    throw Error("unreachable");
}

}  // namespace

SAFormula SAFormula::demorgan_normal() const {
    struct Impl {
        static SAFormula walk(const SAFormula& f, bool negated) {
            const Node& n = *f.node_;
            switch (n.kind) {
                case Node::Kind::Atom: {
                    const Atom& at = std::get<Atom>(n.payload);
                    return SAFormula::atom(at.poly,
                                           negated ? negate_relation(at.rel) : at.rel);
                }
                case Node::Kind::Not:
                    return walk(std::get<std::vector<SAFormula>>(n.payload)[0], !negated);
                case Node::Kind::And:
                case Node::Kind::Or: {
                    std::vector<SAFormula> children;
                    for (const auto& c : std::get<std::vector<SAFormula>>(n.payload))
                        children.push_back(walk(c, negated));
                    bool conj = (n.kind == Node::Kind::And) != negated;
                    return conj ? SAFormula::conjunction(std::move(children))
                                : SAFormula::disjunction(std::move(children));
                }
            }
            throw Error("unreachable");
        }
    };
    if (!node_) throw Error("empty formula");
    return Impl::walk(*this, false);
}

SAFamily::Result SAFamily::eval(const std::vector<Scalar>& point) const {
    for (std::size_t i = 0; i < bound_; ++i)
        if (member_(i).eval(point)) return {true, i};
    return {false, bound_};
}

}  // namespace fuchsian
