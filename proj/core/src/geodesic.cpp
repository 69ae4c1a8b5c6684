#include "fuchsian/geodesic.hpp"

#include "fuchsian/element.hpp"

namespace fuchsian {

std::string to_string(PairRelation r) {
    switch (r) {
        case PairRelation::Disjoint: return "Disjoint";
        case PairRelation::Intersecting: return "Intersecting";
        case PairRelation::SharedEndpoint: return "SharedEndpoint";
    }
    return "?";
}

std::string to_string(TripleKind k) {
    switch (k) {
        case TripleKind::BoundsRegion: return "BoundsRegion";
        case TripleKind::OneSeparates: return "OneSeparates";
        case TripleKind::Intersecting: return "Intersecting";
        case TripleKind::SharedEndpoint: return "SharedEndpoint";
    }
    return "?";
}

namespace {

// Membership of x in the open boundary arc cut off by g that does not
// contain infinity -- or, when g has an infinite endpoint, in the arc
// (finite endpoint, +infinity). Two chords of a circle cross iff exactly one
// endpoint of one lies in a chosen open arc of the other.
bool in_reference_arc(const Geodesic& g, const BoundaryPoint& x, unsigned max_precision) {
    if (g.first.is_infinity() || g.second.is_infinity()) {
        const BoundaryPoint& f = g.first.is_infinity() ? g.second : g.first;
        if (x.is_infinity()) return false;  // infinity is an endpoint of g here
        return compare(x, f, max_precision).is_positive();
    }
    if (x.is_infinity()) return false;
    Sign lo = compare(g.first, g.second, max_precision);
    const BoundaryPoint& a = lo.is_negative() ? g.first : g.second;
    const BoundaryPoint& b = lo.is_negative() ? g.second : g.first;
    return compare(x, a, max_precision).is_positive() &&
           compare(x, b, max_precision).is_negative();
}

}  // namespace

PairRelation relate(const Geodesic& g1, const Geodesic& g2, unsigned max_precision) {
    if (same_point(g1.first, g2.first, max_precision) ||
        same_point(g1.first, g2.second, max_precision) ||
        same_point(g1.second, g2.first, max_precision) ||
        same_point(g1.second, g2.second, max_precision))
        return PairRelation::SharedEndpoint;
    bool a = in_reference_arc(g1, g2.first, max_precision);
    bool b = in_reference_arc(g1, g2.second, max_precision);
    return a != b ? PairRelation::Intersecting : PairRelation::Disjoint;
}

bool separates(const Geodesic& g, const Geodesic& g1, const Geodesic& g2,
               unsigned max_precision) {
    if (relate(g, g1, max_precision) != PairRelation::Disjoint ||
        relate(g, g2, max_precision) != PairRelation::Disjoint ||
        relate(g1, g2, max_precision) != PairRelation::Disjoint)
        throw Error("separation is only defined for pairwise disjoint geodesics");
    // Disjointness puts both endpoints of g1 in one component, both of g2 in
    // one component; separation is "different components".
    return in_reference_arc(g, g1.first, max_precision) !=
           in_reference_arc(g, g2.first, max_precision);
}

TripleConfiguration triple_configuration(const Geodesic& a1, const Geodesic& a2,
                                         const Geodesic& a3, unsigned max_precision) {
    const Geodesic* g[3] = {&a1, &a2, &a3};
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& pr : pairs) {
        PairRelation r = relate(*g[pr[0]], *g[pr[1]], max_precision);
        if (r == PairRelation::Intersecting)
            return {TripleKind::Intersecting, pr[0], pr[1]};
        if (r == PairRelation::SharedEndpoint)
            return {TripleKind::SharedEndpoint, pr[0], pr[1]};
    }
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (separates(*g[i], *g[j], *g[k], max_precision))
            return {TripleKind::OneSeparates, i, -1};
    }
    return {TripleKind::BoundsRegion, -1, -1};
}

std::string to_string(ConsistencyReport::AlgebraicCase c) {
    using AC = ConsistencyReport::AlgebraicCase;
    switch (c) {
        case AC::BelowMinus2: return "BelowMinus2";
        case AC::AtMinus2: return "AtMinus2";
        case AC::Between: return "Between";
        case AC::AtPlus2: return "AtPlus2";
        case AC::AbovePlus2: return "AbovePlus2";
    }
    return "?";
}

ConsistencyReport geometric_trace_consistency(const Mat2& a, const Mat2& b,
                                              unsigned max_precision) {
    Scalar two = Scalar(2).embedded_like(a.a());
    auto checked = [max_precision](const Scalar& v, const char* what) {
        Sign s = sign(v, max_precision);
        if (!s.determinate()) throw UnresolvedComparison(s.precision_reached, what);
        return s;
    };
    if (checked(a.trace() - b.trace(), "trace order").is_negative())
        throw Error("requires tr A >= tr B");
    if (!checked(b.trace() - two, "tr B vs 2").is_positive()) throw Error("requires tr B > 2");
    if (!checked((a * b).trace() - two, "tr AB vs 2").is_positive())
        throw Error("requires coherent orientation (tr AB > 2)");
    Geodesic ax_a = axis(a, max_precision);
    Geodesic ax_b = axis(b, max_precision);
    if (relate(ax_a, ax_b, max_precision) != PairRelation::Disjoint)
        throw Error("requires disjoint axes");

    Mat2 c = a * b.inverse();
    Scalar t = c.trace();
    Sign hi = checked(t - two, "tr AB^-1 vs 2");
    Sign lo = checked(t + two, "tr AB^-1 vs -2");
    using AC = ConsistencyReport::AlgebraicCase;
    AC ac = lo.is_negative()   ? AC::BelowMinus2
            : lo.is_zero()     ? AC::AtMinus2
            : hi.is_positive() ? AC::AbovePlus2
            : hi.is_zero()     ? AC::AtPlus2
                               : AC::Between;

    ConsistencyReport rep{ac, std::nullopt, false, t};
    bool bounds = false, separates_one = false;
    if (ac == AC::BelowMinus2 || ac == AC::AbovePlus2) {
        TripleConfiguration cfg =
            triple_configuration(ax_a, ax_b, axis(c, max_precision), max_precision);
        rep.geometric = cfg;
        bounds = cfg.kind == TripleKind::BoundsRegion;
        separates_one = cfg.kind == TripleKind::OneSeparates;
    }
    rep.agree = ((ac == AC::BelowMinus2) == bounds) && ((ac == AC::AbovePlus2) == separates_one);
    return rep;
}

}  // namespace fuchsian
