#pragma once

#include <string>

#include "fuchsian/boundary.hpp"

namespace fuchsian {

// A complete geodesic of the upper half plane, named by its two distinct
// boundary endpoints. Orientation (toward the attractor of the element whose
// axis this is) is carried as "second endpoint is forward" when oriented.
struct Geodesic {
    BoundaryPoint first, second;
    bool oriented = false;  // when true, `second` is the forward endpoint

    std::string str() const {
        return "(" + first.str() + ", " + second.str() + ")" + (oriented ? " ->" : "");
    }
};

enum class PairRelation { Disjoint, Intersecting, SharedEndpoint };

enum class TripleKind { BoundsRegion, OneSeparates, Intersecting, SharedEndpoint };

struct TripleConfiguration {
    TripleKind kind;
    // OneSeparates: which axis separates. Intersecting/SharedEndpoint: the
    // offending pair (i, j).
    int which = -1;
    int other = -1;
};

std::string to_string(PairRelation r);
std::string to_string(TripleKind k);

// Relation of two geodesics from the cyclic order of their endpoints on the
// boundary circle (reals ascending, infinity as the wrap point): interleaved
// endpoints intersect, nested or separated endpoints are disjoint.
PairRelation relate(const Geodesic& g1, const Geodesic& g2, unsigned max_precision);

inline bool disjoint(const Geodesic& g1, const Geodesic& g2, unsigned max_precision) {
    return relate(g1, g2, max_precision) == PairRelation::Disjoint;
}

// True iff g1 and g2 lie in different components of H^2 minus g.
// Requires the three geodesics to be pairwise disjoint.
bool separates(const Geodesic& g, const Geodesic& g1, const Geodesic& g2, unsigned max_precision);

// Joint configuration of three geodesics; pairs are inspected in the order
// (1,2), (1,3), (2,3) and the first non-disjoint pair is reported.
TripleConfiguration triple_configuration(const Geodesic& a1, const Geodesic& a2,
                                         const Geodesic& a3, unsigned max_precision);

// Both sides of the negative-trace equivalence for a coherently oriented
// hyperbolic pair with tr A >= tr B > 2, tr AB > 2 and disjoint axes:
//   tr AB^-1 < -2  <=>  the axes of A, B, AB^-1 bound a region
//   tr AB^-1 >  2  <=>  one of those axes separates the other two
// The report carries the algebraic case, the computed configuration and
// whether the two sides agree.
struct ConsistencyReport {
    enum class AlgebraicCase { BelowMinus2, AtMinus2, Between, AtPlus2, AbovePlus2 };
    AlgebraicCase algebraic;
    std::optional<TripleConfiguration> geometric;  // absent when AB^-1 has no axis
    bool agree;
    Scalar trace_ab_inverse;
};

std::string to_string(ConsistencyReport::AlgebraicCase c);

ConsistencyReport geometric_trace_consistency(const Mat2& a, const Mat2& b,
                                              unsigned max_precision);

}  // namespace fuchsian
