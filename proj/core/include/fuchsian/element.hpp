#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fuchsian/geodesic.hpp"
#include "fuchsian/matrix.hpp"

namespace fuchsian {

enum class ElementClass { Identity, Hyperbolic, Parabolic, Elliptic };

std::string to_string(ElementClass c);

// Trace classification of a determinant-1 matrix: |tr| > 2 hyperbolic,
// |tr| = 2 parabolic (unless +-I), |tr| < 2 elliptic. On the interval
// backend the comparison |tr| - 2 may straddle zero at every precision; that
// raises UnresolvedComparison, the concrete bit-model obstruction.
ElementClass classify(const Mat2& m, unsigned max_precision);

// A matrix with its trace-sign normalization (trace >= 0 on exact backends;
// trace-zero elliptics keep whichever sign they came with) and its cached
// classification.
class PSLElement {
public:
    explicit PSLElement(const Mat2& m, unsigned max_precision = 256);

    const Mat2& matrix() const { return m_; }
    ElementClass element_class() const { return class_; }
    Scalar trace() const { return m_.trace(); }
    bool was_negated() const { return negated_; }

private:
    Mat2 m_;
    ElementClass class_;
    bool negated_;
};

// max{|tr A|, |tr B|, |tr AB|, |tr AB^-1|}, the input-size measure.
Scalar maximal_initial_trace(const Mat2& a, const Mat2& b, unsigned max_precision);

// Boundary fixed points. Hyperbolic: two, with the attractor identified.
// Parabolic: one. Elliptic: none on the boundary (the interior fixed point
// is not computed). Identity input is an error.
struct FixedPointSet {
    std::vector<BoundaryPoint> points;            // 0, 1 or 2 entries
    std::optional<std::size_t> attractor_index;   // hyperbolic only
};

FixedPointSet fixed_points(const Mat2& m, unsigned max_precision);

// The axis of a hyperbolic element, oriented toward its attracting fixed
// point. Throws on non-hyperbolic input.
Geodesic axis(const Mat2& m, unsigned max_precision);

// Order of an elliptic element in PSL(2, R).
struct EllipticOrder {
    enum class Kind { Finite, Infinite, ExceedsBound };
    Kind kind;
    unsigned order = 0;      // Finite: least n with E^n = +-I
    unsigned bound = 0;      // ExceedsBound: the exhausted cap
};

// Decides the order of an elliptic E over an exact backend. A rational
// trace t with |t| < 2 gives finite order only for t in {0, +-1} (Niven);
// otherwise powers are taken up to 32 D^2, which certifies Infinite for
// entries in a degree-D field. An explicit max_order below the certifying
// bound yields ExceedsBound instead of Infinite when exhausted.
EllipticOrder elliptic_order(const Mat2& e, unsigned field_degree,
                             std::optional<unsigned> max_order = std::nullopt);

// Shared-fixed-point test: true iff A and B have a common fixed point (on
// the boundary, or a common interior point for two elliptics), decided by
// tr[A,B] = 2. Requires neither input to be +-I.
bool is_elementary_pair(const Mat2& a, const Mat2& b, unsigned max_precision);

// Given hyperbolic A, B with disjoint axes and positive traces, returns the
// pair ordered by descending trace and with the second generator possibly
// inverted so that tr(first * second) > 2 holds exactly.
struct OrientedPair {
    Mat2 first, second;
    bool swapped = false;          // inputs exchanged to enforce trace order
    bool second_inverted = false;  // B replaced by B^-1
};

OrientedPair coherently_orient(const Mat2& a, const Mat2& b, unsigned max_precision);

}  // namespace fuchsian
