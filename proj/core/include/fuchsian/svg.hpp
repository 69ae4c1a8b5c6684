#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuchsian/geodesic.hpp"

namespace fuchsian {

// Upper half-plane scene: geodesics render as semicircles on the real axis
// or vertical rays (infinite endpoint), marked points as small dots.
// Output is a deterministic SVG 1.1 subset: element order follows item
// order, all coordinates are fixed six-decimal strings derived by exact
// rounding, so equal scenes produce byte-identical documents.
struct SceneItem {
    enum class Kind { Geodesic, Point } kind;
    // Geodesic endpoints (or the point) as rationals; surd endpoints are
    // rationalized at interval midpoints (width 2^-20) before building the
    // scene. Presentation only; predicates never consume these.
    std::optional<Rational> x1;  // absent = infinite endpoint
    std::optional<Rational> x2;
    Rational py = 0;  // Point: height above the axis
    std::string label;
};

SceneItem scene_geodesic(const Geodesic& g, const std::string& label);
SceneItem scene_point(const Rational& x, const Rational& y, const std::string& label);

// Renders the scene; an empty scene is a valid (empty) document.
std::string render_scene(const std::vector<SceneItem>& items);

}  // namespace fuchsian
