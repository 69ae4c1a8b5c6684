#include "fuchsian/svg.hpp"

#include <sstream>

namespace fuchsian {

namespace {

std::optional<Rational> endpoint_coordinate(const BoundaryPoint& p) {
    if (p.is_infinity()) return std::nullopt;
    return p.approximate(20);
}

}  // namespace

SceneItem scene_geodesic(const Geodesic& g, const std::string& label) {
    SceneItem item{SceneItem::Kind::Geodesic, endpoint_coordinate(g.first),
                   endpoint_coordinate(g.second), Rational(0), label};
    if (!item.x1 && !item.x2) throw Error("geodesic cannot have two infinite endpoints");
    // Canonical order: finite endpoints ascending, infinite endpoint second.
    if (!item.x1 || (item.x2 && *item.x2 < *item.x1)) std::swap(item.x1, item.x2);
    return item;
}

SceneItem scene_point(const Rational& x, const Rational& y, const std::string& label) {
    return {SceneItem::Kind::Point, x, std::nullopt, y, label};
}

std::string render_scene(const std::vector<SceneItem>& items) {
    // World window from the finite coordinates.
    bool any = false;
    Rational xmin(0), xmax(1), ymax(1);
    auto grow = [&](const Rational& x) {
        if (!any) {
            xmin = xmax = x;
            any = true;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
        }
    };
    for (const auto& it : items) {
        if (it.x1) grow(*it.x1);
        if (it.x2) grow(*it.x2);
        if (it.kind == SceneItem::Kind::Point) ymax = std::max(ymax, it.py);
        if (it.kind == SceneItem::Kind::Geodesic && it.x1 && it.x2)
            ymax = std::max(ymax, Rational((*it.x2 - *it.x1) / 2));
    }
    if (!any) {
        xmin = 0;
        xmax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    Rational pad = (xmax - xmin) / 10;
    xmin -= pad;
    xmax += pad;
    ymax += pad;

    const long width = 800;
    Rational scale = Rational(width) / (xmax - xmin);
    Rational margin(24);
    Rational height = ymax * scale + 2 * margin;

    auto X = [&](const Rational& x) { return to_decimal_string((x - xmin) * scale, 6); };
    auto Y = [&](const Rational& y) { return to_decimal_string(height - margin - y * scale, 6); };
    Rational top_y = ymax;  // world height of the picture top

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << to_decimal_string(height, 6) << "\" viewBox=\"0 0 " << width << " "
       << to_decimal_string(height, 6) << "\">\n";
    // Real axis.
    os << "<line x1=\"0\" y1=\"" << Y(Rational(0)) << "\" x2=\"" << width << "\" y2=\""
       << Y(Rational(0)) << "\" stroke=\"#888888\" stroke-width=\"1\" />\n";

    for (const auto& it : items) {
        if (it.kind == SceneItem::Kind::Point) {
            os << "<circle cx=\"" << X(*it.x1) << "\" cy=\"" << Y(it.py)
               << "\" r=\"3\" fill=\"#222222\" />\n";
            if (!it.label.empty())
                os << "<text x=\"" << X(*it.x1) << "\" y=\"" << Y(it.py + pad / 2)
                   << "\" font-size=\"12\">" << it.label << "</text>\n";
            continue;
        }
        if (it.x1 && it.x2) {
            Rational r = (*it.x2 - *it.x1) / 2;
            Rational mid = (*it.x1 + *it.x2) / 2;
            std::string rs = to_decimal_string(r * scale, 6);
            os << "<path d=\"M " << X(*it.x1) << " " << Y(Rational(0)) << " A " << rs << " " << rs
               << " 0 0 1 " << X(*it.x2) << " " << Y(Rational(0))
               << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" />\n";
            if (!it.label.empty())
                os << "<text x=\"" << X(mid) << "\" y=\"" << Y(r + pad / 4)
                   << "\" font-size=\"12\" text-anchor=\"middle\">" << it.label << "</text>\n";
        } else {
            // Vertical ray at the finite endpoint.
            const Rational& x = *it.x1;
            os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(Rational(0)) << "\" x2=\"" << X(x)
               << "\" y2=\"" << Y(top_y) << "\" stroke=\"#000000\" stroke-width=\"1.5\" />\n";
            if (!it.label.empty())
                os << "<text x=\"" << X(x + pad / 4) << "\" y=\"" << Y(top_y - pad / 2)
                   << "\" font-size=\"12\">" << it.label << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace fuchsian
