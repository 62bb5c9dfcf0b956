#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <variant>

#include "inversive/apollonian.hpp"
#include "inversive/error.hpp"
#include "inversive/numfmt.hpp"

namespace inversive {

namespace {

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(const Circle &c) {
        const double r = std::abs(c.radius);
        min_x = std::min(min_x, c.center.x - r);
        min_y = std::min(min_y, c.center.y - r);
        max_x = std::max(max_x, c.center.x + r);
        max_y = std::max(max_y, c.center.y + r);
    }
    bool empty() const { return !(min_x <= max_x); }
};

std::string depth_color(int depth) {
    // golden-angle hue steps keep neighbouring depths apart
    const double hue = std::fmod(depth * 137.50776405003785, 360.0);
    std::ostringstream os;
    os << "hsl(" << format_double(std::round(hue * 1000.0) / 1000.0) << ",65%,62%)";
    return os.str();
}

}  // namespace

std::string render_svg(const Gasket &g, const RenderStyle &style) {
    if (g.disks.empty()) throw GeometryError(ErrorKind::EmptyGasket, "nothing to render");

    std::vector<Disk> shapes;
    shapes.reserve(g.disks.size());
    for (const auto &d : g.disks) shapes.push_back(project(d.vector));

    Box enclosing, all;
    for (const auto &s : shapes) {
        if (const auto *c = std::get_if<Circle>(&s)) {
            all.add(*c);
            if (c->radius < 0.0) enclosing.add(*c);
        }
    }
    Box view = !enclosing.empty() ? enclosing : all;
    if (view.empty()) view = Box{-1.0, -1.0, 1.0, 1.0};

    const double side = std::max(view.max_x - view.min_x, view.max_y - view.min_y);
    const double margin = 0.02 * side;
    const double x0 = view.min_x - margin, y0 = view.min_y - margin;
    const double w = view.max_x - view.min_x + 2.0 * margin;
    const double h = view.max_y - view.min_y + 2.0 * margin;
    const double stroke_width = style.stroke_fraction * std::max(w, h);
    const auto sw = format_double(stroke_width);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_double(style.pixel_width)
       << "\" height=\"" << format_double(std::round(style.pixel_width * h / w)) << "\" viewBox=\"" << format_double(x0)
       << ' ' << format_double(y0) << ' ' << format_double(w) << ' ' << format_double(h) << "\">\n";

    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const int depth = g.disks[i].depth;
        if (const auto *c = std::get_if<Circle>(&shapes[i])) {
            const bool outline = c->radius < 0.0;
            const std::string fill = outline ? "none" : style.fill_by_depth ? depth_color(depth) : style.fill;
            os << "  <circle cx=\"" << format_double(c->center.x) << "\" cy=\"" << format_double(c->center.y)
               << "\" r=\"" << format_double(std::abs(c->radius)) << "\" fill=\"" << fill << "\" stroke=\""
               << style.stroke << "\" stroke-width=\"" << sw << "\"/>\n";
        } else {
            const auto &hp = std::get<Halfplane>(shapes[i]);
            // Foot of the viewport centre on the boundary line, then run
            // well past the viewport both ways along the line.
            const double cx = x0 + 0.5 * w, cy = y0 + 0.5 * h;
            const double off = hp.normal.x * cx + hp.normal.y * cy - hp.offset;
            const double fx = cx - off * hp.normal.x, fy = cy - off * hp.normal.y;
            const double reach = 2.0 * std::hypot(w, h);
            const double tx = -hp.normal.y * reach, ty = hp.normal.x * reach;
            os << "  <line x1=\"" << format_double(fx - tx) << "\" y1=\"" << format_double(fy - ty) << "\" x2=\""
               << format_double(fx + tx) << "\" y2=\"" << format_double(fy + ty) << "\" stroke=\"" << style.stroke
               << "\" stroke-width=\"" << sw << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace inversive
