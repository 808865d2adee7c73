#include "insep/render.hpp"

#include <set>
#include <sstream>
#include <variant>

namespace insep {

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 24;

std::string ascii(const PointSet& set, const RenderOptions& opt) {
    if (set.empty()) return "";
    const Rect box = bounding_box(set);
    std::set<Point> on_path;
    if (opt.path) {
        for (Point p : opt.path->vertices()) on_path.insert(p);
    }
    std::string out;
    for (int y = box.y1; y >= box.y0; --y) {
        for (int x = box.x0; x <= box.x1; ++x) {
            const bool pt = set.contains({x, y});
            const bool path = on_path.count({x, y}) != 0;
            out += pt ? (path ? '@' : '#') : (path ? '*' : '.');
        }
        out += '\n';
    }
    return out;
}

std::string svg(const PointSet& set, const RenderOptions& opt) {
    const Rect box = set.empty() ? Rect{0, 0, 0, 0}.expanded(1) : bounding_box(set).expanded(1);
    const int width = 2 * kMargin + box.width() * kCell;
    const int height = 2 * kMargin + box.height() * kCell;
    // Screen coordinates in half-cell units stay integral.
    auto sx = [&](int x) { return kMargin + (x - box.x0) * kCell; };
    auto sy = [&](int y) { return kMargin + (box.y1 - y) * kCell; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    o << "<g fill=\"#bbbbbb\">\n";
    for (int y = box.y1; y >= box.y0; --y) {
        for (int x = box.x0; x <= box.x1; ++x) {
            o << "<circle class=\"site\" cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"2\"/>\n";
        }
    }
    o << "</g>\n";

    if (opt.show_quartering && !set.empty()) {
        if (auto q = quarter(set); auto* cut = std::get_if<Quartering>(&q)) {
            const int cx = sx(cut->vertical) + kCell / 2;
            const int cy = sy(cut->horizontal) - kCell / 2;
            o << "<g stroke=\"red\" stroke-width=\"2\">\n"
              << "<line class=\"red-line\" x1=\"" << cx << "\" y1=\"" << sy(box.y1) << "\" x2=\"" << cx << "\" y2=\""
              << sy(box.y0) << "\"/>\n"
              << "<line class=\"red-line\" x1=\"" << sx(box.x0) << "\" y1=\"" << cy << "\" x2=\"" << sx(box.x1)
              << "\" y2=\"" << cy << "\"/>\n"
              << "</g>\n";
        }
    }

    if (opt.path) {
        o << "<polyline class=\"path\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"3\" points=\"";
        bool first = true;
        for (Point p : opt.path->vertices()) {
            if (!first) o << ' ';
            o << sx(p.x) << ',' << sy(p.y);
            first = false;
        }
        o << "\"/>\n";
    }

    o << "<g fill=\"black\">\n";
    for (Point p : set) o << "<circle class=\"point\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"7\"/>\n";
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace

std::string render(const PointSet& set, RenderFormat format, const RenderOptions& options) {
    return format == RenderFormat::Svg ? svg(set, options) : ascii(set, options);
}

std::string render(const Theta& theta, RenderFormat format, const RenderOptions& options) {
    return render(realize(theta), format, options);
}

}  // namespace insep
