#include "tricover/svg_render.hpp"

#include "tricover/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tricover {

namespace {

struct Vec2 {
    double x = 0;
    double y = 0;
};

Vec2 to_display(const Point2& p, bool equilateral) {
    double x = to_double(p.x);
    double y = to_double(p.y);
    if (equilateral) return Vec2{x + y / 2.0, y * std::sqrt(3.0) / 2.0};
    return Vec2{x, y};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

class Canvas {
public:
    Canvas(double min_x, double min_y, double max_x, double max_y, double unit_px)
        : min_x_(min_x), max_y_(max_y), scale_(unit_px) {
        width_ = (max_x - min_x) * scale_ + 2 * kMargin;
        height_ = (max_y - min_y) * scale_ + 2 * kMargin;
    }

    Vec2 pixel(const Vec2& p) const {
        return Vec2{(p.x - min_x_) * scale_ + kMargin, (max_y_ - p.y) * scale_ + kMargin};
    }

    double width() const { return width_; }
    double height() const { return height_; }

private:
    static constexpr double kMargin = 16.0;
    double min_x_, max_y_, scale_;
    double width_ = 0, height_ = 0;
};

std::string polygon_tag(const Canvas& canvas, const std::vector<Vec2>& pts,
                        const std::string& style) {
    std::ostringstream out;
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Vec2 px = canvas.pixel(pts[i]);
        if (i) out << ' ';
        out << fmt(px.x) << ',' << fmt(px.y);
    }
    out << "\" " << style << "/>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const CoveringPlan& plan, const RenderOptions& opts) {
    std::vector<std::array<Vec2, 3>> triangles;
    triangles.reserve(plan.placements.size());
    for (const Placement& p : plan.placements) {
        auto v = vertices(p);
        triangles.push_back({to_display(v[0], opts.equilateral),
                             to_display(v[1], opts.equilateral),
                             to_display(v[2], opts.equilateral)});
    }
    auto tv = plan.target().vertices();
    std::array<Vec2, 3> target{to_display(tv[0], opts.equilateral),
                               to_display(tv[1], opts.equilateral),
                               to_display(tv[2], opts.equilateral)};

    double min_x = target[0].x, max_x = target[0].x;
    double min_y = target[0].y, max_y = target[0].y;
    auto grow = [&](const Vec2& v) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    };
    for (const Vec2& v : target) grow(v);
    for (const auto& tri : triangles) {
        for (const Vec2& v : tri) grow(v);
    }

    Canvas canvas(min_x, min_y, max_x, max_y, opts.unit_px);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt(canvas.width()) << "\" height=\"" << fmt(canvas.height()) << "\">\n"
        << "  <title>" << method_name(plan.method) << " covering, n=" << plan.n
        << " d=" << format_rational(plan.d) << "</title>\n";

    for (std::size_t i = 0; i < triangles.size(); ++i) {
        bool up = plan.placements[i].orientation == Orientation::Up;
        std::string style = up ? "fill=\"#a6cee3\" fill-opacity=\"0.75\" stroke=\"#1f78b4\" "
                                 "stroke-width=\"1\""
                               : "fill=\"#fdbf6f\" fill-opacity=\"0.75\" stroke=\"#ff7f00\" "
                                 "stroke-width=\"1\"";
        out << polygon_tag(canvas, {triangles[i][0], triangles[i][1], triangles[i][2]}, style);
    }

    if (opts.labels) {
        for (std::size_t i = 0; i < triangles.size(); ++i) {
            Vec2 c{(triangles[i][0].x + triangles[i][1].x + triangles[i][2].x) / 3.0,
                   (triangles[i][0].y + triangles[i][1].y + triangles[i][2].y) / 3.0};
            Vec2 px = canvas.pixel(c);
            out << "  <text x=\"" << fmt(px.x) << "\" y=\"" << fmt(px.y)
                << "\" font-size=\"10\" text-anchor=\"middle\">" << i + 1 << "</text>\n";
        }
    }

    if (opts.show_target) {
        out << polygon_tag(canvas, {target[0], target[1], target[2]},
                           "fill=\"none\" stroke=\"#e31a1c\" stroke-width=\"2\" "
                           "class=\"target\"");
    }

    out << "</svg>\n";
    return out.str();
}

void save_svg(const CoveringPlan& plan, const std::string& path, const RenderOptions& opts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("svg: cannot write " + path);
    out << render_svg(plan, opts);
}

}  // namespace tricover
