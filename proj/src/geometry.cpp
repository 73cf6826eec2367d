#include "tricover/geometry.hpp"

#include "tricover/plan.hpp"

#include <stdexcept>

namespace tricover {

bool TargetTriangle::contains(const Point2& q) const {
    return q.x >= 0 && q.y >= 0 && q.x + q.y <= side();
}

std::array<Point2, 3> TargetTriangle::vertices() const {
    Rational len = side();
    return {Point2{0, 0}, Point2{len, 0}, Point2{0, len}};
}

TargetTriangle make_target(int n, const Rational& d) {
    if (n < 1) throw std::invalid_argument("target: n must be >= 1");
    if (d < 0 || d >= 1) throw std::invalid_argument("target: d must be in [0, 1)");
    return TargetTriangle{n, d};
}

std::array<Point2, 3> vertices(const Placement& p) {
    const Rational& x = p.anchor.x;
    const Rational& y = p.anchor.y;
    if (p.orientation == Orientation::Up) {
        return {Point2{x, y}, Point2{x + 1, y}, Point2{x, y + 1}};
    }
    return {Point2{x, y}, Point2{x + 1, y}, Point2{x + 1, y - 1}};
}

bool contains(const Placement& p, const Point2& q) {
    const Rational& x = p.anchor.x;
    const Rational& y = p.anchor.y;
    if (p.orientation == Orientation::Up) {
        // Right triangle with legs on x = anchor.x and y = anchor.y.
        return q.x >= x && q.y >= y && q.x + q.y <= x + y + 1;
    }
    // Legs on y = anchor.y (top) and x = anchor.x + 1 (right).
    return q.x <= x + 1 && q.y <= y && q.x + q.y >= x + y;
}

std::optional<Interval> cross_section(const Placement& p, const Rational& y) {
    const Rational& ax = p.anchor.x;
    const Rational& ay = p.anchor.y;
    if (p.orientation == Orientation::Up) {
        if (y < ay || y > ay + 1) return std::nullopt;
        return Interval{ax, ax + 1 - (y - ay)};
    }
    if (y > ay || y < ay - 1) return std::nullopt;
    return Interval{ax + (ay - y), ax + 1};
}

std::optional<Interval> cross_section(const TargetTriangle& t, const Rational& y) {
    if (y < 0 || y > t.side()) return std::nullopt;
    return Interval{Rational(0), t.side() - y};
}

AffineMap AffineMap::identity() {
    return AffineMap{1, 0, 0, 1, 0, 0};
}

Point2 AffineMap::apply(const Point2& q) const {
    return Point2{a * q.x + b * q.y + tx, c * q.x + d * q.y + ty};
}

AffineMap AffineMap::inverse() const {
    Rational dt = det();
    if (dt == 0) throw std::invalid_argument("affine map is singular");
    Rational ia = d / dt;
    Rational ib = -b / dt;
    Rational ic = -c / dt;
    Rational id = a / dt;
    return AffineMap{ia, ib, ic, id, -(ia * tx + ib * ty), -(ic * tx + id * ty)};
}

namespace {

std::array<Point2, 3> map_triple(const AffineMap& m, const std::array<Point2, 3>& v) {
    return {m.apply(v[0]), m.apply(v[1]), m.apply(v[2])};
}

}  // namespace

std::vector<std::array<Point2, 3>> apply_affine(const AffineMap& m, const CoveringPlan& plan) {
    if (m.det() == 0) throw std::invalid_argument("affine map is singular");
    std::vector<std::array<Point2, 3>> out;
    out.reserve(plan.placements.size());
    for (const Placement& p : plan.placements) out.push_back(map_triple(m, vertices(p)));
    return out;
}

std::array<Point2, 3> apply_affine(const AffineMap& m, const TargetTriangle& target) {
    if (m.det() == 0) throw std::invalid_argument("affine map is singular");
    return map_triple(m, target.vertices());
}

}  // namespace tricover
