#pragma once

#include "tricover/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tricover {

struct Point2 {
    Rational x;
    Rational y;

    bool operator==(const Point2&) const = default;
};

// Canonical frame: the target is the right isosceles H-triangle with legs on
// the axes. Unit placements are axis-aligned H-triangles of base and height 1.
enum class Orientation { Up, Down };

// Up at (x,y)   covers the closed triangle (x,y), (x+1,y), (x,y+1).
// Down at (x,y) covers the closed triangle (x,y), (x+1,y), (x+1,y-1);
// the anchor is the top-left vertex of its horizontal leg.
struct Placement {
    Orientation orientation = Orientation::Up;
    Point2 anchor;

    bool operator==(const Placement&) const = default;
};

// The triangle to cover: closed, with vertices (0,0), (L,0), (0,L) and
// L = n + d. Base on the x-axis, height equal to base, so it is a unit-scaled
// H-triangle and the width-function machinery applies to it directly.
struct TargetTriangle {
    int n = 1;
    Rational d;

    Rational side() const { return Rational(n) + d; }
    bool contains(const Point2& q) const;
    std::array<Point2, 3> vertices() const;
};

/// Validates 1 <= n and 0 <= d < 1; throws std::invalid_argument otherwise.
TargetTriangle make_target(int n, const Rational& d);

/// The three vertices of a placement, in the anchor-first order fixed by the
/// Placement conventions above.
std::array<Point2, 3> vertices(const Placement& p);

/// Exact closed-triangle membership test.
bool contains(const Placement& p, const Point2& q);

// Closed interval [lo, hi] on a horizontal line; lo == hi is a single point.
struct Interval {
    Rational lo;
    Rational hi;

    bool operator==(const Interval&) const = default;
};

/// The exact x-extent of a placement on the line at height y, or nullopt if
/// the line misses the triangle. Width is linear in y inside the y-extent.
std::optional<Interval> cross_section(const Placement& p, const Rational& y);

/// The target's x-extent at height y (nullopt outside [0, L]).
std::optional<Interval> cross_section(const TargetTriangle& t, const Rational& y);

// Invertible rational affine map q -> M q + t with M = [[a, b], [c, d]].
struct AffineMap {
    Rational a, b, c, d;
    Rational tx, ty;

    static AffineMap identity();
    Rational det() const { return a * d - b * c; }
    Point2 apply(const Point2& q) const;
    AffineMap inverse() const;  // throws std::invalid_argument if det == 0
};

struct CoveringPlan;  // plan.hpp

/// Transformed vertex triples. The images are homothets of the transformed
/// target but are no longer Placements in the canonical frame, so they come
/// back as explicit vertex lists. Throws std::invalid_argument when m is
/// singular.
std::vector<std::array<Point2, 3>> apply_affine(const AffineMap& m, const CoveringPlan& plan);
std::array<Point2, 3> apply_affine(const AffineMap& m, const TargetTriangle& target);

}  // namespace tricover
