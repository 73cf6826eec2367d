#pragma once

#include "tricover/geometry.hpp"
#include "tricover/rational.hpp"

#include <random>

// Shared helpers for the test suites: deterministic random rational data and
// independent re-implementations of geometric predicates used as oracles.
namespace tricover::testing {

inline Rational random_rational(std::mt19937_64& gen, int max_den, long long lo, long long hi) {
    std::uniform_int_distribution<long long> den_dist(1, max_den);
    long long den = den_dist(gen);
    std::uniform_int_distribution<long long> num_dist(lo * den, hi * den);
    return Rational(BigInt(num_dist(gen)), BigInt(den));
}

/// Rational in the open interval (0, 1) with denominator <= max_den.
inline Rational random_unit_rational(std::mt19937_64& gen, int max_den = 60) {
    std::uniform_int_distribution<long long> den_dist(2, max_den);
    long long den = den_dist(gen);
    std::uniform_int_distribution<long long> num_dist(1, den - 1);
    return Rational(BigInt(num_dist(gen)), BigInt(den));
}

inline Point2 random_point(std::mt19937_64& gen, int max_den, long long lo, long long hi) {
    return Point2{random_rational(gen, max_den, lo, hi), random_rational(gen, max_den, lo, hi)};
}

inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Signed doubled area of the triangle v0 v1 v2 (shoelace).
inline Rational doubled_area(const std::array<Point2, 3>& v) {
    return cross(v[0], v[1], v[2]);
}

/// Closed-triangle membership via three half-plane tests, independent of the
/// production predicate and of vertex orientation.
inline bool contains_half_planes(const std::array<Point2, 3>& v, const Point2& q) {
    Rational s0 = cross(v[0], v[1], q);
    Rational s1 = cross(v[1], v[2], q);
    Rational s2 = cross(v[2], v[0], q);
    bool non_neg = s0 >= 0 && s1 >= 0 && s2 >= 0;
    bool non_pos = s0 <= 0 && s1 <= 0 && s2 <= 0;
    return non_neg || non_pos;
}

/// Closed-triangle membership via barycentric coordinates.
inline bool contains_barycentric(const std::array<Point2, 3>& v, const Point2& q) {
    Rational det = doubled_area(v);
    if (det == 0) return false;  // degenerate; unit placements never are
    Rational u = cross(v[0], q, v[2]) / det;
    Rational w = cross(v[0], v[1], q) / det;
    return u >= 0 && w >= 0 && u + w <= 1;
}

}  // namespace tricover::testing
