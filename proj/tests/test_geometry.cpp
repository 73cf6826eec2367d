#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tricover/geometry.hpp"
#include "tricover/plan.hpp"

#include "test_support.hpp"

#include <random>
#include <stdexcept>

using namespace tricover;
namespace tt = tricover::testing;

namespace {

Placement up(const Rational& x, const Rational& y) {
    return Placement{Orientation::Up, Point2{x, y}};
}

Placement down(const Rational& x, const Rational& y) {
    return Placement{Orientation::Down, Point2{x, y}};
}

}  // namespace

TEST_CASE("vertices follow the frame conventions") {
    auto v = vertices(up(0, 0));
    CHECK(v == std::array<Point2, 3>{Point2{0, 0}, Point2{1, 0}, Point2{0, 1}});

    v = vertices(down(0, 1));
    CHECK(v == std::array<Point2, 3>{Point2{0, 1}, Point2{1, 1}, Point2{1, 0}});

    v = vertices(up(rat(1, 2), rat(7, 6)));
    CHECK(v == std::array<Point2, 3>{Point2{rat(1, 2), rat(7, 6)}, Point2{rat(3, 2), rat(7, 6)},
                                     Point2{rat(1, 2), rat(13, 6)}});
}

TEST_CASE("placement area is exactly 1/2") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 200; ++i) {
        Placement p{i % 2 ? Orientation::Up : Orientation::Down, tt::random_point(gen, 40, -5, 5)};
        Rational a2 = tt::doubled_area(vertices(p));
        CHECK((a2 == 1 || a2 == -1));
    }
}

TEST_CASE("contains: spec points") {
    CHECK(contains(up(0, 0), Point2{rat(1, 4), rat(1, 4)}));
    CHECK_FALSE(contains(up(0, 0), Point2{rat(3, 4), rat(3, 4)}));  // x + y > 1
    CHECK(contains(down(0, 1), Point2{rat(1, 2), rat(1, 2)}));      // hypotenuse boundary
}

TEST_CASE("contains: closed boundaries") {
    CHECK(contains(up(0, 0), Point2{0, 0}));
    CHECK(contains(up(0, 0), Point2{1, 0}));
    CHECK(contains(up(0, 0), Point2{0, 1}));
    CHECK(contains(up(0, 0), Point2{rat(1, 2), rat(1, 2)}));
    CHECK_FALSE(contains(up(0, 0), Point2{rat(1, 2), rat(1, 2) + rat(1, 1000000)}));
    CHECK(contains(down(0, 1), Point2{1, 0}));
    CHECK(contains(down(0, 1), Point2{0, 1}));
    CHECK_FALSE(contains(down(0, 1), Point2{rat(1, 2), rat(1, 2) - rat(1, 1000000)}));
}

TEST_CASE("contains agrees with half-plane and barycentric oracles") {
    std::mt19937_64 gen(20240607);
    int inside = 0;
    for (int i = 0; i < 1000; ++i) {
        Placement p{i % 2 ? Orientation::Up : Orientation::Down, tt::random_point(gen, 12, -2, 2)};
        Point2 q = tt::random_point(gen, 24, -3, 3);
        auto v = vertices(p);
        bool got = contains(p, q);
        CHECK(got == tt::contains_half_planes(v, q));
        CHECK(got == tt::contains_barycentric(v, q));
        if (got) ++inside;
    }
    CHECK(inside > 0);  // the sample must exercise both outcomes
    CHECK(inside < 1000);
}

TEST_CASE("cross_section: spec intervals") {
    auto iv = cross_section(up(0, 0), rat(1, 2));
    REQUIRE(iv);
    CHECK(*iv == Interval{0, rat(1, 2)});

    iv = cross_section(down(0, 1), rat(1, 2));
    REQUIRE(iv);
    CHECK(*iv == Interval{rat(1, 2), 1});

    CHECK_FALSE(cross_section(up(0, 0), rat(2)));
    CHECK_FALSE(cross_section(down(0, 1), rat(-1, 100)));
}

TEST_CASE("cross_section width is 1 minus distance from the leg") {
    std::mt19937_64 gen(77);
    for (int i = 0; i < 300; ++i) {
        Point2 anchor = tt::random_point(gen, 20, -4, 4);
        Rational off = rat(i % 21, 20);  // 0, 1/20, ..., 1
        Placement u = up(anchor.x, anchor.y);
        auto iu = cross_section(u, anchor.y + off);
        REQUIRE(iu);
        CHECK(iu->hi - iu->lo == 1 - off);
        CHECK(iu->lo == anchor.x);

        Placement dn = down(anchor.x, anchor.y);
        auto id = cross_section(dn, anchor.y - off);
        REQUIRE(id);
        CHECK(id->hi - id->lo == 1 - off);
        CHECK(id->hi == anchor.x + 1);
    }
}

TEST_CASE("cross_section endpoints match containment") {
    std::mt19937_64 gen(123);
    for (int i = 0; i < 200; ++i) {
        Placement p{i % 2 ? Orientation::Up : Orientation::Down, tt::random_point(gen, 10, -3, 3)};
        Rational y = tt::random_rational(gen, 30, -4, 4);
        auto iv = cross_section(p, y);
        if (!iv) {
            CHECK_FALSE(contains(p, Point2{p.anchor.x, y}));
            continue;
        }
        CHECK(contains(p, Point2{iv->lo, y}));
        CHECK(contains(p, Point2{iv->hi, y}));
        CHECK(contains(p, Point2{(iv->lo + iv->hi) / 2, y}));
        CHECK_FALSE(contains(p, Point2{iv->lo - rat(1, 1000), y}));
        CHECK_FALSE(contains(p, Point2{iv->hi + rat(1, 1000), y}));
    }
}

TEST_CASE("target triangle basics") {
    TargetTriangle t = make_target(2, rat(2, 3));
    CHECK(t.side() == rat(8, 3));
    CHECK(t.contains(Point2{0, 0}));
    CHECK(t.contains(Point2{rat(8, 3), 0}));
    CHECK(t.contains(Point2{0, rat(8, 3)}));
    CHECK(t.contains(Point2{1, 1}));
    CHECK_FALSE(t.contains(Point2{2, 1}));
    CHECK_FALSE(t.contains(Point2{rat(-1, 10), rat(1, 2)}));

    auto iv = cross_section(t, rat(1, 2));
    REQUIRE(iv);
    CHECK(*iv == Interval{0, rat(13, 6)});
    CHECK_FALSE(cross_section(t, rat(3)));

    CHECK_THROWS_AS(make_target(0, rat(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_target(3, rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(make_target(3, rat(-1, 2)), std::invalid_argument);
    CHECK_NOTHROW(make_target(3, rat(0)));
}

TEST_CASE("affine identity and scaling") {
    CoveringPlan plan;
    plan.n = 1;
    plan.d = 0;
    plan.placements = {up(0, 0), down(0, 1)};

    auto same = apply_affine(AffineMap::identity(), plan);
    REQUIRE(same.size() == 2);
    CHECK(same[0] == vertices(plan.placements[0]));
    CHECK(same[1] == vertices(plan.placements[1]));

    AffineMap stretch{2, 0, 0, 1, 0, 0};
    auto scaled = apply_affine(stretch, plan);
    CHECK(scaled[0] == std::array<Point2, 3>{Point2{0, 0}, Point2{2, 0}, Point2{0, 1}});

    auto target_img = apply_affine(stretch, TargetTriangle{1, rat(1, 2)});
    CHECK(target_img == std::array<Point2, 3>{Point2{0, 0}, Point2{3, 0}, Point2{0, rat(3, 2)}});
}

TEST_CASE("affine inverse restores vertices exactly") {
    std::mt19937_64 gen(99);
    CoveringPlan plan;
    plan.n = 1;
    plan.d = 0;
    plan.placements = {up(rat(1, 3), rat(-2, 7)), down(rat(5, 4), rat(9, 2))};

    for (int i = 0; i < 50; ++i) {
        AffineMap m{tt::random_rational(gen, 6, -3, 3), tt::random_rational(gen, 6, -3, 3),
                    tt::random_rational(gen, 6, -3, 3), tt::random_rational(gen, 6, -3, 3),
                    tt::random_rational(gen, 6, -3, 3), tt::random_rational(gen, 6, -3, 3)};
        if (m.det() == 0) continue;
        AffineMap inv = m.inverse();
        for (const Placement& p : plan.placements) {
            for (const Point2& v : vertices(p)) {
                CHECK(inv.apply(m.apply(v)) == v);
            }
        }
    }
}

TEST_CASE("singular maps are rejected") {
    AffineMap flat{1, 2, 2, 4, 0, 0};
    CHECK(flat.det() == 0);
    CHECK_THROWS_AS(flat.inverse(), std::invalid_argument);
    CoveringPlan plan;
    plan.placements = {up(0, 0)};
    CHECK_THROWS_AS(apply_affine(flat, plan), std::invalid_argument);
    CHECK_THROWS_AS(apply_affine(flat, TargetTriangle{1, 0}), std::invalid_argument);
}
