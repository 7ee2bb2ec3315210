#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "ribbonknot/geometry.hpp"

using namespace ribbonknot;

TEST_CASE("segment intersection: transverse interior crossing") {
    const Segment a{{0, 0}, {2, 2}};
    const Segment b{{0, 2}, {2, 0}};
    const auto hit = segment_intersection(a, b, 1e-9);
    REQUIRE(hit.has_value());
    CHECK(hit->point.x == doctest::Approx(1.0));
    CHECK(hit->point.y == doctest::Approx(1.0));
    CHECK(hit->t == doctest::Approx(0.5));
}

TEST_CASE("segment intersection rejects endpoint touches and parallels") {
    CHECK(!segment_intersection({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}, 1e-9));
    CHECK(!segment_intersection({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, 1e-9));
    CHECK(!segment_intersection({{0, 0}, {1, 0}}, {{0.25, 0}, {0.75, 0}}, 1e-9));
    // near miss within tolerance of the endpoint
    CHECK(!segment_intersection({{0, 0}, {1, 0}}, {{0.5, -1}, {0.5, -1e-12}}, 1e-9));
}

TEST_CASE("segment distance") {
    CHECK(segment_distance({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}) == doctest::Approx(1.0));
    CHECK(segment_distance({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}}) == doctest::Approx(0.0));
    CHECK(segment_distance({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}) == doctest::Approx(1.0));
}

TEST_CASE("convex clipping: two unit squares offset by half") {
    const ConvexPolygon a{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const ConvexPolygon b{{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
    const ConvexPolygon p = clip_convex(a, b);
    CHECK(polygon_area(p) == doctest::Approx(0.25));
}

TEST_CASE("convex clipping: disjoint and contained") {
    const ConvexPolygon a{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(clip_convex(a, {{2, 2}, {3, 2}, {3, 3}, {2, 3}}).empty());
    const ConvexPolygon inner{{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}};
    CHECK(polygon_area(clip_convex(a, inner)) == doctest::Approx(0.25));
}

TEST_CASE("clipping oracle: random convex quads vs Monte Carlo area") {
    // Independent check of the clipped area by point sampling on a grid.
    std::uint64_t s = 42;
    auto rnd = [&] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s % 10000) / 10000.0;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const Vec2 c1{rnd() * 2, rnd() * 2}, c2{rnd() * 2, rnd() * 2};
        auto quad = [&](Vec2 c, double r, double phi) {
            ConvexPolygon q;
            for (int k = 0; k < 4; ++k) {
                const double a = phi + k * 1.5707963267948966;
                q.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
            }
            return q;
        };
        const ConvexPolygon a = quad(c1, 0.5 + rnd(), rnd());
        const ConvexPolygon b = quad(c2, 0.5 + rnd(), rnd());
        const ConvexPolygon p = clip_convex(a, b);
        const double area = p.size() >= 3 ? polygon_area(p) : 0.0;

        int inside = 0;
        const int grid = 140;
        for (int i = 0; i < grid; ++i) {
            for (int j = 0; j < grid; ++j) {
                const Vec2 pt{-1.0 + 5.0 * i / grid, -1.0 + 5.0 * j / grid};
                if (point_in_convex(pt, a, 0) && point_in_convex(pt, b, 0)) ++inside;
            }
        }
        const double mc = inside * (5.0 / grid) * (5.0 / grid);
        CHECK(area == doctest::Approx(mc).epsilon(0.15));
    }
}

TEST_CASE("point_in_convex honors tolerance") {
    const ConvexPolygon a{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(point_in_convex({0.5, 0.5}, a, 0));
    CHECK(point_in_convex({1.0 + 1e-12, 0.5}, a, 1e-9));
    CHECK(!point_in_convex({1.1, 0.5}, a, 1e-9));
}
