#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "airtype/geometry.hpp"
#include "oracle.hpp"

using namespace airtype;

namespace {

std::vector<Point> random_points(std::mt19937_64& rng, int count, int extent = 512) {
    std::uniform_int_distribution<std::int64_t> coord(0, extent - 1);
    std::vector<Point> points(static_cast<std::size_t>(count));
    for (Point& p : points) p = {coord(rng), coord(rng)};
    return points;
}

}  // namespace

TEST_CASE("hull of degenerate inputs") {
    CHECK(convex_hull(std::vector<Point>{{3, 4}}).vertices == std::vector<Point>{{3, 4}});
    CHECK(convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}).vertices ==
          std::vector<Point>{{0, 0}, {2, 0}});
    CHECK(convex_hull(std::vector<Point>{{5, 5}, {5, 5}, {5, 5}}).vertices ==
          std::vector<Point>{{5, 5}});
    CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), EmptyGeometryError);
}

TEST_CASE("hull drops collinear edge points and starts at the smallest vertex") {
    const std::vector<Point> square_with_midpoints{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2},
                                                   {1, 2}, {0, 2}, {0, 1}, {1, 1}};
    const HullPolygon hull = convex_hull(square_with_midpoints);
    CHECK(hull.vertices == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("farthest pair of tiny sets") {
    const DiameterResult single = farthest_pair(std::vector<Point>{{7, 9}});
    CHECK(single.dist2 == 0);
    CHECK(single.dist_px == 0.0);
    CHECK(single.endpoint_a == Point{7, 9});
    CHECK(single.endpoint_b == Point{7, 9});

    const DiameterResult unit_square =
        farthest_pair(std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(unit_square.dist2 == 2);
    CHECK(unit_square.dist_px == doctest::Approx(1.41421356));
    CHECK(unit_square.endpoint_a == Point{0, 0});
    CHECK(unit_square.endpoint_b == Point{1, 1});

    CHECK_THROWS_AS(farthest_pair(std::vector<Point>{}), EmptyGeometryError);
}

TEST_CASE("farthest pair tie-break picks the lexicographically smallest pair") {
    // Horizontal and vertical pairs both span distance 4.
    const std::vector<Point> cross{{0, 0}, {4, 0}, {2, 2}, {2, -2}};
    const DiameterResult r = farthest_pair(cross);
    CHECK(r.dist2 == 16);
    CHECK(r.endpoint_a == Point{0, 0});
    CHECK(r.endpoint_b == Point{4, 0});
}

TEST_CASE("hull and diameter agree with the oracles on random sets") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> size(1, 300);
    for (int round = 0; round < 200; ++round) {
        const std::vector<Point> points = random_points(rng, size(rng));

        const HullPolygon hull = convex_hull(points);
        CHECK(hull.vertices == oracle::gift_wrap(points));

        const DiameterResult fast = farthest_pair(points);
        const oracle::FarthestPair slow = oracle::brute_force_farthest(points);
        REQUIRE(fast.dist2 == slow.dist2);
        CHECK(fast.endpoint_a == slow.a);
        CHECK(fast.endpoint_b == slow.b);
    }
}

TEST_CASE("hull invariants on random sets") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 50; ++round) {
        const std::vector<Point> points = random_points(rng, 120);
        const HullPolygon hull = convex_hull(points);

        // Idempotence.
        CHECK(convex_hull(hull.vertices).vertices == hull.vertices);

        // Containment of every input point.
        for (const Point& p : points) CHECK(hull_contains(hull, p));

        // Vertices are input points.
        for (const Point& v : hull.vertices) {
            CHECK(std::find(points.begin(), points.end(), v) != points.end());
        }

        // Strict convexity: no three consecutive collinear vertices.
        const auto& v = hull.vertices;
        if (v.size() >= 3) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                const std::int64_t turn =
                    cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]);
                CHECK(turn > 0);  // counter-clockwise and never collinear
            }
        }
        CHECK(std::min_element(v.begin(), v.end()) == v.begin());
    }
}

TEST_CASE("diameter endpoints are hull vertices") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const std::vector<Point> points = random_points(rng, 80);
        const HullPolygon hull = convex_hull(points);
        const DiameterResult d = farthest_pair(points);
        CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), d.endpoint_a) !=
              hull.vertices.end());
        CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), d.endpoint_b) !=
              hull.vertices.end());
    }
}

TEST_CASE("diameter is invariant under translation and quarter rotation") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 50; ++round) {
        const std::vector<Point> points = random_points(rng, 60);
        const std::int64_t base = farthest_pair(points).dist2;

        std::vector<Point> translated = points;
        for (Point& p : translated) p = {p.x + 1000, p.y - 777};
        CHECK(farthest_pair(translated).dist2 == base);

        std::vector<Point> rotated = points;
        for (Point& p : rotated) p = {-p.y, p.x};
        CHECK(farthest_pair(rotated).dist2 == base);
    }
}

TEST_CASE("adding a point never shrinks the diameter") {
    std::mt19937_64 rng(55);
    std::vector<Point> points = random_points(rng, 10);
    std::int64_t previous = farthest_pair(points).dist2;
    std::uniform_int_distribution<std::int64_t> coord(0, 511);
    for (int step = 0; step < 200; ++step) {
        points.push_back({coord(rng), coord(rng)});
        const std::int64_t now = farthest_pair(points).dist2;
        CHECK(now >= previous);
        previous = now;
    }
}

TEST_CASE("hull containment rejects outside points") {
    const HullPolygon hull = convex_hull(std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(hull_contains(hull, {2, 2}));
    CHECK(hull_contains(hull, {0, 0}));
    CHECK(hull_contains(hull, {4, 2}));  // on an edge
    CHECK_FALSE(hull_contains(hull, {5, 2}));
    CHECK_FALSE(hull_contains(hull, {-1, 0}));

    const HullPolygon segment = convex_hull(std::vector<Point>{{0, 0}, {4, 4}});
    CHECK(hull_contains(segment, {2, 2}));
    CHECK_FALSE(hull_contains(segment, {1, 2}));
    CHECK_FALSE(hull_contains(segment, {5, 5}));
}
