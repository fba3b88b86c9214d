#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "airtype/errors.hpp"

namespace airtype {

/// Integer pixel coordinate. All geometry in this module is exact: orientation
/// tests and distance comparisons never touch floating point. Coordinates must
/// stay within |x|, |y| <= 2^29 so squared distances fit in int64.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic (x, then y).
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Twice the signed area of triangle (o, a, b); positive iff o->a->b turns
/// counter-clockwise in a y-up frame.
std::int64_t cross(const Point& o, const Point& a, const Point& b);

/// Exact squared Euclidean distance.
std::int64_t squared_distance(const Point& a, const Point& b);

/// Convex polygon. Vertices are counter-clockwise, start at the
/// lexicographically smallest vertex, and contain no three consecutive
/// collinear points. Degenerate hulls have one vertex (single point) or two
/// (collinear input: the extremes).
struct HullPolygon {
    std::vector<Point> vertices;
};

struct DiameterResult {
    Point endpoint_a;
    Point endpoint_b;
    std::int64_t dist2 = 0;  ///< exact squared pixel distance
    double dist_px = 0.0;    ///< sqrt(dist2); the only floating-point value here
};

/// Monotone-chain convex hull, O(n log n). Duplicates in the input are fine.
/// Throws EmptyGeometryError for an empty span.
HullPolygon convex_hull(std::span<const Point> points);

/// Maximum pairwise distance, computed as rotating calipers over the convex
/// hull with exact integer comparisons. When several pairs attain the maximum
/// the lexicographically smallest (a, b) pair with a < b is returned.
/// Throws EmptyGeometryError for an empty span.
DiameterResult farthest_pair(std::span<const Point> points);

/// Inside-or-on-boundary test against a hull, exact.
bool hull_contains(const HullPolygon& hull, const Point& p);

}  // namespace airtype
