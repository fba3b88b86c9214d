#include "airtype/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace airtype {

std::int64_t cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::int64_t squared_distance(const Point& a, const Point& b) {
    const std::int64_t dx = a.x - b.x;
    const std::int64_t dy = a.y - b.y;
    return dx * dx + dy * dy;
}

HullPolygon convex_hull(std::span<const Point> points) {
    if (points.empty()) {
        throw EmptyGeometryError("convex_hull: empty point set");
    }

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t n = pts.size();
    if (n <= 2) {
        return HullPolygon{std::move(pts)};
    }

    // Andrew monotone chain. Popping on cross <= 0 keeps the hull strictly
    // convex: collinear interior points never survive.
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower_end && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point equals the first
    return HullPolygon{std::move(hull)};
}

namespace {

/// Candidate farthest pair, ordered so endpoint_a < endpoint_b.
struct PairCandidate {
    Point a;
    Point b;
    std::int64_t dist2 = -1;

    void consider(Point p, Point q) {
        if (q < p) std::swap(p, q);
        const std::int64_t d2 = squared_distance(p, q);
        if (d2 > dist2) {
            a = p;
            b = q;
            dist2 = d2;
        } else if (d2 == dist2 && (p < a || (p == a && q < b))) {
            a = p;
            b = q;
        }
    }
};

DiameterResult to_result(const PairCandidate& c) {
    return DiameterResult{c.a, c.b, c.dist2, std::sqrt(static_cast<double>(c.dist2))};
}

}  // namespace

DiameterResult farthest_pair(std::span<const Point> points) {
    const HullPolygon hull = convex_hull(points);
    const auto& v = hull.vertices;
    const std::size_t h = v.size();

    if (h == 1) {
        return DiameterResult{v[0], v[0], 0, 0.0};
    }
    PairCandidate best;
    if (h == 2) {
        best.consider(v[0], v[1]);
        return to_result(best);
    }

    // Split the counter-clockwise hull at its lexicographic extremes into two
    // x-monotone chains. v[0] is the smallest vertex; find the largest.
    std::size_t r = 0;
    for (std::size_t i = 1; i < h; ++i) {
        if (v[r] < v[i]) r = i;
    }
    std::vector<Point> lower(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r) + 1);
    std::vector<Point> upper;  // left to right along the top boundary
    upper.reserve(h - r + 1);
    upper.push_back(v[0]);
    for (std::size_t i = h; i-- > r;) upper.push_back(v[i]);

    // Rotating-calipers walk: advance whichever chain's next edge has the
    // steeper slope, visiting every antipodal pair between the chains.
    std::size_t i = 0;                 // on upper, from the left
    std::size_t j = lower.size() - 1;  // on lower, from the right
    best.consider(upper[i], lower[j]);
    while (i + 1 < upper.size() || j > 0) {
        if (i + 1 == upper.size()) {
            --j;
        } else if (j == 0) {
            ++i;
        } else {
            const std::int64_t lhs = (upper[i + 1].y - upper[i].y) * (lower[j].x - lower[j - 1].x);
            const std::int64_t rhs = (lower[j].y - lower[j - 1].y) * (upper[i + 1].x - upper[i].x);
            if (lhs > rhs) {
                ++i;
            } else {
                --j;
            }
        }
        best.consider(upper[i], lower[j]);
    }

    // The walk fixes the maximum; parallel hull edges can hide equal-distance
    // pairs from it, so the endpoint tie-break is settled over hull vertices.
    // Lattice hulls are small (O(n^(1/3)) vertices), this pass is cheap.
    PairCandidate chosen;
    for (std::size_t p = 0; p < h; ++p) {
        for (std::size_t q = p + 1; q < h; ++q) {
            if (squared_distance(v[p], v[q]) == best.dist2) {
                chosen.consider(v[p], v[q]);
            }
        }
    }
    return to_result(chosen);
}

bool hull_contains(const HullPolygon& hull, const Point& p) {
    const auto& v = hull.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return p == v[0];
    if (v.size() == 2) {
        if (cross(v[0], v[1], p) != 0) return false;
        return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        if (cross(a, b, p) < 0) return false;  // right of a CCW edge
    }
    return true;
}

}  // namespace airtype
