#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "airtype/errors.hpp"
#include "airtype/geometry.hpp"

namespace airtype {

/// Foreground pixel set of one detection over a width x height grid.
/// Pixels are stored sorted row-major (y, then x) with no duplicates.
///
/// Out-of-range pixels are representable so that validation can report them
/// as findings; the decoders in this library never produce them.
class Mask {
public:
    Mask() = default;

    /// Empty mask with the given grid. Throws InvalidParameterError for
    /// non-positive dimensions.
    Mask(int width, int height);

    /// Builds a mask from arbitrary pixels; sorts and deduplicates.
    static Mask from_points(int width, int height, std::vector<Point> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool empty() const noexcept { return pixels_.empty(); }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }
    const std::vector<Point>& pixels() const noexcept { return pixels_; }

    bool contains(const Point& p) const;
    bool all_in_bounds() const;

    /// True if any pixel lies on the first or last row or column.
    bool touches_border() const;

    /// Pixels with at least one 4-neighbor outside the mask. Every convex
    /// hull vertex of the full set is in this subset, so hulls (and
    /// diameters) computed from it are identical.
    std::vector<Point> boundary_pixels() const;

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Point> pixels_;
};

/// Decodes row-major run lengths, background run first. The counts must sum
/// to exactly width x height; violations raise MalformedRleError.
Mask decode_rle(std::span<const std::int64_t> counts, int width, int height);

/// Canonical inverse of decode_rle: leading background count (possibly zero),
/// alternating runs, no zero-length interior runs, trailing zero omitted.
std::vector<std::int64_t> encode_rle(const Mask& mask);

}  // namespace airtype
