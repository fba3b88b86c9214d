#include "airtype/mask.hpp"

#include <algorithm>
#include <string>

namespace airtype {

namespace {

constexpr std::int64_t kMaxPixels = std::int64_t{1} << 34;  // 16 Gpx guard

bool row_major_less(const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

void check_dimensions(int width, int height) {
    if (width <= 0) {
        throw InvalidParameterError("width_px", "must be positive, got " + std::to_string(width));
    }
    if (height <= 0) {
        throw InvalidParameterError("height_px", "must be positive, got " + std::to_string(height));
    }
    if (static_cast<std::int64_t>(width) * height > kMaxPixels) {
        throw InvalidParameterError("width_px * height_px", "grid too large");
    }
}

}  // namespace

Mask::Mask(int width, int height) : width_(width), height_(height) {
    check_dimensions(width, height);
}

Mask Mask::from_points(int width, int height, std::vector<Point> pixels) {
    Mask m(width, height);
    std::sort(pixels.begin(), pixels.end(), row_major_less);
    pixels.erase(std::unique(pixels.begin(), pixels.end()), pixels.end());
    m.pixels_ = std::move(pixels);
    return m;
}

bool Mask::contains(const Point& p) const {
    return std::binary_search(pixels_.begin(), pixels_.end(), p, row_major_less);
}

bool Mask::all_in_bounds() const {
    return std::all_of(pixels_.begin(), pixels_.end(), [this](const Point& p) {
        return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
    });
}

bool Mask::touches_border() const {
    return std::any_of(pixels_.begin(), pixels_.end(), [this](const Point& p) {
        return p.x == 0 || p.y == 0 || p.x == width_ - 1 || p.y == height_ - 1;
    });
}

std::vector<Point> Mask::boundary_pixels() const {
    std::vector<Point> boundary;
    for (const Point& p : pixels_) {
        const bool interior = contains({p.x - 1, p.y}) && contains({p.x + 1, p.y}) &&
                              contains({p.x, p.y - 1}) && contains({p.x, p.y + 1});
        if (!interior) boundary.push_back(p);
    }
    return boundary;
}

Mask decode_rle(std::span<const std::int64_t> counts, int width, int height) {
    check_dimensions(width, height);
    const std::int64_t total = static_cast<std::int64_t>(width) * height;

    std::int64_t sum = 0;
    for (const std::int64_t c : counts) {
        if (c < 0) {
            throw MalformedRleError("rle counts: negative run length " + std::to_string(c));
        }
        sum += c;
        if (sum > total) break;
    }
    if (sum != total) {
        throw MalformedRleError("rle counts: sum " + std::to_string(sum) + " does not match " +
                                std::to_string(width) + "x" + std::to_string(height) + " = " +
                                std::to_string(total));
    }

    std::vector<Point> pixels;
    std::int64_t index = 0;
    bool foreground = false;
    for (const std::int64_t c : counts) {
        if (foreground) {
            for (std::int64_t i = index; i < index + c; ++i) {
                pixels.push_back({i % width, i / width});
            }
        }
        index += c;
        foreground = !foreground;
    }
    return Mask::from_points(width, height, std::move(pixels));
}

std::vector<std::int64_t> encode_rle(const Mask& mask) {
    if (mask.width() <= 0 || mask.height() <= 0) {
        throw InvalidParameterError("mask", "cannot encode a mask without grid dimensions");
    }
    if (!mask.all_in_bounds()) {
        throw InvalidParameterError("mask", "cannot encode out-of-bounds pixels");
    }
    const std::int64_t w = mask.width();
    const std::int64_t total = w * mask.height();

    std::vector<std::int64_t> counts;
    std::int64_t cursor = 0;  // next linear index not yet emitted
    std::size_t i = 0;
    const auto& px = mask.pixels();
    while (i < px.size()) {
        const std::int64_t start = px[i].y * w + px[i].x;
        std::int64_t end = start + 1;
        ++i;
        while (i < px.size() && px[i].y * w + px[i].x == end) {
            ++end;
            ++i;
        }
        counts.push_back(start - cursor);  // background, possibly zero at the front
        counts.push_back(end - start);
        cursor = end;
    }
    if (cursor < total) {
        counts.push_back(total - cursor);
    }
    if (counts.empty()) {
        counts.push_back(total);
    }
    return counts;
}

}  // namespace airtype
