#include "airtype/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace airtype {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_spec(const SilhouetteSpec& spec) {
    if (!std::isfinite(spec.length_m) || spec.length_m <= 0.0) {
        throw InvalidParameterError("length_m", "must be positive and finite, got " +
                                                    std::to_string(spec.length_m));
    }
    if (!std::isfinite(spec.aspect_ratio) || spec.aspect_ratio <= 0.0 || spec.aspect_ratio > 1.0) {
        throw InvalidParameterError("aspect_ratio", "must be in (0, 1], got " +
                                                        std::to_string(spec.aspect_ratio));
    }
    if (!std::isfinite(spec.rotation_deg) || spec.rotation_deg < 0.0 || spec.rotation_deg >= 360.0) {
        throw InvalidParameterError("rotation_deg", "must be in [0, 360), got " +
                                                        std::to_string(spec.rotation_deg));
    }
}

Vec2 rotate(const Vec2& v, double rotation_deg) {
    // Quarter turns permute lattice directions exactly; never run them
    // through trig, or sin/cos rounding leaks into the raster.
    if (std::fmod(rotation_deg, 90.0) == 0.0) {
        const int k = static_cast<int>(rotation_deg / 90.0) & 3;
        Vec2 r = v;
        for (int i = 0; i < k; ++i) r = Vec2{-r.y, r.x};
        return r;
    }
    const double rad = rotation_deg * kPi / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    return Vec2{v.x * c - v.y * s, v.x * s + v.y * c};
}

}  // namespace

std::vector<Vec2> silhouette_polygon(const SilhouetteSpec& spec) {
    validate_spec(spec);
    const double len = spec.length_m;

    if (spec.shape_kind == ShapeKind::Rectangle) {
        // Sized so the diagonal, the true farthest chord, is exactly len.
        const double a = spec.aspect_ratio;
        const double long_half = len / (2.0 * std::sqrt(1.0 + a * a));
        const double wide_half = a * long_half;
        return {{long_half, -wide_half},
                {long_half, wide_half},
                {-long_half, wide_half},
                {-long_half, -wide_half}};
    }

    // Stylized plane, proportions of the unit-length outline. The jitter
    // ranges keep every cross chord strictly shorter than nose-to-tail.
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double fuselage_half = 0.055 + 0.005 * unit(rng);
    const double shoulder_x = 0.40 + 0.01 * unit(rng);
    const double wing_le_x = 0.12 + 0.01 * unit(rng);
    const double wing_tip_x = -0.07 + 0.01 * unit(rng);
    const double wing_te_x = -0.22 + 0.01 * unit(rng);
    const double tail_le_x = -0.40 + 0.005 * unit(rng);
    const double tail_tip_y = 0.16 + 0.005 * unit(rng);
    const double tail_tip_x = -0.47;
    const double tail_te_x = -0.49;
    const double span_half = spec.aspect_ratio / 2.0;

    std::vector<Vec2> outline = {
        {0.5, 0.0},  // nose; the anchor pixel sits just behind this tip
        {shoulder_x, fuselage_half},
        {wing_le_x, fuselage_half},
        {wing_tip_x, span_half},
        {wing_te_x, fuselage_half},
        {tail_le_x, fuselage_half},
        {tail_tip_x, tail_tip_y},
        {tail_te_x, fuselage_half},
        {-0.5, 0.0},  // tail
        {tail_te_x, -fuselage_half},
        {tail_tip_x, -tail_tip_y},
        {tail_le_x, -fuselage_half},
        {wing_te_x, -fuselage_half},
        {wing_tip_x, -span_half},
        {wing_le_x, -fuselage_half},
        {shoulder_x, -fuselage_half},
    };
    for (Vec2& v : outline) {
        v.x *= len;
        v.y *= len;
    }
    return outline;
}

double silhouette_area_m2(const SilhouetteSpec& spec) {
    const std::vector<Vec2> poly = silhouette_polygon(spec);
    double twice_area = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        twice_area += a.x * b.y - a.y * b.x;
    }
    return std::abs(twice_area) / 2.0;
}

double silhouette_perimeter_m(const SilhouetteSpec& spec) {
    const std::vector<Vec2> poly = silhouette_polygon(spec);
    double perimeter = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        perimeter += std::hypot(b.x - a.x, b.y - a.y);
    }
    return perimeter;
}

namespace {

/// Inclusive point-in-polygon: boundary hits count as inside so that exact
/// quarter-turn rotations keep the pixel set symmetric.
bool point_in_polygon(double px, double py, const std::vector<Vec2>& poly) {
    constexpr double kEps = 1e-9;
    bool inside = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        const double cross_v = (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
        if (std::abs(cross_v) <= kEps &&
            px >= std::min(a.x, b.x) - kEps && px <= std::max(a.x, b.x) + kEps &&
            py >= std::min(a.y, b.y) - kEps && py <= std::max(a.y, b.y) + kEps) {
            return true;
        }
        if ((a.y > py) != (b.y > py)) {
            const double x_int = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
            if (px < x_int) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

Mask rasterize(const SilhouetteSpec& spec, const GroundResolution& gsd, const ResizeScale& scale,
               Point offset_px, int image_width_px, int image_height_px, double crop_fraction) {
    validate_spec(spec);
    if (!std::isfinite(crop_fraction) || crop_fraction < 0.0 || crop_fraction >= 1.0) {
        throw InvalidParameterError("crop_fraction", "must be in [0, 1), got " +
                                                         std::to_string(crop_fraction));
    }
    const double m_per_px = px_to_meters(1.0, gsd, scale);
    if (spec.length_m / m_per_px < 2.0) {
        const double coarsest_cm = 100.0 * spec.length_m / (2.0 * scale.linear_factor);
        std::ostringstream msg;
        msg << "silhouette '" << spec.shortcut << "': " << spec.length_m << " m spans fewer than 2 px at "
            << gsd.cm_per_px << " cm/px (scale " << scale.linear_factor
            << "); coarsest usable gsd is " << coarsest_cm << " cm/px";
        throw TooSmallError(msg.str());
    }

    // Pixel-space outline. The anchor, an interior axis point 0.25 px behind
    // the nose tip, is translated onto an exact pixel center: the nose pixel
    // is then guaranteed and the tip-to-tail sampling loss stays small.
    std::vector<Vec2> poly = silhouette_polygon(spec);
    const Vec2 anchor_rel = rotate({spec.length_m / 2.0 - 0.25 * m_per_px, 0.0}, spec.rotation_deg);
    for (Vec2& v : poly) {
        const Vec2 r = rotate(v, spec.rotation_deg);
        v = {r.x / m_per_px, r.y / m_per_px};
    }
    const Vec2 anchor_px{anchor_rel.x / m_per_px, anchor_rel.y / m_per_px};
    const double target_x = static_cast<double>(offset_px.x) + 0.5 + anchor_px.x;
    const double target_y = static_cast<double>(offset_px.y) + 0.5 + anchor_px.y;
    double shift_x = (std::floor(target_x) + 0.5) - anchor_px.x;
    double shift_y = (std::floor(target_y) + 0.5) - anchor_px.y;

    double min_x = anchor_px.x, max_x = anchor_px.x, min_y = anchor_px.y, max_y = anchor_px.y;
    for (const Vec2& v : poly) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    if (crop_fraction > 0.0) {
        // Push a whole-pixel amount past the left border; integer shifts keep
        // the anchor on a pixel center.
        const double width = max_x - min_x;
        shift_x -= std::ceil(min_x + shift_x + crop_fraction * width);
    } else {
        if (min_x + shift_x < 0.0 || max_x + shift_x > image_width_px ||
            min_y + shift_y < 0.0 || max_y + shift_y > image_height_px) {
            throw InvalidParameterError("offset_px",
                                        "silhouette does not fit the image; enable crop_fraction "
                                        "to corrupt it deliberately");
        }
    }
    for (Vec2& v : poly) {
        v.x += shift_x;
        v.y += shift_y;
    }

    const int x_lo = std::max(0, static_cast<int>(std::floor(min_x + shift_x)) - 1);
    const int x_hi = std::min(image_width_px - 1, static_cast<int>(std::ceil(max_x + shift_x)) + 1);
    const int y_lo = std::max(0, static_cast<int>(std::floor(min_y + shift_y)) - 1);
    const int y_hi = std::min(image_height_px - 1, static_cast<int>(std::ceil(max_y + shift_y)) + 1);

    std::vector<Point> pixels;
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            if (point_in_polygon(x + 0.5, y + 0.5, poly)) {
                pixels.push_back({x, y});
            }
        }
    }
    return Mask::from_points(image_width_px, image_height_px, std::move(pixels));
}

Mask rasterize(const SilhouetteSpec& spec, const GroundResolution& gsd, const ResizeScale& scale) {
    const double m_per_px = px_to_meters(1.0, gsd, scale);
    const int side = static_cast<int>(std::ceil(spec.length_m / m_per_px)) + 6;
    return rasterize(spec, gsd, scale, Point{side / 2, side / 2}, side, side);
}

SynthScene make_scene(const Catalog& catalog, std::span<const std::string> shortcuts, int per_type,
                      const GroundResolution& gsd, const ResizeScale& resize_scale,
                      std::uint64_t seed, ShapeKind shape_kind, double crop_fraction) {
    if (per_type <= 0) {
        throw InvalidParameterError("per_type", "must be positive, got " + std::to_string(per_type));
    }
    const double m_per_px = px_to_meters(1.0, gsd, resize_scale);

    double max_len = 0.0;
    for (const std::string& shortcut : shortcuts) {
        max_len = std::max(max_len, catalog.at(shortcut).actual_length_m);
    }
    const int side = static_cast<int>(std::ceil(max_len / m_per_px)) + 8;

    SynthScene scene;
    scene.gsd = gsd;
    scene.resize_scale = resize_scale;
    scene.image_width_px = side;
    scene.image_height_px = side;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 360.0);
    for (const std::string& shortcut : shortcuts) {
        const AircraftSpec& aircraft = catalog.at(shortcut);
        for (int i = 0; i < per_type; ++i) {
            Placement placement;
            placement.spec.shortcut = aircraft.shortcut;
            placement.spec.length_m = aircraft.actual_length_m;
            placement.spec.aspect_ratio = shape_kind == ShapeKind::Rectangle ? 0.1 : 0.85;
            placement.spec.rotation_deg = angle(rng);
            placement.spec.shape_kind = shape_kind;
            placement.spec.seed = rng();
            placement.offset_px = Point{side / 2, side / 2};
            if (crop_fraction > 0.0 && scene.placements.empty()) {
                placement.crop_fraction = crop_fraction;
            }
            scene.placements.push_back(std::move(placement));
        }
    }
    return scene;
}

std::filesystem::path generate_manifest(const SynthScene& scene, const std::filesystem::path& out_dir) {
    SceneManifest manifest;
    // Synthetic camera chosen so compute_gsd returns scene.gsd exactly:
    // equal sensor and focal lengths cancel, and a 100 px wide frame turns
    // altitude meters straight into cm/px.
    manifest.camera = CameraModel{10.0, 10.0, 10.0, 100, 100};
    manifest.flight = FlightParams{scene.gsd.cm_per_px};

    std::map<std::string, int> sequence;
    for (const Placement& placement : scene.placements) {
        DetectionRecord record;
        const int index = sequence[placement.spec.shortcut]++;
        std::ostringstream id;
        id << placement.spec.shortcut << '_';
        id.width(3);
        id.fill('0');
        id << index;
        record.image_id = id.str();
        record.mask = rasterize(placement.spec, scene.gsd, scene.resize_scale, placement.offset_px,
                                scene.image_width_px, scene.image_height_px, placement.crop_fraction);
        record.ground_truth = placement.spec.shortcut;
        record.resize_scale = scene.resize_scale;
        manifest.records.push_back(std::move(record));
    }

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path manifest_path = out_dir / "manifest.json";
    save_manifest(manifest, manifest_path, MaskStorage::PgmFiles);
    return manifest_path;
}

}  // namespace airtype
