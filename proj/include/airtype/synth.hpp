#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "airtype/catalog.hpp"
#include "airtype/mask.hpp"
#include "airtype/maskio.hpp"
#include "airtype/photogrammetry.hpp"

namespace airtype {

enum class ShapeKind {
    Rectangle,      ///< plain slab; the diagonal is the diameter
    StylizedPlane,  ///< fuselage + swept wings + tailplane; nose-to-tail is the diameter
};

/// Recipe for one synthetic silhouette. The generated polygon's true diameter
/// equals length_m exactly, whatever the shape, so estimated lengths can be
/// checked against known ground truth.
struct SilhouetteSpec {
    std::string shortcut;
    double length_m = 0.0;
    double aspect_ratio = 0.85;  ///< widest cross extent / length, in (0, 1]
    double rotation_deg = 0.0;   ///< [0, 360); multiples of 90 rotate the lattice exactly
    ShapeKind shape_kind = ShapeKind::StylizedPlane;
    std::uint64_t seed = 0;      ///< jitters the plane's proportions slightly
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// One silhouette placed in a scene image.
struct Placement {
    SilhouetteSpec spec;
    Point offset_px;              ///< approximate silhouette center, pixels
    double crop_fraction = 0.0;   ///< fraction of the extent shifted past the left border
};

struct SynthScene {
    GroundResolution gsd;
    ResizeScale resize_scale{1.0};
    int image_width_px = 0;
    int image_height_px = 0;
    std::vector<Placement> placements;
};

/// Shape outline in meters, centered at the origin, nose toward +x, not yet
/// rotated. Diameter is exactly length_m.
std::vector<Vec2> silhouette_polygon(const SilhouetteSpec& spec);

/// Shoelace area / edge-length sum of the silhouette outline (rotation
/// independent); the analytic ground truth for the rasterized estimates.
double silhouette_area_m2(const SilhouetteSpec& spec);
double silhouette_perimeter_m(const SilhouetteSpec& spec);

/// Rasterizes the rotated silhouette into an image grid. Foreground = pixel
/// centers inside the polygon. Placement keeps an interior point just behind
/// the nose tip on a pixel center, so the measured tip-to-tail length stays
/// within two pixels of length_m. With crop_fraction = 0 the silhouette must
/// fit the image; a positive fraction deliberately shifts it past the left
/// border. Throws TooSmallError when length_m spans fewer than 2 px.
Mask rasterize(const SilhouetteSpec& spec, const GroundResolution& gsd, const ResizeScale& scale,
               Point offset_px, int image_width_px, int image_height_px, double crop_fraction = 0.0);

/// Convenience: rasterize centered into a self-sized square image.
Mask rasterize(const SilhouetteSpec& spec, const GroundResolution& gsd, const ResizeScale& scale);

/// Builds a scene of per_type instances of each listed catalog type with
/// seeded rotations and proportion jitter. If crop_fraction > 0 it is applied
/// to the first placement only.
SynthScene make_scene(const Catalog& catalog, std::span<const std::string> shortcuts, int per_type,
                      const GroundResolution& gsd, const ResizeScale& resize_scale,
                      std::uint64_t seed, ShapeKind shape_kind = ShapeKind::StylizedPlane,
                      double crop_fraction = 0.0);

/// Writes PGM masks plus the manifest JSON under out_dir and returns the
/// manifest path. Byte-identical across runs for the same scene.
std::filesystem::path generate_manifest(const SynthScene& scene, const std::filesystem::path& out_dir);

}  // namespace airtype
