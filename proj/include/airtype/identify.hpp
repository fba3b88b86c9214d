#pragma once

#include <cstddef>
#include <optional>

#include "airtype/catalog.hpp"
#include "airtype/geometry.hpp"
#include "airtype/mask.hpp"
#include "airtype/maskio.hpp"
#include "airtype/photogrammetry.hpp"

namespace airtype {

/// Physical measurements of one detection.
struct Measurement {
    double length_m = 0.0;
    double area_m2 = 0.0;
    DiameterResult diameter;
    std::size_t pixel_count = 0;
};

/// Outcome of matching a length against the catalog.
struct TypeMatch {
    AircraftSpec predicted;
    double abs_error_m = 0.0;                ///< |length - predicted actual length|
    std::optional<AircraftSpec> runner_up;   ///< absent for singleton catalogs
    double margin_m = 0.0;                   ///< runner-up error minus winner error, >= 0
    bool low_confidence = false;             ///< abs_error_m exceeded the threshold
};

struct Identification {
    Measurement measurement;
    TypeMatch match;
};

struct IdentifyOptions {
    /// Flag low confidence when abs_error_m > threshold * predicted length.
    double low_confidence_threshold = 0.25;
};

/// Ground area covered by the mask:
///   pixel_count * (cm_per_px / 100)^2 * linear_factor^2  [m²]
/// Throws EmptyDetectionError for an empty mask.
double estimate_area(const Mask& mask, const GroundResolution& gsd, const ResizeScale& scale);

/// Full measurement: farthest pixel-center pair over the mask's boundary
/// pixels converted to meters, plus area and pixel count.
/// Throws EmptyDetectionError for an empty mask.
Measurement estimate_length(const Mask& mask, const GroundResolution& gsd, const ResizeScale& scale);

/// Nearest-length lookup. Ties break toward the shorter aircraft, then the
/// lexicographically smaller shortcut. Throws ConfigurationError only via a
/// defective catalog; the catalog type enforces non-emptiness itself.
TypeMatch classify(double length_m, const Catalog& catalog,
                   double low_confidence_threshold = IdentifyOptions{}.low_confidence_threshold);

/// compute_gsd -> estimate_length -> classify for one record. Errors are
/// rethrown carrying the record's image_id.
Identification identify_record(const DetectionRecord& record, const CameraModel& camera,
                               const FlightParams& flight, const Catalog& catalog,
                               const IdentifyOptions& options = {});

}  // namespace airtype
