#pragma once

#include "airtype/errors.hpp"

namespace airtype {

/// Camera intrinsics of the capture platform.
struct CameraModel {
    double sensor_width_mm = 0.0;
    double sensor_height_mm = 0.0;
    double focal_length_mm = 0.0;
    int image_width_px = 0;
    int image_height_px = 0;
};

/// Scene acquisition parameters. Altitude is uniform per scene (nadir view).
struct FlightParams {
    double altitude_m = 0.0;
};

/// Ground length covered by one pixel side, in centimeters.
struct GroundResolution {
    double cm_per_px = 0.0;
};

/// Linear ratio original-width / processed-width. 1 means masks were produced
/// at capture resolution; 15 means the image was shrunk 15x per axis first.
struct ResizeScale {
    double linear_factor = 1.0;
};

/// Throws InvalidParameterError if any field violates its invariant.
void validate_camera(const CameraModel& camera);
void validate_flight(const FlightParams& flight);
void validate_resize_scale(const ResizeScale& scale);

/// Ground sample distance:
///   cm_per_px = sensor_width_mm * altitude_m * 100 / (focal_length_mm * image_width_px)
/// Linear in altitude; invariant under scaling focal length and sensor width together.
GroundResolution compute_gsd(const CameraModel& camera, const FlightParams& flight);

/// Convert a pixel distance measured in the processed image to ground meters.
/// This is the only place the cm-to-m factor lives.
double px_to_meters(double dist_px, const GroundResolution& gsd, const ResizeScale& scale);

/// Exact inverse of px_to_meters; used by the silhouette generator.
double meters_to_px(double meters, const GroundResolution& gsd, const ResizeScale& scale);

}  // namespace airtype
