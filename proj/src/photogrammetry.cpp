#include "airtype/photogrammetry.hpp"

#include <cmath>
#include <string>

namespace airtype {

namespace {

void require_positive_finite(double value, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw InvalidParameterError(field, "must be positive and finite, got " + std::to_string(value));
    }
}

void require_positive_int(int value, const char* field) {
    if (value <= 0) {
        throw InvalidParameterError(field, "must be a positive integer, got " + std::to_string(value));
    }
}

}  // namespace

void validate_camera(const CameraModel& camera) {
    require_positive_finite(camera.sensor_width_mm, "sensor_width_mm");
    require_positive_finite(camera.sensor_height_mm, "sensor_height_mm");
    require_positive_finite(camera.focal_length_mm, "focal_length_mm");
    require_positive_int(camera.image_width_px, "image_width_px");
    require_positive_int(camera.image_height_px, "image_height_px");
}

void validate_flight(const FlightParams& flight) {
    require_positive_finite(flight.altitude_m, "altitude_m");
}

void validate_resize_scale(const ResizeScale& scale) {
    if (!std::isfinite(scale.linear_factor) || scale.linear_factor < 1.0) {
        throw InvalidParameterError("resize_scale",
                                    "linear factor must be >= 1, got " + std::to_string(scale.linear_factor));
    }
}

GroundResolution compute_gsd(const CameraModel& camera, const FlightParams& flight) {
    validate_camera(camera);
    validate_flight(flight);
    const double cm_per_px = camera.sensor_width_mm * flight.altitude_m * 100.0 /
                             (camera.focal_length_mm * static_cast<double>(camera.image_width_px));
    return GroundResolution{cm_per_px};
}

double px_to_meters(double dist_px, const GroundResolution& gsd, const ResizeScale& scale) {
    if (!(dist_px >= 0.0) || !std::isfinite(dist_px)) {
        throw InvalidParameterError("dist_px", "must be non-negative and finite, got " + std::to_string(dist_px));
    }
    require_positive_finite(gsd.cm_per_px, "cm_per_px");
    validate_resize_scale(scale);
    return dist_px * scale.linear_factor * gsd.cm_per_px / 100.0;
}

double meters_to_px(double meters, const GroundResolution& gsd, const ResizeScale& scale) {
    if (!(meters >= 0.0) || !std::isfinite(meters)) {
        throw InvalidParameterError("meters", "must be non-negative and finite, got " + std::to_string(meters));
    }
    return meters / px_to_meters(1.0, gsd, scale);
}

}  // namespace airtype
