#include "airtype/identify.hpp"

#include <cmath>

namespace airtype {

double estimate_area(const Mask& mask, const GroundResolution& gsd, const ResizeScale& scale) {
    if (mask.empty()) {
        throw EmptyDetectionError("");
    }
    const double m_per_px = px_to_meters(1.0, gsd, scale);
    return static_cast<double>(mask.pixel_count()) * m_per_px * m_per_px;
}

Measurement estimate_length(const Mask& mask, const GroundResolution& gsd, const ResizeScale& scale) {
    if (mask.empty()) {
        throw EmptyDetectionError("");
    }
    Measurement m;
    m.pixel_count = mask.pixel_count();
    m.area_m2 = estimate_area(mask, gsd, scale);
    m.diameter = farthest_pair(mask.boundary_pixels());
    m.length_m = px_to_meters(m.diameter.dist_px, gsd, scale);
    return m;
}

TypeMatch classify(double length_m, const Catalog& catalog, double low_confidence_threshold) {
    if (!(length_m >= 0.0) || !std::isfinite(length_m)) {
        throw InvalidParameterError("length_m", "must be non-negative and finite, got " +
                                                    std::to_string(length_m));
    }
    if (!(low_confidence_threshold >= 0.0)) {
        throw InvalidParameterError("low_confidence_threshold", "must be non-negative");
    }

    // The catalog is sorted by length ascending with ties by shortcut, so a
    // strict-less scan lands on the tie-rule winner by construction.
    const AircraftSpec* winner = nullptr;
    const AircraftSpec* runner_up = nullptr;
    double winner_err = 0.0;
    double runner_err = 0.0;
    for (const AircraftSpec& spec : catalog.entries()) {
        const double err = std::abs(length_m - spec.actual_length_m);
        if (winner == nullptr || err < winner_err) {
            runner_up = winner;
            runner_err = winner_err;
            winner = &spec;
            winner_err = err;
        } else if (runner_up == nullptr || err < runner_err) {
            runner_up = &spec;
            runner_err = err;
        }
    }

    TypeMatch match;
    match.predicted = *winner;
    match.abs_error_m = winner_err;
    if (runner_up != nullptr) {
        match.runner_up = *runner_up;
        match.margin_m = runner_err - winner_err;
    }
    match.low_confidence = winner_err > low_confidence_threshold * winner->actual_length_m;
    return match;
}

Identification identify_record(const DetectionRecord& record, const CameraModel& camera,
                               const FlightParams& flight, const Catalog& catalog,
                               const IdentifyOptions& options) {
    if (record.mask.empty()) {
        throw EmptyDetectionError(record.image_id);
    }
    try {
        const GroundResolution gsd = compute_gsd(camera, flight);
        Identification result;
        result.measurement = estimate_length(record.mask, gsd, record.resize_scale);
        result.match = classify(result.measurement.length_m, catalog, options.low_confidence_threshold);
        return result;
    } catch (const EmptyDetectionError&) {
        throw EmptyDetectionError(record.image_id);
    } catch (const Error& e) {
        throw Error("record '" + record.image_id + "': " + e.what());
    }
}

}  // namespace airtype
