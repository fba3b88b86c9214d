#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "airtype/catalog.hpp"
#include "airtype/mask.hpp"
#include "airtype/photogrammetry.hpp"

namespace airtype {

/// One detected airplane as delivered by an upstream segmentation model.
struct DetectionRecord {
    std::string image_id;
    Mask mask;
    std::optional<std::string> ground_truth;
    ResizeScale resize_scale{1.0};
};

/// A batch of detections sharing one camera and flight altitude.
struct SceneManifest {
    CameraModel camera;
    FlightParams flight;
    std::vector<DetectionRecord> records;
};

/// Reads a P2 (ASCII) or P5 (binary) PGM; any value > 0 is foreground.
Mask load_bitmap(const std::filesystem::path& path);

/// Writes a P5 PGM, foreground 255 / background 0.
void save_bitmap(const Mask& mask, const std::filesystem::path& path);

/// Parses the manifest JSON document. Mask `path` references are resolved
/// relative to the manifest's directory. Schema violations raise
/// ManifestError naming the field.
SceneManifest load_manifest(const std::filesystem::path& path);

/// How save_manifest stores each record's pixels.
enum class MaskStorage {
    PgmFiles,   ///< one `masks/<image_id>.pgm` per record
    InlineRle,  ///< run-length counts embedded in the JSON
};

/// Writes the manifest (and its PGM files for MaskStorage::PgmFiles).
/// Output is byte-deterministic for a given manifest.
void save_manifest(const SceneManifest& manifest, const std::filesystem::path& path,
                   MaskStorage storage);

enum class FindingKind {
    EmptyMask,
    OutOfBounds,
    UnknownType,
    BorderTouching,
};

std::string to_string(FindingKind kind);

/// A non-fatal data-quality observation tied to one record.
struct Finding {
    FindingKind kind;
    std::string image_id;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

/// Pure scan for empty masks, out-of-bounds pixels, unknown ground-truth
/// shortcuts, and masks touching the image border. Never mutates or throws.
std::vector<Finding> validate(const SceneManifest& manifest, const Catalog& catalog);

}  // namespace airtype
