#include "airtype/maskio.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace airtype {

namespace {

constexpr std::int64_t kMaxBitmapPixels = std::int64_t{1} << 30;

/// Reads one whitespace-delimited PGM header token, skipping '#' comments.
std::string next_pgm_token(std::istream& in) {
    std::string token;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c) && c != '#') {
        token.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c == '#') in.unget();
    return token;
}

std::int64_t parse_pgm_int(std::istream& in, const char* what) {
    const std::string token = next_pgm_token(in);
    if (token.empty()) {
        throw MalformedPgmError(std::string("pgm: missing ") + what);
    }
    try {
        std::size_t pos = 0;
        const std::int64_t value = std::stoll(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw MalformedPgmError(std::string("pgm: ") + what + " '" + token + "' is not an integer");
    }
}

}  // namespace

Mask load_bitmap(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFoundError("pgm: cannot open '" + path.string() + "'");
    }

    const std::string magic = next_pgm_token(in);
    if (magic != "P2" && magic != "P5") {
        throw MalformedPgmError("pgm: '" + path.string() + "' has magic '" + magic +
                                "', expected P2 or P5");
    }
    const std::int64_t width = parse_pgm_int(in, "width");
    const std::int64_t height = parse_pgm_int(in, "height");
    if (width <= 0 || height <= 0 || width * height > kMaxBitmapPixels) {
        throw DimensionOverflowError("pgm: unusable dimensions " + std::to_string(width) + "x" +
                                     std::to_string(height) + " in '" + path.string() + "'");
    }
    const std::int64_t maxval = parse_pgm_int(in, "maxval");
    if (maxval <= 0 || maxval > 65535) {
        throw MalformedPgmError("pgm: maxval " + std::to_string(maxval) + " out of range [1, 65535]");
    }

    const int w = static_cast<int>(width);
    const int h = static_cast<int>(height);
    std::vector<Point> pixels;

    if (magic == "P2") {
        for (std::int64_t i = 0; i < width * height; ++i) {
            const std::int64_t value = parse_pgm_int(in, "pixel value");
            if (value > 0) pixels.push_back({i % width, i / width});
        }
    } else {
        // Single whitespace byte separates the header from raw data.
        const std::size_t bytes_per_px = maxval < 256 ? 1 : 2;
        std::vector<char> data(static_cast<std::size_t>(width * height) * bytes_per_px);
        in.read(data.data(), static_cast<std::streamsize>(data.size()));
        if (static_cast<std::size_t>(in.gcount()) != data.size()) {
            throw MalformedPgmError("pgm: truncated pixel data in '" + path.string() + "'");
        }
        for (std::int64_t i = 0; i < width * height; ++i) {
            unsigned value;
            if (bytes_per_px == 1) {
                value = static_cast<unsigned char>(data[static_cast<std::size_t>(i)]);
            } else {
                const auto hi = static_cast<unsigned char>(data[static_cast<std::size_t>(i) * 2]);
                const auto lo = static_cast<unsigned char>(data[static_cast<std::size_t>(i) * 2 + 1]);
                value = (static_cast<unsigned>(hi) << 8) | lo;
            }
            if (value > 0) pixels.push_back({i % width, i / width});
        }
    }
    return Mask::from_points(w, h, std::move(pixels));
}

void save_bitmap(const Mask& mask, const std::filesystem::path& path) {
    if (mask.width() <= 0 || mask.height() <= 0) {
        throw InvalidParameterError("mask", "cannot save a mask without grid dimensions");
    }
    if (!mask.all_in_bounds()) {
        throw InvalidParameterError("mask", "cannot save out-of-bounds pixels");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("pgm: cannot write '" + path.string() + "'");
    }
    out << "P5\n" << mask.width() << ' ' << mask.height() << "\n255\n";
    std::vector<char> row_data(static_cast<std::size_t>(mask.width()) * mask.height(), 0);
    for (const Point& p : mask.pixels()) {
        row_data[static_cast<std::size_t>(p.y) * mask.width() + p.x] = static_cast<char>(0xFF);
    }
    out.write(row_data.data(), static_cast<std::streamsize>(row_data.size()));
    if (!out) {
        throw IoError("pgm: write failed for '" + path.string() + "'");
    }
}

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* key, const std::string& context) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ManifestError("manifest: missing field '" + context + key + "'");
    }
    return obj.at(key);
}

double require_number(const json& obj, const char* key, const std::string& context) {
    const json& value = require_field(obj, key, context);
    if (!value.is_number()) {
        throw ManifestError("manifest: field '" + context + key + "' must be a number");
    }
    return value.get<double>();
}

int require_int(const json& obj, const char* key, const std::string& context) {
    const json& value = require_field(obj, key, context);
    if (!value.is_number_integer()) {
        throw ManifestError("manifest: field '" + context + key + "' must be an integer");
    }
    return value.get<int>();
}

std::string require_string(const json& obj, const char* key, const std::string& context) {
    const json& value = require_field(obj, key, context);
    if (!value.is_string()) {
        throw ManifestError("manifest: field '" + context + key + "' must be a string");
    }
    return value.get<std::string>();
}

Mask parse_record_mask(const json& mask_obj, const std::string& context,
                       const std::filesystem::path& base_dir) {
    if (!mask_obj.is_object()) {
        throw ManifestError("manifest: field '" + context + "' must be an object");
    }
    const bool has_path = mask_obj.contains("path");
    const bool has_rle = mask_obj.contains("rle");
    if (has_path == has_rle) {
        throw ManifestError("manifest: field '" + context +
                            "' must contain exactly one of 'path' or 'rle'");
    }
    if (has_path) {
        const std::string rel = require_string(mask_obj, "path", context + ".");
        return load_bitmap(base_dir / rel);
    }
    const json& rle = require_field(mask_obj, "rle", context + ".");
    const int width = require_int(rle, "width", context + ".rle.");
    const int height = require_int(rle, "height", context + ".rle.");
    const json& counts_json = require_field(rle, "counts", context + ".rle.");
    if (!counts_json.is_array()) {
        throw ManifestError("manifest: field '" + context + ".rle.counts' must be an array");
    }
    std::vector<std::int64_t> counts;
    counts.reserve(counts_json.size());
    for (const json& c : counts_json) {
        if (!c.is_number_integer()) {
            throw ManifestError("manifest: field '" + context + ".rle.counts' must hold integers");
        }
        counts.push_back(c.get<std::int64_t>());
    }
    return decode_rle(counts, width, height);
}

}  // namespace

SceneManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFoundError("manifest: cannot open '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ManifestError("manifest: '" + path.string() + "' is not valid JSON: " + e.what());
    }

    SceneManifest manifest;
    const json& camera = require_field(doc, "camera", "");
    manifest.camera.sensor_width_mm = require_number(camera, "sensor_width_mm", "camera.");
    manifest.camera.sensor_height_mm = require_number(camera, "sensor_height_mm", "camera.");
    manifest.camera.focal_length_mm = require_number(camera, "focal_length_mm", "camera.");
    manifest.camera.image_width_px = require_int(camera, "image_width_px", "camera.");
    manifest.camera.image_height_px = require_int(camera, "image_height_px", "camera.");
    manifest.flight.altitude_m = require_number(doc, "altitude_m", "");
    validate_camera(manifest.camera);
    validate_flight(manifest.flight);

    const json& records = require_field(doc, "records", "");
    if (!records.is_array()) {
        throw ManifestError("manifest: field 'records' must be an array");
    }
    const std::filesystem::path base_dir = path.has_parent_path() ? path.parent_path() : ".";
    std::size_t index = 0;
    for (const json& rec : records) {
        const std::string context = "records[" + std::to_string(index) + "].";
        DetectionRecord record;
        record.image_id = require_string(rec, "image_id", context);
        record.mask = parse_record_mask(require_field(rec, "mask", context), context + "mask", base_dir);
        if (rec.contains("ground_truth")) {
            if (!rec.at("ground_truth").is_string()) {
                throw ManifestError("manifest: field '" + context + "ground_truth' must be a string");
            }
            record.ground_truth = rec.at("ground_truth").get<std::string>();
        }
        record.resize_scale.linear_factor = require_number(rec, "resize_scale", context);
        validate_resize_scale(record.resize_scale);
        manifest.records.push_back(std::move(record));
        ++index;
    }
    return manifest;
}

void save_manifest(const SceneManifest& manifest, const std::filesystem::path& path,
                   MaskStorage storage) {
    const std::filesystem::path base_dir = path.has_parent_path() ? path.parent_path() : ".";
    std::filesystem::create_directories(base_dir);

    json doc;
    doc["camera"] = {
        {"sensor_width_mm", manifest.camera.sensor_width_mm},
        {"sensor_height_mm", manifest.camera.sensor_height_mm},
        {"focal_length_mm", manifest.camera.focal_length_mm},
        {"image_width_px", manifest.camera.image_width_px},
        {"image_height_px", manifest.camera.image_height_px},
    };
    doc["altitude_m"] = manifest.flight.altitude_m;
    doc["records"] = json::array();

    if (storage == MaskStorage::PgmFiles) {
        std::filesystem::create_directories(base_dir / "masks");
    }
    for (const DetectionRecord& record : manifest.records) {
        json rec;
        rec["image_id"] = record.image_id;
        if (storage == MaskStorage::PgmFiles) {
            if (record.image_id.empty() ||
                record.image_id.find_first_of("/\\\0") != std::string::npos) {
                throw IoError("manifest: image_id '" + record.image_id + "' is not usable as a filename");
            }
            const std::string rel = "masks/" + record.image_id + ".pgm";
            save_bitmap(record.mask, base_dir / rel);
            rec["mask"] = {{"path", rel}};
        } else {
            rec["mask"] = {{"rle",
                            {{"width", record.mask.width()},
                             {"height", record.mask.height()},
                             {"counts", encode_rle(record.mask)}}}};
        }
        if (record.ground_truth) {
            rec["ground_truth"] = *record.ground_truth;
        }
        rec["resize_scale"] = record.resize_scale.linear_factor;
        doc["records"].push_back(std::move(rec));
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("manifest: cannot write '" + path.string() + "'");
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError("manifest: write failed for '" + path.string() + "'");
    }
}

std::string to_string(FindingKind kind) {
    switch (kind) {
        case FindingKind::EmptyMask: return "empty-mask";
        case FindingKind::OutOfBounds: return "out-of-bounds";
        case FindingKind::UnknownType: return "unknown-type";
        case FindingKind::BorderTouching: return "border-touching";
    }
    return "unknown";
}

std::vector<Finding> validate(const SceneManifest& manifest, const Catalog& catalog) {
    std::vector<Finding> findings;
    for (const DetectionRecord& record : manifest.records) {
        if (record.mask.empty()) {
            findings.push_back({FindingKind::EmptyMask, record.image_id, "mask has no foreground pixels"});
        }
        if (!record.mask.all_in_bounds()) {
            for (const Point& p : record.mask.pixels()) {
                if (p.x < 0 || p.x >= record.mask.width() || p.y < 0 || p.y >= record.mask.height()) {
                    findings.push_back({FindingKind::OutOfBounds, record.image_id,
                                        "pixel (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                            ") outside " + std::to_string(record.mask.width()) + "x" +
                                            std::to_string(record.mask.height())});
                    break;
                }
            }
        }
        if (record.ground_truth && !catalog.contains(*record.ground_truth)) {
            findings.push_back({FindingKind::UnknownType, record.image_id,
                                "ground truth '" + *record.ground_truth + "' is not in the catalog"});
        }
        if (!record.mask.empty() && record.mask.all_in_bounds() && record.mask.touches_border()) {
            findings.push_back({FindingKind::BorderTouching, record.image_id,
                                "mask touches the image border; the detection may be cropped"});
        }
    }
    return findings;
}

}  // namespace airtype
