#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "airtype/maskio.hpp"

using namespace airtype;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    static std::uint64_t counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("airtype_test_" + tag + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

SceneManifest tiny_manifest() {
    SceneManifest manifest;
    manifest.camera = CameraModel{10.0, 10.0, 10.0, 100, 100};
    manifest.flight = FlightParams{30.0};
    DetectionRecord record;
    record.image_id = "sample_000";
    record.mask = Mask::from_points(8, 8, {{2, 2}, {3, 2}, {4, 2}, {3, 3}});
    record.ground_truth = "CM2";
    record.resize_scale = ResizeScale{1.0};
    manifest.records.push_back(record);
    return manifest;
}

}  // namespace

TEST_CASE("pgm save/load round-trips pixel sets") {
    const fs::path dir = fresh_dir("pgm_roundtrip");
    std::mt19937_64 rng(5);
    std::bernoulli_distribution on(0.4);
    std::vector<Point> pixels;
    for (int y = 0; y < 13; ++y) {
        for (int x = 0; x < 9; ++x) {
            if (on(rng)) pixels.push_back({x, y});
        }
    }
    const Mask mask = Mask::from_points(9, 13, std::move(pixels));
    save_bitmap(mask, dir / "m.pgm");
    CHECK(load_bitmap(dir / "m.pgm") == mask);
}

TEST_CASE("ascii pgm parses comments and whitespace") {
    const fs::path dir = fresh_dir("pgm_ascii");
    write_file(dir / "center.pgm",
               "P2\n# a comment line\n3 3\n255\n0 0 0\n0 255 0  # trailing comment\n0 0 0\n");
    const Mask mask = load_bitmap(dir / "center.pgm");
    CHECK(mask.width() == 3);
    CHECK(mask.height() == 3);
    CHECK(mask.pixels() == std::vector<Point>{{1, 1}});

    write_file(dir / "empty.pgm", "P2\n2 2\n1\n0 0 0 0\n");
    CHECK(load_bitmap(dir / "empty.pgm").empty());
}

TEST_CASE("binary pgm supports two-byte samples") {
    const fs::path dir = fresh_dir("pgm_16bit");
    std::string data = "P5\n2 2\n65535\n";
    const unsigned char samples[] = {0, 0, 0, 1, 0xFF, 0xFF, 0, 0};  // big-endian
    data.append(reinterpret_cast<const char*>(samples), sizeof(samples));
    write_file(dir / "deep.pgm", data);
    const Mask mask = load_bitmap(dir / "deep.pgm");
    CHECK(mask.pixels() == std::vector<Point>{{1, 0}, {0, 1}});
}

TEST_CASE("pgm loader raises distinct errors") {
    const fs::path dir = fresh_dir("pgm_errors");
    CHECK_THROWS_AS(load_bitmap(dir / "missing.pgm"), FileNotFoundError);

    write_file(dir / "magic.pgm", "P6\n2 2\n255\nxxxx");
    CHECK_THROWS_AS(load_bitmap(dir / "magic.pgm"), MalformedPgmError);

    write_file(dir / "dims.pgm", "P2\n0 3\n255\n");
    CHECK_THROWS_AS(load_bitmap(dir / "dims.pgm"), DimensionOverflowError);

    write_file(dir / "huge.pgm", "P2\n99999999 99999999\n255\n");
    CHECK_THROWS_AS(load_bitmap(dir / "huge.pgm"), DimensionOverflowError);

    write_file(dir / "maxval.pgm", "P2\n2 2\n70000\n0 0 0 0\n");
    CHECK_THROWS_AS(load_bitmap(dir / "maxval.pgm"), MalformedPgmError);

    write_file(dir / "truncated.pgm", std::string("P5\n4 4\n255\n") + "ab");
    CHECK_THROWS_AS(load_bitmap(dir / "truncated.pgm"), MalformedPgmError);

    write_file(dir / "notnum.pgm", "P2\ntwo 2\n255\n");
    CHECK_THROWS_AS(load_bitmap(dir / "notnum.pgm"), MalformedPgmError);
}

TEST_CASE("manifest survives an inline-rle round trip") {
    const fs::path dir = fresh_dir("manifest_rle");
    const SceneManifest manifest = tiny_manifest();
    save_manifest(manifest, dir / "manifest.json", MaskStorage::InlineRle);

    const SceneManifest loaded = load_manifest(dir / "manifest.json");
    REQUIRE(loaded.records.size() == 1);
    CHECK(loaded.camera.sensor_width_mm == manifest.camera.sensor_width_mm);
    CHECK(loaded.camera.image_width_px == manifest.camera.image_width_px);
    CHECK(loaded.flight.altitude_m == manifest.flight.altitude_m);
    CHECK(loaded.records[0].image_id == "sample_000");
    CHECK(loaded.records[0].mask == manifest.records[0].mask);
    CHECK(loaded.records[0].ground_truth == "CM2");
    CHECK(loaded.records[0].resize_scale.linear_factor == 1.0);
}

TEST_CASE("manifest with pgm storage resolves paths relative to its directory") {
    const fs::path dir = fresh_dir("manifest_pgm");
    const SceneManifest manifest = tiny_manifest();
    save_manifest(manifest, dir / "manifest.json", MaskStorage::PgmFiles);
    CHECK(fs::exists(dir / "masks" / "sample_000.pgm"));

    const SceneManifest loaded = load_manifest(dir / "manifest.json");
    REQUIRE(loaded.records.size() == 1);
    CHECK(loaded.records[0].mask == manifest.records[0].mask);

    SUBCASE("writing twice produces identical bytes") {
        const fs::path dir2 = fresh_dir("manifest_pgm2");
        save_manifest(manifest, dir2 / "manifest.json", MaskStorage::PgmFiles);
        std::ifstream a(dir / "manifest.json", std::ios::binary);
        std::ifstream b(dir2 / "manifest.json", std::ios::binary);
        const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
        const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
        CHECK(sa == sb);
    }
}

TEST_CASE("manifest slash-bearing image ids are rejected for pgm storage") {
    const fs::path dir = fresh_dir("manifest_badid");
    SceneManifest manifest = tiny_manifest();
    manifest.records[0].image_id = "../escape";
    CHECK_THROWS_AS(save_manifest(manifest, dir / "manifest.json", MaskStorage::PgmFiles), IoError);
    manifest.records[0].image_id = "";
    CHECK_THROWS_AS(save_manifest(manifest, dir / "manifest.json", MaskStorage::PgmFiles), IoError);
}

TEST_CASE("manifest errors name the offending field") {
    const fs::path dir = fresh_dir("manifest_errors");
    const auto expect_error = [&](const char* name, const std::string& body,
                                  const std::string& needle) {
        const fs::path path = dir / name;
        write_file(path, body);
        CHECK_THROWS_WITH_AS(load_manifest(path), doctest::Contains(needle.c_str()), ManifestError);
    };

    CHECK_THROWS_AS(load_manifest(dir / "absent.json"), FileNotFoundError);
    expect_error("bad.json", "{ not json", "not valid JSON");
    expect_error("nocam.json", R"({"altitude_m": 30, "records": []})", "camera");
    expect_error("nofocal.json",
                 R"({"camera": {"sensor_width_mm": 10, "sensor_height_mm": 10,
                     "image_width_px": 100, "image_height_px": 100},
                     "altitude_m": 30, "records": []})",
                 "camera.focal_length_mm");
    expect_error("badrecords.json",
                 R"({"camera": {"sensor_width_mm": 10, "sensor_height_mm": 10,
                     "focal_length_mm": 10, "image_width_px": 100, "image_height_px": 100},
                     "altitude_m": 30, "records": 5})",
                 "records");

    const std::string preamble =
        R"({"camera": {"sensor_width_mm": 10, "sensor_height_mm": 10, "focal_length_mm": 10,
            "image_width_px": 100, "image_height_px": 100}, "altitude_m": 30, "records": [)";
    expect_error("norle.json",
                 preamble + R"({"image_id": "a", "mask": {}, "resize_scale": 1}]})",
                 "records[0].mask");
    expect_error("both.json",
                 preamble + R"({"image_id": "a", "mask": {"path": "x.pgm",
                     "rle": {"width": 2, "height": 2, "counts": [4]}}, "resize_scale": 1}]})",
                 "exactly one");
    expect_error("noscale.json",
                 preamble + R"({"image_id": "a",
                     "mask": {"rle": {"width": 2, "height": 2, "counts": [4]}}}]})",
                 "records[0].resize_scale");
    expect_error("badgt.json",
                 preamble + R"({"image_id": "a",
                     "mask": {"rle": {"width": 2, "height": 2, "counts": [4]}},
                     "ground_truth": 9, "resize_scale": 1}]})",
                 "records[0].ground_truth");
    expect_error("badcounts.json",
                 preamble + R"({"image_id": "a",
                     "mask": {"rle": {"width": 2, "height": 2, "counts": [1.5, 2.5]}},
                     "resize_scale": 1}]})",
                 "records[0].mask.rle.counts");

    // A mask path pointing nowhere surfaces as the file error, not a manifest error.
    write_file(dir / "nofile.json",
               preamble + R"({"image_id": "a", "mask": {"path": "gone.pgm"}, "resize_scale": 1}]})");
    CHECK_THROWS_AS(load_manifest(dir / "nofile.json"), FileNotFoundError);
}

TEST_CASE("validate reports data-quality findings without mutating") {
    SceneManifest manifest = tiny_manifest();

    DetectionRecord empty;
    empty.image_id = "empty_one";
    empty.mask = Mask(8, 8);
    empty.resize_scale = ResizeScale{1.0};
    manifest.records.push_back(empty);

    DetectionRecord oob;
    oob.image_id = "oob_one";
    oob.mask = Mask::from_points(8, 8, {{8, 0}, {1, 1}});
    oob.resize_scale = ResizeScale{1.0};
    manifest.records.push_back(oob);

    DetectionRecord unknown;
    unknown.image_id = "who";
    unknown.mask = Mask::from_points(8, 8, {{4, 4}});
    unknown.ground_truth = "XYZ";
    unknown.resize_scale = ResizeScale{1.0};
    manifest.records.push_back(unknown);

    DetectionRecord cropped;
    cropped.image_id = "cropped";
    cropped.mask = Mask::from_points(8, 8, {{0, 3}, {1, 3}});
    cropped.resize_scale = ResizeScale{1.0};
    manifest.records.push_back(cropped);

    const std::vector<Finding> findings = validate(manifest, Catalog::builtin());
    REQUIRE(findings.size() == 4);

    CHECK(findings[0].kind == FindingKind::EmptyMask);
    CHECK(findings[0].image_id == "empty_one");
    CHECK(findings[1].kind == FindingKind::OutOfBounds);
    CHECK(findings[1].detail == "pixel (8, 0) outside 8x8");
    CHECK(findings[2].kind == FindingKind::UnknownType);
    CHECK(findings[2].image_id == "who");
    CHECK(findings[3].kind == FindingKind::BorderTouching);
    CHECK(findings[3].image_id == "cropped");

    CHECK(validate(manifest, Catalog::builtin()) == findings);  // pure
    CHECK(to_string(FindingKind::EmptyMask) == "empty-mask");
    CHECK(to_string(FindingKind::OutOfBounds) == "out-of-bounds");
    CHECK(to_string(FindingKind::UnknownType) == "unknown-type");
    CHECK(to_string(FindingKind::BorderTouching) == "border-touching");
}
