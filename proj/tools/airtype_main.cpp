#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "airtype/catalog.hpp"
#include "airtype/evaluate.hpp"
#include "airtype/identify.hpp"
#include "airtype/maskio.hpp"
#include "airtype/photogrammetry.hpp"
#include "airtype/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

std::string format2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string format_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

airtype::Catalog load_catalog(const std::string& catalog_path) {
    if (catalog_path.empty()) {
        return airtype::Catalog::builtin();
    }
    return airtype::Catalog::from_csv_file(catalog_path);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw airtype::IoError("cannot write '" + path.string() + "'");
    }
    out << content;
}

struct GsdOptions {
    double sensor_width_mm = 0.0;
    double focal_mm = 0.0;
    double altitude_m = 0.0;
    int image_width_px = 0;
    double sensor_height_mm = 0.0;  // optional; GSD uses the width only
    int image_height_px = 0;
};

int run_gsd(const GsdOptions& opt) {
    airtype::CameraModel camera;
    camera.sensor_width_mm = opt.sensor_width_mm;
    camera.sensor_height_mm = opt.sensor_height_mm > 0.0 ? opt.sensor_height_mm : opt.sensor_width_mm;
    camera.focal_length_mm = opt.focal_mm;
    camera.image_width_px = opt.image_width_px;
    camera.image_height_px = opt.image_height_px > 0 ? opt.image_height_px : opt.image_width_px;

    const airtype::GroundResolution gsd =
        airtype::compute_gsd(camera, airtype::FlightParams{opt.altitude_m});
    const double m_per_px =
        airtype::px_to_meters(1.0, gsd, airtype::ResizeScale{1.0});
    std::cout << format2(gsd.cm_per_px) << " cm/px\n";
    std::cout << "cm_per_px = " << format_full(gsd.cm_per_px) << '\n';
    std::cout << "m_per_px = " << format_full(m_per_px) << '\n';
    return kExitOk;
}

struct IdentifyOptionsCli {
    std::string manifest_path;
    std::string catalog_path;
    std::string format = "text";
    double low_confidence_threshold = 0.25;
    bool verbose = false;
};

struct IdentifyRow {
    std::string image_id;
    std::optional<airtype::Identification> result;
    std::string error;
    bool border_warning = false;
};

int run_identify(const IdentifyOptionsCli& opt) {
    const airtype::SceneManifest manifest = airtype::load_manifest(opt.manifest_path);
    const airtype::Catalog catalog = load_catalog(opt.catalog_path);
    const std::vector<airtype::Finding> findings = airtype::validate(manifest, catalog);
    for (const airtype::Finding& finding : findings) {
        if (opt.verbose || finding.kind != airtype::FindingKind::BorderTouching) {
            std::cerr << "warning: " << airtype::to_string(finding.kind) << " '" << finding.image_id
                      << "': " << finding.detail << '\n';
        }
    }

    const airtype::IdentifyOptions options{opt.low_confidence_threshold};
    std::vector<IdentifyRow> rows;
    bool any_failed = false;
    for (const airtype::DetectionRecord& record : manifest.records) {
        IdentifyRow row;
        row.image_id = record.image_id;
        row.border_warning = !record.mask.empty() && record.mask.all_in_bounds() &&
                             record.mask.touches_border();
        try {
            row.result = airtype::identify_record(record, manifest.camera, manifest.flight,
                                                  catalog, options);
        } catch (const airtype::Error& e) {
            row.error = e.what();
            any_failed = true;
        }
        rows.push_back(std::move(row));
    }

    const auto warnings_text = [](const IdentifyRow& row) {
        std::string text;
        if (row.result && row.result->match.low_confidence) text = "low-confidence";
        if (row.border_warning) text += text.empty() ? "border-touching" : ",border-touching";
        return text;
    };

    if (opt.format == "json") {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["records"] = nlohmann::json::array();
        for (const IdentifyRow& row : rows) {
            nlohmann::json rec;
            rec["image_id"] = row.image_id;
            if (row.result) {
                const airtype::Identification& id = *row.result;
                rec["length_m"] = id.measurement.length_m;
                rec["area_m2"] = id.measurement.area_m2;
                rec["pixel_count"] = id.measurement.pixel_count;
                rec["predicted"] = id.match.predicted.shortcut;
                rec["abs_error_m"] = id.match.abs_error_m;
                rec["margin_m"] = id.match.margin_m;
                if (id.match.runner_up) rec["runner_up"] = id.match.runner_up->shortcut;
                rec["low_confidence"] = id.match.low_confidence;
                rec["border_touching"] = row.border_warning;
            } else {
                rec["error"] = row.error;
            }
            doc["records"].push_back(std::move(rec));
        }
        std::cout << doc.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "image_id,length_m,area_m2,pixel_count,predicted,abs_error_m,margin_m,"
                     "warnings,error\n";
        for (const IdentifyRow& row : rows) {
            std::cout << row.image_id << ',';
            if (row.result) {
                const airtype::Identification& id = *row.result;
                std::cout << format_full(id.measurement.length_m) << ','
                          << format_full(id.measurement.area_m2) << ','
                          << id.measurement.pixel_count << ',' << id.match.predicted.shortcut << ','
                          << format_full(id.match.abs_error_m) << ','
                          << format_full(id.match.margin_m) << ',' << warnings_text(row) << ',';
            } else {
                std::cout << ",,,,,,,\"" << row.error << '"';
            }
            std::cout << '\n';
        }
    } else {
        std::vector<std::vector<std::string>> cells;
        cells.push_back({"image_id", "length_m", "area_m2", "pixels", "predicted", "abs_err_m",
                         "margin_m", "warnings"});
        for (const IdentifyRow& row : rows) {
            if (row.result) {
                const airtype::Identification& id = *row.result;
                cells.push_back({row.image_id, format2(id.measurement.length_m),
                                 format2(id.measurement.area_m2),
                                 std::to_string(id.measurement.pixel_count),
                                 id.match.predicted.shortcut, format2(id.match.abs_error_m),
                                 format2(id.match.margin_m), warnings_text(row)});
            } else {
                cells.push_back({row.image_id, "-", "-", "-", "-", "-", "-", "error: " + row.error});
            }
        }
        std::vector<std::size_t> widths(cells[0].size(), 0);
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        }
        for (const auto& row : cells) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) line += "  ";
                line += row[c];
                if (c + 1 < row.size() && row[c].size() < widths[c]) {
                    line.append(widths[c] - row[c].size(), ' ');
                }
            }
            std::cout << line << '\n';
        }
    }
    return any_failed ? kExitPartial : kExitOk;
}

struct EvaluateOptionsCli {
    std::string manifest_path;
    std::string catalog_path;
    std::string out_json;
    std::string out_text;
    std::string out_csv;
    double low_confidence_threshold = 0.25;
};

int run_evaluate(const EvaluateOptionsCli& opt) {
    const airtype::SceneManifest manifest = airtype::load_manifest(opt.manifest_path);
    const airtype::Catalog catalog = load_catalog(opt.catalog_path);
    const airtype::EvaluationReport report =
        airtype::evaluate_scene(manifest, catalog, airtype::IdentifyOptions{opt.low_confidence_threshold});

    const std::string text = airtype::render_accuracy_table(report) + "\n" +
                             airtype::render_confusion_table(report.matrix);
    std::cout << text;
    std::cout << "Overall average accuracy: "
              << airtype::display_round(report.overall_avg_accuracy_pct) << " %\n";

    if (!opt.out_json.empty()) {
        write_text_file(opt.out_json, airtype::report_to_json(report).dump(2) + "\n");
    }
    if (!opt.out_text.empty()) {
        write_text_file(opt.out_text, text);
    }
    if (!opt.out_csv.empty()) {
        write_text_file(opt.out_csv, airtype::confusion_to_csv(report.matrix));
    }
    return kExitOk;
}

struct SynthOptionsCli {
    std::string out_dir;
    std::string types = "all";
    int count = 10;
    double gsd_cm = 30.0;
    double scale = 1.0;
    std::uint64_t seed = 7;
    std::string shape = "plane";
    double crop_fraction = 0.0;
    double length_m = 0.0;  // single-silhouette mode when > 0
};

int run_synth(const SynthOptionsCli& opt) {
    const airtype::Catalog& catalog = airtype::Catalog::builtin();
    const airtype::GroundResolution gsd{opt.gsd_cm};
    const airtype::ResizeScale scale{opt.scale};
    const airtype::ShapeKind shape = opt.shape == "rectangle" ? airtype::ShapeKind::Rectangle
                                                              : airtype::ShapeKind::StylizedPlane;

    airtype::SynthScene scene;
    if (opt.length_m > 0.0) {
        // One silhouette of the given physical length, labeled by the nearest
        // catalog type so downstream evaluation has a ground truth.
        const airtype::TypeMatch match = airtype::classify(opt.length_m, catalog);
        const double m_per_px = airtype::px_to_meters(1.0, gsd, scale);
        const int side = static_cast<int>(std::ceil(opt.length_m / m_per_px)) + 8;
        scene.gsd = gsd;
        scene.resize_scale = scale;
        scene.image_width_px = side;
        scene.image_height_px = side;
        airtype::Placement placement;
        placement.spec.shortcut = match.predicted.shortcut;
        placement.spec.length_m = opt.length_m;
        placement.spec.aspect_ratio = shape == airtype::ShapeKind::Rectangle ? 0.1 : 0.85;
        placement.spec.shape_kind = shape;
        placement.spec.seed = opt.seed;
        placement.offset_px = airtype::Point{side / 2, side / 2};
        placement.crop_fraction = opt.crop_fraction;
        scene.placements.push_back(std::move(placement));
    } else {
        std::vector<std::string> shortcuts;
        if (opt.types == "all") {
            for (const airtype::AircraftSpec& spec : catalog.entries()) {
                shortcuts.push_back(spec.shortcut);
            }
        } else {
            std::stringstream ss(opt.types);
            std::string token;
            while (std::getline(ss, token, ',')) {
                if (!token.empty()) shortcuts.push_back(token);
            }
            if (shortcuts.empty()) {
                throw airtype::ConfigurationError("synth: --types must name at least one type");
            }
        }
        scene = airtype::make_scene(catalog, shortcuts, opt.count, gsd, scale, opt.seed, shape,
                                    opt.crop_fraction);
    }

    const std::filesystem::path manifest_path = airtype::generate_manifest(scene, opt.out_dir);
    std::cout << manifest_path.string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"airtype: aircraft type identification from aerial instance masks"};
    app.require_subcommand(1);

    GsdOptions gsd_opt;
    CLI::App* gsd_cmd = app.add_subcommand("gsd", "compute ground sample distance");
    gsd_cmd->add_option("--sensor-width-mm", gsd_opt.sensor_width_mm, "sensor width in mm")->required();
    gsd_cmd->add_option("--focal-mm", gsd_opt.focal_mm, "focal length in mm")->required();
    gsd_cmd->add_option("--image-width-px", gsd_opt.image_width_px, "image width in px")->required();
    gsd_cmd->add_option("--altitude-m", gsd_opt.altitude_m, "flight altitude in m")->required();
    gsd_cmd->add_option("--sensor-height-mm", gsd_opt.sensor_height_mm,
                        "sensor height in mm (unused by the computation)");
    gsd_cmd->add_option("--image-height-px", gsd_opt.image_height_px,
                        "image height in px (unused by the computation)");

    IdentifyOptionsCli identify_opt;
    CLI::App* identify_cmd = app.add_subcommand("identify", "measure and classify manifest records");
    identify_cmd->add_option("manifest", identify_opt.manifest_path, "scene manifest JSON")->required();
    identify_cmd->add_option("--catalog", identify_opt.catalog_path, "catalog CSV (default: built-in)");
    identify_cmd->add_option("--format", identify_opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    identify_cmd->add_option("--low-confidence-threshold", identify_opt.low_confidence_threshold,
                             "relative error above which a match is flagged");
    identify_cmd->add_flag("-v,--verbose", identify_opt.verbose, "print all validation findings");

    EvaluateOptionsCli evaluate_opt;
    CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "score a manifest against ground truth");
    evaluate_cmd->add_option("manifest", evaluate_opt.manifest_path, "scene manifest JSON")->required();
    evaluate_cmd->add_option("--catalog", evaluate_opt.catalog_path, "catalog CSV (default: built-in)");
    evaluate_cmd->add_option("--out-json", evaluate_opt.out_json, "write the JSON report here");
    evaluate_cmd->add_option("--out-text", evaluate_opt.out_text, "write the text tables here");
    evaluate_cmd->add_option("--out-csv", evaluate_opt.out_csv, "write the confusion matrix CSV here");
    evaluate_cmd->add_option("--low-confidence-threshold", evaluate_opt.low_confidence_threshold,
                             "relative error above which a match is flagged");

    SynthOptionsCli synth_opt;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic labeled dataset");
    synth_cmd->add_option("--out", synth_opt.out_dir, "output directory")->required();
    synth_cmd->add_option("--types", synth_opt.types, "'all' or comma-separated shortcuts");
    synth_cmd->add_option("--count", synth_opt.count, "instances per type");
    synth_cmd->add_option("--gsd-cm", synth_opt.gsd_cm, "ground resolution in cm/px");
    synth_cmd->add_option("--scale", synth_opt.scale, "resize scale (original/processed)");
    synth_cmd->add_option("--seed", synth_opt.seed, "generation seed");
    synth_cmd->add_option("--shape", synth_opt.shape, "plane | rectangle")
        ->check(CLI::IsMember({"plane", "rectangle"}));
    synth_cmd->add_option("--crop-fraction", synth_opt.crop_fraction,
                          "push this fraction of one silhouette past the border");
    synth_cmd->add_option("--length-m", synth_opt.length_m,
                          "generate a single silhouette of this length instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand(gsd_cmd)) return run_gsd(gsd_opt);
        if (app.got_subcommand(identify_cmd)) return run_identify(identify_opt);
        if (app.got_subcommand(evaluate_cmd)) return run_evaluate(evaluate_opt);
        if (app.got_subcommand(synth_cmd)) return run_synth(synth_opt);
    } catch (const airtype::EvaluationInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const airtype::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
