#include "airtype/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace airtype {

int ConfusionMatrix::trace() const {
    int sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += counts[i][i];
    return sum;
}

int ConfusionMatrix::row_sum(std::size_t truth) const {
    return std::accumulate(counts[truth].begin(), counts[truth].end(), 0);
}

int ConfusionMatrix::total() const {
    int sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += row_sum(i);
    return sum;
}

double detected_length_avg(std::span<const double> lengths_m) {
    if (lengths_m.empty()) {
        throw InvalidParameterError("lengths", "mean of an empty list is undefined");
    }
    double sum = 0.0;
    for (const double x : lengths_m) sum += x;
    return sum / static_cast<double>(lengths_m.size());
}

double length_accuracy_pct(double detected_avg_m, double actual_length_m) {
    if (!std::isfinite(actual_length_m) || actual_length_m <= 0.0) {
        throw InvalidParameterError("actual_length_m", "must be positive and finite, got " +
                                                           std::to_string(actual_length_m));
    }
    if (!std::isfinite(detected_avg_m) || detected_avg_m < 0.0) {
        throw InvalidParameterError("detected_avg_m", "must be non-negative and finite, got " +
                                                          std::to_string(detected_avg_m));
    }
    const double rel_err = std::abs(detected_avg_m - actual_length_m) / actual_length_m;
    return 100.0 * std::max(0.0, 1.0 - rel_err);
}

long long display_round(double value) {
    return std::llround(value);  // rounds half away from zero
}

ConfusionMatrix build_confusion(std::span<const std::pair<std::string, std::string>> truth_predicted,
                                const Catalog& catalog) {
    ConfusionMatrix matrix;
    std::unordered_map<std::string, std::size_t> index;
    for (const AircraftSpec& spec : catalog.entries()) {
        index.emplace(spec.shortcut, matrix.labels.size());
        matrix.labels.push_back(spec.shortcut);
    }
    matrix.counts.assign(matrix.labels.size(), std::vector<int>(matrix.labels.size(), 0));

    for (const auto& [truth, predicted] : truth_predicted) {
        const auto t = index.find(truth);
        if (t == index.end()) {
            throw ConfigurationError("confusion: unknown ground-truth shortcut '" + truth + "'");
        }
        const auto p = index.find(predicted);
        if (p == index.end()) {
            throw ConfigurationError("confusion: unknown predicted shortcut '" + predicted + "'");
        }
        ++matrix.counts[t->second][p->second];
    }
    return matrix;
}

EvaluationReport evaluate_scene(const SceneManifest& manifest, const Catalog& catalog,
                                const IdentifyOptions& options) {
    if (manifest.records.empty()) {
        throw EvaluationInputError("evaluate: manifest has no records", {});
    }
    std::vector<std::string> missing;
    for (const DetectionRecord& record : manifest.records) {
        if (!record.ground_truth) missing.push_back(record.image_id);
    }
    if (!missing.empty()) {
        std::string message = "evaluate: " + std::to_string(missing.size()) +
                              " record(s) missing ground_truth:";
        for (const std::string& id : missing) message += " '" + id + "'";
        throw EvaluationInputError(message, std::move(missing));
    }
    for (const DetectionRecord& record : manifest.records) {
        if (!catalog.contains(*record.ground_truth)) {
            throw ConfigurationError("evaluate: record '" + record.image_id + "' has ground truth '" +
                                     *record.ground_truth + "' not present in the catalog");
        }
    }

    EvaluationReport report;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::unordered_map<std::string, std::vector<double>> lengths_by_type;
    for (const DetectionRecord& record : manifest.records) {
        const Identification id = identify_record(record, manifest.camera, manifest.flight,
                                                  catalog, options);
        pairs.emplace_back(*record.ground_truth, id.match.predicted.shortcut);
        lengths_by_type[*record.ground_truth].push_back(id.measurement.length_m);
        report.records.push_back({record.image_id, *record.ground_truth,
                                  id.match.predicted.shortcut, id.measurement.length_m});
    }

    // The report must not depend on record order: per-type samples are summed
    // in sorted order and the record list is keyed by image_id.
    std::sort(report.records.begin(), report.records.end(),
              [](const EvaluationReport::RecordResult& a, const EvaluationReport::RecordResult& b) {
                  return std::tie(a.image_id, a.ground_truth, a.length_m) <
                         std::tie(b.image_id, b.ground_truth, b.length_m);
              });

    double accuracy_sum = 0.0;
    for (const AircraftSpec& spec : catalog.entries()) {
        const auto it = lengths_by_type.find(spec.shortcut);
        if (it == lengths_by_type.end()) {
            report.types_without_records.push_back(spec.shortcut);
            continue;
        }
        std::vector<double>& lengths = it->second;
        std::sort(lengths.begin(), lengths.end());
        LengthAccuracyRow row;
        row.shortcut = spec.shortcut;
        row.detected_avg_m = detected_length_avg(lengths);
        row.actual_length_m = spec.actual_length_m;
        row.accuracy_pct = length_accuracy_pct(row.detected_avg_m, row.actual_length_m);
        row.n = static_cast<int>(lengths.size());
        accuracy_sum += row.accuracy_pct;
        report.rows.push_back(std::move(row));
    }
    report.overall_avg_accuracy_pct =
        report.rows.empty() ? 0.0 : accuracy_sum / static_cast<double>(report.rows.size());
    report.matrix = build_confusion(pairs, catalog);

    report.findings = validate(manifest, catalog);
    std::sort(report.findings.begin(), report.findings.end(),
              [](const Finding& a, const Finding& b) {
                  return std::tie(a.image_id, a.kind, a.detail) < std::tie(b.image_id, b.kind, b.detail);
              });
    return report;
}

namespace {

std::string fixed2(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << value;
    return out.str();
}

void append_padded(std::string& out, const std::string& cell, std::size_t width, bool right_align) {
    if (!right_align) out += cell;
    if (cell.size() < width) out.append(width - cell.size(), ' ');
    if (right_align) out += cell;
}

std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            append_padded(line, row[c], widths[c], c > 0);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render_accuracy_table(const EvaluationReport& report) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"Plane", "Detected avg (m)", "Actual (m)", "Accuracy %", "Records"});
    for (const LengthAccuracyRow& row : report.rows) {
        cells.push_back({row.shortcut, fixed2(row.detected_avg_m), fixed2(row.actual_length_m),
                         std::to_string(display_round(row.accuracy_pct)), std::to_string(row.n)});
    }
    cells.push_back({"Average", "", "", std::to_string(display_round(report.overall_avg_accuracy_pct)),
                     ""});
    std::string out = render_grid(cells);
    if (!report.types_without_records.empty()) {
        out += "No records for:";
        for (const std::string& shortcut : report.types_without_records) {
            out += ' ';
            out += shortcut;
        }
        out += '\n';
    }
    return out;
}

std::string render_confusion_table(const ConfusionMatrix& matrix) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    header.insert(header.end(), matrix.labels.begin(), matrix.labels.end());
    cells.push_back(std::move(header));
    for (std::size_t t = 0; t < matrix.labels.size(); ++t) {
        std::vector<std::string> row{matrix.labels[t]};
        for (std::size_t p = 0; p < matrix.labels.size(); ++p) {
            row.push_back(std::to_string(matrix.counts[t][p]));
        }
        cells.push_back(std::move(row));
    }
    return render_grid(cells);
}

std::string confusion_to_csv(const ConfusionMatrix& matrix) {
    std::string out;
    for (const std::string& label : matrix.labels) {
        out += ',';
        out += label;
    }
    out += '\n';
    for (std::size_t t = 0; t < matrix.labels.size(); ++t) {
        out += matrix.labels[t];
        for (std::size_t p = 0; p < matrix.labels.size(); ++p) {
            out += ',';
            out += std::to_string(matrix.counts[t][p]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json report_to_json(const EvaluationReport& report) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["overall_avg_accuracy_pct"] = report.overall_avg_accuracy_pct;
    doc["rows"] = nlohmann::json::array();
    for (const LengthAccuracyRow& row : report.rows) {
        doc["rows"].push_back({{"shortcut", row.shortcut},
                               {"detected_avg_m", row.detected_avg_m},
                               {"actual_length_m", row.actual_length_m},
                               {"accuracy_pct", row.accuracy_pct},
                               {"n", row.n}});
    }
    doc["types_without_records"] = report.types_without_records;
    doc["confusion"] = {{"labels", report.matrix.labels}, {"counts", report.matrix.counts}};
    doc["findings"] = nlohmann::json::array();
    for (const Finding& finding : report.findings) {
        doc["findings"].push_back({{"kind", to_string(finding.kind)},
                                   {"image_id", finding.image_id},
                                   {"detail", finding.detail}});
    }
    doc["records"] = nlohmann::json::array();
    for (const EvaluationReport::RecordResult& record : report.records) {
        doc["records"].push_back({{"image_id", record.image_id},
                                  {"ground_truth", record.ground_truth},
                                  {"predicted", record.predicted},
                                  {"length_m", record.length_m}});
    }
    return doc;
}

}  // namespace airtype
