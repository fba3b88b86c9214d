#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "airtype/catalog.hpp"
#include "airtype/identify.hpp"
#include "airtype/maskio.hpp"

namespace airtype {

/// Per-type length accuracy over the evaluated records of that type.
struct LengthAccuracyRow {
    std::string shortcut;
    double detected_avg_m = 0.0;
    double actual_length_m = 0.0;
    double accuracy_pct = 0.0;  ///< full precision; round for display
    int n = 0;

    friend bool operator==(const LengthAccuracyRow&, const LengthAccuracyRow&) = default;
};

/// counts[t][p] = records with ground truth labels[t] predicted as labels[p].
struct ConfusionMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> counts;

    int at(std::size_t truth, std::size_t predicted) const { return counts[truth][predicted]; }
    int trace() const;
    int row_sum(std::size_t truth) const;
    int total() const;

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct EvaluationReport {
    std::vector<LengthAccuracyRow> rows;            ///< catalog order, types with n >= 1
    std::vector<std::string> types_without_records; ///< catalog types absent from the scene
    double overall_avg_accuracy_pct = 0.0;          ///< mean of rows' accuracy_pct
    ConfusionMatrix matrix;
    std::vector<Finding> findings;

    /// Per-record results in manifest record order.
    struct RecordResult {
        std::string image_id;
        std::string ground_truth;
        std::string predicted;
        double length_m = 0.0;

        friend bool operator==(const RecordResult&, const RecordResult&) = default;
    };
    std::vector<RecordResult> records;

    friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

/// Arithmetic mean. Throws InvalidParameterError for an empty list.
double detected_length_avg(std::span<const double> lengths_m);

/// 100 * max(0, 1 - |detected - actual| / actual), full precision.
double length_accuracy_pct(double detected_avg_m, double actual_length_m);

/// Rounds half away from zero, for table display.
long long display_round(double value);

/// Builds the matrix over the full catalog label order; zero rows stay zero.
/// Unknown shortcuts raise ConfigurationError.
ConfusionMatrix build_confusion(std::span<const std::pair<std::string, std::string>> truth_predicted,
                                const Catalog& catalog);

/// Runs identify_record over every record and aggregates rows, overall
/// average, and the confusion matrix. Output is identical for any record
/// ordering of the same scene. Records missing ground truth raise
/// EvaluationInputError listing their ids.
EvaluationReport evaluate_scene(const SceneManifest& manifest, const Catalog& catalog,
                                const IdentifyOptions& options = {});

/// Space-aligned text table: one row per type plus the bottom average row.
std::string render_accuracy_table(const EvaluationReport& report);

/// Space-aligned grid with truth rows and predicted columns.
std::string render_confusion_table(const ConfusionMatrix& matrix);

/// CSV with a header row and a leading truth-label column.
std::string confusion_to_csv(const ConfusionMatrix& matrix);

/// Full-precision machine-readable report, schema version 1.
nlohmann::json report_to_json(const EvaluationReport& report);

}  // namespace airtype
