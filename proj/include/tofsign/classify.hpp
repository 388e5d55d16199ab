#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tofsign/features.hpp"
#include "tofsign/gesture.hpp"

namespace tofsign {

struct LabeledSample {
    MovementVector vector;
    GestureClass label = GestureClass::Right;
    int set_id = 0;  // 1-based; which recording set the action came from
    // Retained for scatter export; not used by the classifier itself.
    Centroid start_centroid;
    Centroid end_centroid;
};

struct GestureDataset {
    std::vector<LabeledSample> samples;
    int num_sets = 0;
};

// Instance-based nearest-neighbor model: training is storage. References
// keep their input order, which also defines the tie-break (lowest index
// wins on equal distance).
class NnModel {
public:
    explicit NnModel(std::vector<LabeledSample> references);
    const std::vector<LabeledSample>& references() const { return references_; }

private:
    std::vector<LabeledSample> references_;
};

NnModel train(std::vector<LabeledSample> samples);

// Index of the reference minimizing the Euclidean distance to v; ties
// resolve to the lowest index so the result is deterministic.
std::size_t nearest_index(const NnModel& model, const MovementVector& v);

GestureClass classify(const NnModel& model, const MovementVector& v);

struct SplitResult {
    std::vector<int> train_set_ids;  // sorted ascending
    int num_train = 0;
    int num_test = 0;
    double accuracy = 0.0;
};

struct EvaluationReport {
    int num_sets = 0;
    int k_train = 0;
    std::vector<SplitResult> splits;
    double min_accuracy = 0.0;
    double mean_accuracy = 0.0;
    // confusion_totals[truth][predicted], summed over every split.
    std::array<std::array<long, 4>, 4> confusion_totals{};
};

// Trains and tests on every size-k_train subset of set ids, enumerated in
// lexicographic order over sorted id tuples so reports are byte-stable.
// The dataset must contain exactly one sample per (set_id, class) pair.
EvaluationReport evaluate_all_splits(const GestureDataset& dataset, int k_train);

// Line-oriented text form: one "split <ids>: accuracy <a>" line per split,
// then "min <v>" and "mean <v>".
std::string format_report(const EvaluationReport& report);

enum class ScatterKind { Start, End, Vector };

ScatterKind scatter_kind_from_string(std::string_view name);

// CSV with header "x,y,class,set_id": start centroids, end centroids, or
// movement vectors of every sample, in dataset order.
std::string scatter_export(const GestureDataset& dataset, ScatterKind which);

}  // namespace tofsign
