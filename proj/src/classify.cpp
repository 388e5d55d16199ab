#include "tofsign/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tofsign/numfmt.hpp"

namespace tofsign {

NnModel::NnModel(std::vector<LabeledSample> references)
    : references_(std::move(references)) {
    if (references_.empty())
        throw InvalidParams("NnModel: reference set is empty");
}

NnModel train(std::vector<LabeledSample> samples) {
    return NnModel(std::move(samples));
}

std::size_t nearest_index(const NnModel& model, const MovementVector& v) {
    const auto& refs = model.references();
    std::size_t best = 0;
    double best_d2 = 0.0;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const double ddx = v.dx - refs[i].vector.dx;
        const double ddy = v.dy - refs[i].vector.dy;
        const double d2 = ddx * ddx + ddy * ddy;
        if (i == 0 || d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    return best;
}

GestureClass classify(const NnModel& model, const MovementVector& v) {
    return model.references()[nearest_index(model, v)].label;
}

namespace {

void validate_dataset_shape(const GestureDataset& dataset) {
    if (dataset.num_sets < 1)
        throw InvalidParams("dataset: num_sets must be >= 1");
    const std::size_t expected =
        static_cast<std::size_t>(dataset.num_sets) * kAllGestureClasses.size();
    if (dataset.samples.size() != expected)
        throw InvalidParams("dataset: expected " + std::to_string(expected) +
                            " samples, got " + std::to_string(dataset.samples.size()));
    std::vector<int> seen(expected, 0);
    for (const auto& s : dataset.samples) {
        if (s.set_id < 1 || s.set_id > dataset.num_sets)
            throw InvalidParams("dataset: set_id " + std::to_string(s.set_id) +
                                " out of range 1.." + std::to_string(dataset.num_sets));
        const std::size_t slot =
            static_cast<std::size_t>(s.set_id - 1) * kAllGestureClasses.size() +
            static_cast<std::size_t>(class_index(s.label));
        if (seen[slot]++)
            throw InvalidParams("dataset: duplicate sample for set " +
                                std::to_string(s.set_id) + " class " +
                                std::string(to_string(s.label)));
    }
}

}  // namespace

EvaluationReport evaluate_all_splits(const GestureDataset& dataset, int k_train) {
    validate_dataset_shape(dataset);
    if (k_train < 1)
        throw InvalidParams("evaluate: k_train must be >= 1");
    if (k_train >= dataset.num_sets)
        throw InvalidParams("evaluate: k_train = " + std::to_string(k_train) +
                            " leaves no test sets (num_sets = " +
                            std::to_string(dataset.num_sets) + ")");

    EvaluationReport report;
    report.num_sets = dataset.num_sets;
    report.k_train = k_train;

    // Lexicographic enumeration of k-combinations of {1, ..., num_sets}.
    std::vector<int> combo(static_cast<std::size_t>(k_train));
    std::iota(combo.begin(), combo.end(), 1);
    const int n = dataset.num_sets;
    const int k = k_train;

    bool more = true;
    while (more) {
        std::vector<bool> in_train(static_cast<std::size_t>(n) + 1, false);
        for (int id : combo)
            in_train[static_cast<std::size_t>(id)] = true;

        std::vector<LabeledSample> refs;
        std::vector<const LabeledSample*> tests;
        for (const auto& s : dataset.samples) {
            if (in_train[static_cast<std::size_t>(s.set_id)])
                refs.push_back(s);
            else
                tests.push_back(&s);
        }

        NnModel model = train(std::move(refs));
        int correct = 0;
        for (const LabeledSample* t : tests) {
            const GestureClass predicted = classify(model, t->vector);
            if (predicted == t->label)
                ++correct;
            ++report.confusion_totals[static_cast<std::size_t>(class_index(t->label))]
                                     [static_cast<std::size_t>(class_index(predicted))];
        }

        SplitResult split;
        split.train_set_ids = combo;
        split.num_train = static_cast<int>(model.references().size());
        split.num_test = static_cast<int>(tests.size());
        split.accuracy = tests.empty()
                             ? 1.0
                             : static_cast<double>(correct) / static_cast<double>(tests.size());
        report.splits.push_back(std::move(split));

        // Advance to the next combination.
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + 1 + i)
            --i;
        if (i < 0) {
            more = false;
        } else {
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    report.min_accuracy = report.splits.front().accuracy;
    double sum = 0.0;
    for (const auto& s : report.splits) {
        report.min_accuracy = std::min(report.min_accuracy, s.accuracy);
        sum += s.accuracy;
    }
    report.mean_accuracy = sum / static_cast<double>(report.splits.size());
    return report;
}

std::string format_report(const EvaluationReport& report) {
    std::ostringstream out;
    for (const auto& s : report.splits) {
        out << "split";
        for (int id : s.train_set_ids)
            out << ' ' << id;
        out << ": accuracy " << format_double(s.accuracy) << '\n';
    }
    out << "min " << format_double(report.min_accuracy) << '\n';
    out << "mean " << format_double(report.mean_accuracy) << '\n';
    return out.str();
}

ScatterKind scatter_kind_from_string(std::string_view name) {
    if (name == "start") return ScatterKind::Start;
    if (name == "end") return ScatterKind::End;
    if (name == "vector") return ScatterKind::Vector;
    throw ParseError("unknown scatter kind: \"" + std::string(name) +
                     "\" (expected start, end or vector)");
}

std::string scatter_export(const GestureDataset& dataset, ScatterKind which) {
    std::ostringstream out;
    out << "x,y,class,set_id\n";
    for (const auto& s : dataset.samples) {
        double x = 0.0, y = 0.0;
        switch (which) {
            case ScatterKind::Start: x = s.start_centroid.x; y = s.start_centroid.y; break;
            case ScatterKind::End: x = s.end_centroid.x; y = s.end_centroid.y; break;
            case ScatterKind::Vector: x = s.vector.dx; y = s.vector.dy; break;
        }
        out << format_double(x) << ',' << format_double(y) << ',' << to_string(s.label)
            << ',' << s.set_id << '\n';
    }
    return out.str();
}

}  // namespace tofsign
