#pragma once

#include <filesystem>
#include <iosfwd>

#include "tofsign/classify.hpp"
#include "tofsign/dataset_io.hpp"
#include "tofsign/synthgen.hpp"

namespace tofsign::cli {

// Shared pipeline knobs, surfaced as --band-low/--band-high/--min-area/
// --min-length on every subcommand that reads a recording.
struct PipelineOptions {
    IntensityBand band{};
    SegmentationParams segmentation{};
};

struct SynthOptions {
    GenParams params{};
    std::filesystem::path out_dir;
};

struct RecognizeOptions {
    std::filesystem::path manifest;
    std::filesystem::path out_sigml;
    // Either a stored model...
    std::filesystem::path model_csv;
    // ...or a labeled training recording to build one from.
    std::filesystem::path train_manifest;
    std::filesystem::path train_truth;
    std::filesystem::path save_model;  // optional
    PipelineOptions pipeline{};
};

struct EvaluateOptions {
    std::filesystem::path manifest;
    std::filesystem::path truth;
    int k_train = 5;
    bool require_perfect = false;
    PipelineOptions pipeline{};
};

struct ScatterOptions {
    std::filesystem::path manifest;
    std::filesystem::path truth;
    ScatterKind which = ScatterKind::Vector;
    std::filesystem::path out_csv;
    PipelineOptions pipeline{};
};

// Each command returns the process exit status: 0 exactly when the
// postcondition was achieved. Diagnostics go to err, data to files or out.

// Writes the synthetic database: PGM frames + manifest + ground-truth CSV.
int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err);

// Segments the recording, classifies each action against the model, writes
// the SiGML document and prints one "segment <i>: <class>" line per action.
int cmd_recognize(const RecognizeOptions& opt, std::ostream& out, std::ostream& err);

// Runs the all-splits evaluation and prints the line-oriented report. With
// require_perfect, exits nonzero unless every split reaches accuracy 1.
int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& err);

// Writes the scatter CSV for external plotting.
int cmd_scatter(const ScatterOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace tofsign::cli
