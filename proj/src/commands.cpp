#include "tofsign/commands.hpp"

#include <fstream>
#include <ostream>
#include <vector>

#include "tofsign/pgm.hpp"
#include "tofsign/sigml.hpp"

namespace tofsign::cli {

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed: " + path.string());
}

}  // namespace

int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const SyntheticDatabase db = generate_database(opt.params);
        write_sequence(db.sequence, opt.out_dir);

        std::vector<TruthEntry> truth;
        truth.reserve(db.truth.samples.size());
        for (std::size_t i = 0; i < db.truth.samples.size(); ++i)
            truth.push_back({static_cast<int>(i), db.truth.samples[i].set_id,
                             db.truth.samples[i].label});
        std::ofstream truth_out(opt.out_dir / "ground_truth.csv", std::ios::binary);
        if (!truth_out)
            throw IoError("cannot write ground truth: " +
                          (opt.out_dir / "ground_truth.csv").string());
        write_truth_csv(truth_out, truth);

        out << "frames " << db.sequence.size() << '\n'
            << "actions " << db.truth.samples.size() << '\n'
            << "sets " << db.truth.num_sets << '\n'
            << "out " << opt.out_dir.string() << '\n';
        return 0;
    } catch (const Error& e) {
        err << "synth: " << e.what() << '\n';
        return 1;
    }
}

int cmd_recognize(const RecognizeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        std::vector<LabeledSample> references;
        if (!opt.model_csv.empty()) {
            references = read_model_csv_file(opt.model_csv);
        } else if (!opt.train_manifest.empty() && !opt.train_truth.empty()) {
            const FrameSequence train_seq = read_sequence_file(opt.train_manifest);
            const auto truth = read_truth_csv_file(opt.train_truth);
            const GestureDataset train_set = build_dataset(
                train_seq, truth, opt.pipeline.band, opt.pipeline.segmentation);
            references = train_set.samples;
        } else {
            err << "recognize: need --model, or --train-manifest with --train-truth\n";
            return 1;
        }

        if (!opt.save_model.empty()) {
            std::ofstream model_out(opt.save_model, std::ios::binary);
            if (!model_out)
                throw IoError("cannot write model: " + opt.save_model.string());
            write_model_csv(model_out, references);
        }

        const NnModel model = train(std::move(references));

        const FrameSequence seq = read_sequence_file(opt.manifest);
        const auto segments =
            segment_actions(seq, opt.pipeline.band, opt.pipeline.segmentation);
        if (segments.empty()) {
            err << "recognize: no segments found in " << opt.manifest.string() << '\n';
            return 1;
        }

        std::vector<GestureClass> recognized;
        recognized.reserve(segments.size());
        for (std::size_t i = 0; i < segments.size(); ++i) {
            try {
                const Centroid c_start = centroid(segments[i].start_frame);
                const Centroid c_end = centroid(segments[i].end_frame);
                recognized.push_back(
                    classify(model, movement_vector(c_start, c_end)));
            } catch (const EmptyFrameError& e) {
                err << "recognize: segment " << i << ": " << e.what() << '\n';
                return 1;
            }
            out << "segment " << i << ": " << to_string(recognized.back()) << '\n';
        }

        write_text_file(opt.out_sigml, emit_sigml(recognized));
        return 0;
    } catch (const Error& e) {
        err << "recognize: " << e.what() << '\n';
        return 1;
    }
}

int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const FrameSequence seq = read_sequence_file(opt.manifest);
        const auto truth = read_truth_csv_file(opt.truth);
        const GestureDataset dataset =
            build_dataset(seq, truth, opt.pipeline.band, opt.pipeline.segmentation);
        const EvaluationReport report = evaluate_all_splits(dataset, opt.k_train);
        out << format_report(report);
        if (opt.require_perfect && report.min_accuracy < 1.0) {
            err << "evaluate: accuracy below 1 in at least one split (min "
                << report.min_accuracy << ")\n";
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        err << "evaluate: " << e.what() << '\n';
        return 1;
    }
}

int cmd_scatter(const ScatterOptions& opt, std::ostream& /*out*/, std::ostream& err) {
    try {
        const FrameSequence seq = read_sequence_file(opt.manifest);
        const auto truth = read_truth_csv_file(opt.truth);
        const GestureDataset dataset =
            build_dataset(seq, truth, opt.pipeline.band, opt.pipeline.segmentation);
        write_text_file(opt.out_csv, scatter_export(dataset, opt.which));
        return 0;
    } catch (const Error& e) {
        err << "scatter: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace tofsign::cli
