#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tofsign/commands.hpp"

namespace {

void add_pipeline_flags(CLI::App& cmd, tofsign::cli::PipelineOptions& pipeline) {
    cmd.add_option("--band-low", pipeline.band.low,
                   "Lowest depth intensity kept by the filter (inclusive)")
        ->capture_default_str();
    cmd.add_option("--band-high", pipeline.band.high,
                   "First depth intensity above the filter window (exclusive)")
        ->capture_default_str();
    cmd.add_option("--min-area", pipeline.segmentation.min_area,
                   "Nonzero-pixel count below which a filtered frame is blank")
        ->capture_default_str();
    cmd.add_option("--min-length", pipeline.segmentation.min_length,
                   "Minimum frames per action segment")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Depth-gesture recognition: filter, segment, classify and emit SiGML"};
    app.require_subcommand(1);

    tofsign::cli::SynthOptions synth;
    bool tiny = false;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a synthetic depth-gesture database");
    synth_cmd->add_option("--out", synth.out_dir, "Output directory")->required();
    synth_cmd->add_flag("--tiny", tiny,
                        "64x48 preset for sub-second runs; explicit flags still win");
    synth_cmd->add_option("--seed", synth.params.seed, "RNG seed")->capture_default_str();
    // Geometry flags are remembered so --tiny only fills in what the user
    // left unspecified.
    std::vector<std::pair<CLI::Option*, std::function<void(tofsign::GenParams&)>>> presets;
    auto geometry = [&](CLI::Option* option, auto member) {
        presets.emplace_back(option, [member](tofsign::GenParams& p) {
            p.*member = tofsign::tiny_gen_params().*member;
        });
    };
    geometry(synth_cmd->add_option("--width", synth.params.frame_width, "Frame width")
                 ->capture_default_str(),
             &tofsign::GenParams::frame_width);
    geometry(synth_cmd->add_option("--height", synth.params.frame_height, "Frame height")
                 ->capture_default_str(),
             &tofsign::GenParams::frame_height);
    geometry(synth_cmd
                 ->add_option("--hand-radius", synth.params.hand_radius,
                              "Hand blob radius")
                 ->capture_default_str(),
             &tofsign::GenParams::hand_radius);
    geometry(synth_cmd
                 ->add_option("--travel", synth.params.travel_distance,
                              "Mean gesture displacement in pixels")
                 ->capture_default_str(),
             &tofsign::GenParams::travel_distance);
    geometry(synth_cmd
                 ->add_option("--travel-jitter", synth.params.travel_jitter,
                              "Per-action displacement noise (must stay below travel/2)")
                 ->capture_default_str(),
             &tofsign::GenParams::travel_jitter);
    geometry(synth_cmd
                 ->add_option("--position-jitter", synth.params.position_jitter,
                              "Start-position spread across sets")
                 ->capture_default_str(),
             &tofsign::GenParams::position_jitter);
    geometry(synth_cmd
                 ->add_option("--frames-per-action", synth.params.frames_per_action,
                              "Frames rendered per action")
                 ->capture_default_str(),
             &tofsign::GenParams::frames_per_action);
    geometry(synth_cmd
                 ->add_option("--blank-frames", synth.params.blank_frames_between,
                              "Blank frames between actions")
                 ->capture_default_str(),
             &tofsign::GenParams::blank_frames_between);
    geometry(synth_cmd
                 ->add_option("--clipped-fraction", synth.params.clipped_fraction,
                              "Fraction of actions rendered partially off-frame")
                 ->capture_default_str(),
             &tofsign::GenParams::clipped_fraction);
    synth_cmd->add_option("--band-low", synth.params.band.low, "Hand intensity band low")
        ->capture_default_str();
    synth_cmd
        ->add_option("--band-high", synth.params.band.high, "Hand intensity band high")
        ->capture_default_str();

    tofsign::cli::RecognizeOptions recognize;
    CLI::App* recognize_cmd = app.add_subcommand(
        "recognize", "Recognize the actions in a recording and emit SiGML");
    recognize_cmd->add_option("--manifest", recognize.manifest, "Recording manifest")
        ->required();
    recognize_cmd->add_option("--out", recognize.out_sigml, "Output .sigml path")
        ->required();
    recognize_cmd->add_option("--model", recognize.model_csv,
                              "Stored model CSV (dx,dy,class,set_id)");
    recognize_cmd->add_option("--train-manifest", recognize.train_manifest,
                              "Labeled recording to train from");
    recognize_cmd->add_option("--train-truth", recognize.train_truth,
                              "Ground-truth CSV for --train-manifest");
    recognize_cmd->add_option("--save-model", recognize.save_model,
                              "Write the trained model CSV here");
    add_pipeline_flags(*recognize_cmd, recognize.pipeline);

    tofsign::cli::EvaluateOptions evaluate;
    CLI::App* evaluate_cmd = app.add_subcommand(
        "evaluate", "Run the all-splits nearest-neighbor evaluation");
    evaluate_cmd->add_option("--manifest", evaluate.manifest, "Recording manifest")
        ->required();
    evaluate_cmd->add_option("--truth", evaluate.truth, "Ground-truth CSV")->required();
    evaluate_cmd->add_option("--k-train", evaluate.k_train, "Training sets per split")
        ->capture_default_str();
    evaluate_cmd->add_flag("--require-perfect", evaluate.require_perfect,
                           "Exit nonzero unless every split reaches accuracy 1");
    add_pipeline_flags(*evaluate_cmd, evaluate.pipeline);

    tofsign::cli::ScatterOptions scatter;
    std::string which = "vector";
    CLI::App* scatter_cmd =
        app.add_subcommand("scatter", "Export centroid/vector scatter data as CSV");
    scatter_cmd->add_option("--manifest", scatter.manifest, "Recording manifest")
        ->required();
    scatter_cmd->add_option("--truth", scatter.truth, "Ground-truth CSV")->required();
    scatter_cmd->add_option("--which", which, "start, end or vector")
        ->capture_default_str();
    scatter_cmd->add_option("--out", scatter.out_csv, "Output CSV path")->required();
    add_pipeline_flags(*scatter_cmd, scatter.pipeline);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth_cmd->parsed()) {
            if (tiny) {
                for (const auto& [option, apply] : presets)
                    if (option->count() == 0)
                        apply(synth.params);
            }
            return tofsign::cli::cmd_synth(synth, std::cout, std::cerr);
        }
        if (recognize_cmd->parsed())
            return tofsign::cli::cmd_recognize(recognize, std::cout, std::cerr);
        if (evaluate_cmd->parsed())
            return tofsign::cli::cmd_evaluate(evaluate, std::cout, std::cerr);
        if (scatter_cmd->parsed()) {
            scatter.which = tofsign::scatter_kind_from_string(which);
            return tofsign::cli::cmd_scatter(scatter, std::cout, std::cerr);
        }
    } catch (const tofsign::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
