#pragma once

#include <cstdint>
#include <random>

#include "tofsign/classify.hpp"
#include "tofsign/depth_frame.hpp"
#include "tofsign/preprocess.hpp"

namespace tofsign {

// Seeded RNG with portable output. mt19937's bit stream is fixed by the
// standard; the mappings below avoid the implementation-defined std
// distributions so generated databases are identical everywhere.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    std::uint32_t next_u32() { return engine_(); }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next_u32()) * 0x1.0p-32);
    }

    // Uniform in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u32() %
                                     static_cast<std::uint32_t>(hi - lo + 1));
    }

private:
    std::mt19937 engine_;
};

struct Position {
    double x = 0.0;
    double y = 0.0;
};

// Parameters for the synthetic depth-gesture database: 9 sets x 4 movements
// recorded as one continuous sequence with blank separators, mirroring the
// structure the recognizer is evaluated on.
struct GenParams {
    std::uint32_t seed = 1;
    int frame_width = 640;
    int frame_height = 480;

    // Hand blob: filled disk with a radial depth profile, brightest at the
    // center, every pixel inside the intensity band.
    int hand_radius = 40;

    // Mean displacement magnitude per action and its per-sample noise.
    // travel_jitter must stay below travel_distance / 2; that margin is what
    // keeps the four classes separable.
    double travel_distance = 120.0;
    double travel_jitter = 20.0;

    // Start-position spread across sets (actions may start anywhere).
    double position_jitter = 150.0;

    int frames_per_action = 10;
    int blank_frames_between = 3;

    IntensityBand band{};

    // Fraction of actions rendered partially off-frame, exercising the
    // clipped-hand case. The clip edge runs parallel to the motion so the
    // visible mass still moves in the class direction.
    double clipped_fraction = 0.15;

    void validate() const;
};

// Scaled-down parameters (64x48) for sub-second tests; the blob stays large
// enough that the default segmentation min_area still applies.
GenParams tiny_gen_params(std::uint32_t seed = 1);

// Renders one action: the hand blob moving linearly from start by
// travel_distance +- jitter in the class direction, over background clutter
// that lies outside the intensity band. Blobs crossing the frame edge are
// cropped. Throws if the blob is fully invisible in the first or last frame.
FrameSequence generate_action(GestureClass c, Position start,
                              const GenParams& params, Rng& rng);

struct SyntheticDatabase {
    FrameSequence sequence;
    // Ground truth in action order: measured movement vectors and centroids
    // of the rendered endpoint frames, labeled from construction.
    GestureDataset truth;
};

// One continuous recording: 9 sets, each holding all 4 classes in a fixed
// rotation (Right, Left, Up, Down), blank frames between consecutive
// actions and at both ends. Set 1 starts at the frame center; later sets
// are displaced by position_jitter. A deterministic subset of actions is
// clipped at a frame edge.
SyntheticDatabase generate_database(const GenParams& params);

}  // namespace tofsign
