#pragma once

#include <vector>

#include "tofsign/depth_frame.hpp"

namespace tofsign {

// Half-open depth window [low, high). Pixels inside keep their intensity,
// everything else is zeroed, which isolates objects at the hand's distance.
// The defaults keep the 16 intensities 112..127.
struct IntensityBand {
    int low = 112;
    int high = 128;

    void validate() const {
        if (low < 0 || low >= high || high > 256)
            throw InvalidParams("IntensityBand: need 0 <= low < high <= 256");
    }

    bool contains(int intensity) const { return intensity >= low && intensity < high; }
};

struct SegmentationParams {
    // A filtered frame with fewer nonzero pixels than min_area counts as blank.
    int min_area = 50;
    // Runs of non-blank frames shorter than min_length are dropped as noise.
    int min_length = 3;

    void validate() const {
        if (min_area < 1 || min_length < 1)
            throw InvalidParams("SegmentationParams: min_area and min_length must be >= 1");
    }
};

// One isolated action: a maximal run of non-blank frames. Only the filtered
// endpoint frames are retained; inner frames stay recoverable from the
// source sequence via the indices.
struct ActionSegment {
    int start_index = 0;  // into the source sequence
    int end_index = 0;    // inclusive
    DepthFrame start_frame;
    DepthFrame end_frame;
};

// Keeps pixels with band.low <= intensity < band.high at their original
// value and zeroes the rest. Intensities are preserved, not binarized,
// because the downstream moments are grey-value weighted.
DepthFrame band_filter(const DepthFrame& frame, IntensityBand band);

// True iff fewer than min_area pixels are nonzero. Expects an already
// band-filtered frame.
bool is_blank(const DepthFrame& frame, int min_area);

// Filters every frame, finds maximal runs of non-blank frames, drops runs
// shorter than params.min_length, and returns one segment per surviving
// run, ordered by start index.
std::vector<ActionSegment> segment_actions(const FrameSequence& seq,
                                           IntensityBand band,
                                           const SegmentationParams& params);

}  // namespace tofsign
