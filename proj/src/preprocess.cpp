#include "tofsign/preprocess.hpp"

namespace tofsign {

DepthFrame band_filter(const DepthFrame& frame, IntensityBand band) {
    band.validate();
    DepthFrame out(frame.width(), frame.height());
    auto src = frame.pixels();
    auto dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const int v = src[i];
        dst[i] = band.contains(v) ? static_cast<std::uint8_t>(v) : 0;
    }
    return out;
}

bool is_blank(const DepthFrame& frame, int min_area) {
    if (min_area < 1)
        throw InvalidParams("is_blank: min_area must be >= 1");
    int nonzero = 0;
    for (std::uint8_t v : frame.pixels()) {
        if (v != 0 && ++nonzero >= min_area)
            return false;
    }
    return true;
}

std::vector<ActionSegment> segment_actions(const FrameSequence& seq,
                                           IntensityBand band,
                                           const SegmentationParams& params) {
    band.validate();
    params.validate();
    if (seq.empty())
        throw InvalidParams("segment_actions: empty sequence");

    std::vector<ActionSegment> segments;
    int run_start = -1;
    DepthFrame run_first(1, 1);
    DepthFrame run_last(1, 1);

    auto close_run = [&](int run_end) {
        if (run_end - run_start + 1 >= params.min_length)
            segments.push_back({run_start, run_end, run_first, run_last});
        run_start = -1;
    };

    for (std::size_t i = 0; i < seq.size(); ++i) {
        DepthFrame filtered = band_filter(seq[i], band);
        if (is_blank(filtered, params.min_area)) {
            if (run_start >= 0)
                close_run(static_cast<int>(i) - 1);
        } else {
            if (run_start < 0) {
                run_start = static_cast<int>(i);
                run_first = filtered;
            }
            run_last = std::move(filtered);
        }
    }
    if (run_start >= 0)
        close_run(static_cast<int>(seq.size()) - 1);
    return segments;
}

}  // namespace tofsign
