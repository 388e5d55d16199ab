#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "tofsign/preprocess.hpp"

using namespace tofsign;

namespace {

// Frame whose first `count` pixels carry an in-band intensity and whose
// remaining pixels carry out-of-band clutter.
DepthFrame activity_frame(int count, int width = 16, int height = 16) {
    DepthFrame frame(width, height);
    auto px = frame.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        px[i] = static_cast<std::size_t>(count) > i ? 120 : 200;
    return frame;
}

DepthFrame clutter_frame(int width = 16, int height = 16) {
    return activity_frame(0, width, height);
}

}  // namespace

TEST_CASE("band_filter keeps [low, high) and zeroes the rest") {
    DepthFrame frame(4, 1, {111, 112, 127, 128});
    const DepthFrame filtered = band_filter(frame, IntensityBand{});
    CHECK(filtered.at(0, 0) == 0);
    CHECK(filtered.at(1, 0) == 112);
    CHECK(filtered.at(2, 0) == 127);
    CHECK(filtered.at(3, 0) == 0);
}

TEST_CASE("band_filter maps an all-zero frame to itself") {
    const DepthFrame zero(8, 8);
    CHECK(band_filter(zero, IntensityBand{}) == zero);
}

TEST_CASE("band_filter is idempotent and pixelwise 0-or-original") {
    std::mt19937 rng(21);
    const IntensityBand band{};
    for (int i = 0; i < 200; ++i) {
        const auto frame = testutil::random_frame(rng, 12, 9);
        const DepthFrame once = band_filter(frame, band);
        CHECK(band_filter(once, band) == once);
        CHECK(once.width() == frame.width());
        CHECK(once.height() == frame.height());
        for (std::size_t j = 0; j < once.pixels().size(); ++j) {
            const int v = once.pixels()[j];
            const bool kept = v == frame.pixels()[j] && band.contains(v);
            CHECK((v == 0 || kept));
        }
    }
}

TEST_CASE("band_filter rejects invalid bands") {
    const DepthFrame frame(2, 2);
    CHECK_THROWS_AS(band_filter(frame, IntensityBand{128, 112}), InvalidParams);
    CHECK_THROWS_AS(band_filter(frame, IntensityBand{-1, 10}), InvalidParams);
    CHECK_THROWS_AS(band_filter(frame, IntensityBand{0, 257}), InvalidParams);
}

TEST_CASE("is_blank boundary at min_area") {
    CHECK(is_blank(DepthFrame(16, 16), 50));
    CHECK_FALSE(is_blank(band_filter(activity_frame(50), IntensityBand{}), 50));
    CHECK(is_blank(band_filter(activity_frame(49), IntensityBand{}), 50));
}

TEST_CASE("segment_actions finds maximal non-blank runs with endpoints") {
    FrameSequence seq;
    seq.append(clutter_frame());
    for (int i = 0; i < 5; ++i)
        seq.append(activity_frame(60));
    seq.append(clutter_frame());
    for (int i = 0; i < 4; ++i)
        seq.append(activity_frame(60));
    seq.append(clutter_frame());

    const auto segments = segment_actions(seq, IntensityBand{}, SegmentationParams{});
    REQUIRE(segments.size() == 2);
    CHECK(segments[0].start_index == 1);
    CHECK(segments[0].end_index == 5);
    CHECK(segments[1].start_index == 7);
    CHECK(segments[1].end_index == 10);
    // Endpoint frames are the filtered frames: clutter removed, hand kept.
    CHECK(segments[0].start_frame == band_filter(seq[1], IntensityBand{}));
    CHECK(segments[1].end_frame == band_filter(seq[10], IntensityBand{}));
}

TEST_CASE("segment_actions on an all-blank sequence yields nothing") {
    FrameSequence seq;
    for (int i = 0; i < 6; ++i)
        seq.append(clutter_frame());
    CHECK(segment_actions(seq, IntensityBand{}, SegmentationParams{}).empty());
}

TEST_CASE("segment_actions drops runs shorter than min_length") {
    FrameSequence seq;
    seq.append(clutter_frame());
    seq.append(activity_frame(60));
    seq.append(activity_frame(60));
    seq.append(clutter_frame());
    CHECK(segment_actions(seq, IntensityBand{}, SegmentationParams{}).empty());

    SegmentationParams loose;
    loose.min_length = 2;
    CHECK(segment_actions(seq, IntensityBand{}, loose).size() == 1);
}

TEST_CASE("segment_actions rejects an empty sequence") {
    CHECK_THROWS_AS(segment_actions(FrameSequence{}, IntensityBand{}, SegmentationParams{}),
                    InvalidParams);
}

TEST_CASE("k separated clips produce exactly k segments with blank borders") {
    std::mt19937 rng(33);
    std::uniform_int_distribution<int> clip_len(3, 7);
    std::uniform_int_distribution<int> gap_len(1, 4);
    const IntensityBand band{};
    const SegmentationParams params{};

    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 5;
        FrameSequence seq;
        for (int g = 0; g < gap_len(rng); ++g)
            seq.append(clutter_frame());
        for (int c = 0; c < k; ++c) {
            const int len = clip_len(rng);
            for (int f = 0; f < len; ++f)
                seq.append(activity_frame(50 + f));
            for (int g = 0; g < gap_len(rng); ++g)
                seq.append(clutter_frame());
        }

        const auto segments = segment_actions(seq, band, params);
        REQUIRE(segments.size() == static_cast<std::size_t>(k));
        int previous_end = -1;
        for (const auto& seg : segments) {
            CHECK(seg.start_index > previous_end);
            CHECK(seg.end_index - seg.start_index + 1 >= params.min_length);
            for (int i = seg.start_index; i <= seg.end_index; ++i)
                CHECK_FALSE(is_blank(band_filter(seq[static_cast<std::size_t>(i)], band),
                                     params.min_area));
            if (seg.start_index > 0)
                CHECK(is_blank(band_filter(seq[static_cast<std::size_t>(seg.start_index - 1)],
                                           band),
                               params.min_area));
            if (seg.end_index + 1 < static_cast<int>(seq.size()))
                CHECK(is_blank(band_filter(seq[static_cast<std::size_t>(seg.end_index + 1)],
                                           band),
                               params.min_area));
            previous_end = seg.end_index;
        }
    }
}
