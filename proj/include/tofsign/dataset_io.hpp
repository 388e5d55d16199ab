#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tofsign/classify.hpp"
#include "tofsign/preprocess.hpp"

namespace tofsign {

// One row of a ground-truth file: which set and class the n-th segment of
// the recording belongs to. Header "segment_index,set_id,class".
struct TruthEntry {
    int segment_index = 0;  // 0-based, in segment order
    int set_id = 0;
    GestureClass label = GestureClass::Right;
};

std::vector<TruthEntry> read_truth_csv(std::istream& in);
std::vector<TruthEntry> read_truth_csv_file(const std::filesystem::path& path);
void write_truth_csv(std::ostream& out, const std::vector<TruthEntry>& entries);

// Labeled movement vectors, header "dx,dy,class,set_id". This is the whole
// persisted form of a nearest-neighbor model.
std::vector<LabeledSample> read_model_csv(std::istream& in);
std::vector<LabeledSample> read_model_csv_file(const std::filesystem::path& path);
void write_model_csv(std::ostream& out, const std::vector<LabeledSample>& samples);

// Segments the sequence and joins segments with truth rows by segment
// index, running the feature pipeline on each segment's endpoint frames.
// The truth must cover every segment exactly once.
GestureDataset build_dataset(const FrameSequence& seq,
                             const std::vector<TruthEntry>& truth,
                             IntensityBand band, const SegmentationParams& params);

}  // namespace tofsign
