#include "tofsign/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "tofsign/features.hpp"
#include "tofsign/numfmt.hpp"

namespace tofsign {

namespace {

// Unquoted comma-separated fields; trailing \r tolerated.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (ch != '\r') {
            current += ch;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

void expect_header(std::istream& in, const std::string& expected, const char* what) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(std::string(what) + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != expected)
        throw ParseError(std::string(what) + ": bad header \"" + line + "\" (expected \"" +
                         expected + "\")");
}

}  // namespace

std::vector<TruthEntry> read_truth_csv(std::istream& in) {
    expect_header(in, "segment_index,set_id,class", "truth csv");
    std::vector<TruthEntry> entries;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw ParseError("truth csv: line " + std::to_string(line_no) +
                             ": expected 3 fields");
        TruthEntry e;
        e.segment_index = static_cast<int>(parse_long(fields[0]));
        e.set_id = static_cast<int>(parse_long(fields[1]));
        e.label = gesture_class_from_string(fields[2]);
        entries.push_back(e);
    }
    return entries;
}

std::vector<TruthEntry> read_truth_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open truth csv: " + path.string());
    try {
        return read_truth_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_truth_csv(std::ostream& out, const std::vector<TruthEntry>& entries) {
    out << "segment_index,set_id,class\n";
    for (const auto& e : entries)
        out << e.segment_index << ',' << e.set_id << ',' << to_string(e.label) << '\n';
}

std::vector<LabeledSample> read_model_csv(std::istream& in) {
    expect_header(in, "dx,dy,class,set_id", "model csv");
    std::vector<LabeledSample> samples;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4)
            throw ParseError("model csv: line " + std::to_string(line_no) +
                             ": expected 4 fields");
        LabeledSample s;
        s.vector.dx = parse_double(fields[0]);
        s.vector.dy = parse_double(fields[1]);
        s.label = gesture_class_from_string(fields[2]);
        s.set_id = static_cast<int>(parse_long(fields[3]));
        samples.push_back(s);
    }
    return samples;
}

std::vector<LabeledSample> read_model_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open model csv: " + path.string());
    try {
        return read_model_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_model_csv(std::ostream& out, const std::vector<LabeledSample>& samples) {
    out << "dx,dy,class,set_id\n";
    for (const auto& s : samples)
        out << format_double(s.vector.dx) << ',' << format_double(s.vector.dy) << ','
            << to_string(s.label) << ',' << s.set_id << '\n';
}

GestureDataset build_dataset(const FrameSequence& seq,
                             const std::vector<TruthEntry>& truth,
                             IntensityBand band, const SegmentationParams& params) {
    const auto segments = segment_actions(seq, band, params);
    if (truth.size() != segments.size())
        throw InvalidParams("dataset: truth has " + std::to_string(truth.size()) +
                            " rows but segmentation found " +
                            std::to_string(segments.size()) + " segments");

    std::vector<bool> covered(segments.size(), false);
    GestureDataset dataset;
    dataset.num_sets = 0;
    for (const auto& e : truth) {
        if (e.segment_index < 0 ||
            e.segment_index >= static_cast<int>(segments.size()))
            throw InvalidParams("dataset: truth segment_index " +
                                std::to_string(e.segment_index) + " out of range");
        if (covered[static_cast<std::size_t>(e.segment_index)])
            throw InvalidParams("dataset: duplicate truth row for segment " +
                                std::to_string(e.segment_index));
        covered[static_cast<std::size_t>(e.segment_index)] = true;

        const auto& seg = segments[static_cast<std::size_t>(e.segment_index)];
        const Centroid c_start = centroid(seg.start_frame);
        const Centroid c_end = centroid(seg.end_frame);
        dataset.samples.push_back(
            {movement_vector(c_start, c_end), e.label, e.set_id, c_start, c_end});
        dataset.num_sets = std::max(dataset.num_sets, e.set_id);
    }
    return dataset;
}

}  // namespace tofsign
