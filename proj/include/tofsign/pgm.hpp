#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tofsign/depth_frame.hpp"

namespace tofsign {

// Binary PGM ("P5") I/O, 8-bit only.
//
// Accepted on read: magic "P5", then width, height and maxval as ASCII
// decimals separated by whitespace (with optional '#' comments up to end
// of line), one whitespace byte, then width*height raster bytes in
// row-major order, top-left origin. maxval must be 255.
//
// Written form is fixed so output is byte-reproducible:
//   "P5\n<width> <height>\n255\n" followed by the raster. No comments.

DepthFrame read_pgm(std::istream& in);
DepthFrame read_pgm(const std::string& bytes);
DepthFrame read_pgm_file(const std::filesystem::path& path);

void write_pgm(const DepthFrame& frame, std::ostream& out);
std::string write_pgm(const DepthFrame& frame);
void write_pgm_file(const DepthFrame& frame, const std::filesystem::path& path);

// A manifest is UTF-8 text with one PGM path per line, in capture order.
// Blank lines are ignored. Relative paths resolve against base_dir (for
// read_sequence_file, the manifest's own directory).
std::vector<std::filesystem::path> read_manifest(std::istream& in,
                                                 const std::filesystem::path& base_dir);

FrameSequence read_sequence(const std::vector<std::filesystem::path>& paths);
FrameSequence read_sequence_file(const std::filesystem::path& manifest_path);

// Writes frames/frame_NNNNNN.pgm files plus a manifest listing them, all
// under out_dir. The manifest is written last, after every frame has been
// stored. Returns the manifest path.
std::filesystem::path write_sequence(const FrameSequence& seq,
                                     const std::filesystem::path& out_dir,
                                     const std::string& manifest_name = "manifest.txt");

}  // namespace tofsign
