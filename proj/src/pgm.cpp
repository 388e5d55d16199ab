#include "tofsign/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tofsign {

namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
}

int read_header_number(std::istream& in, const char* what) {
    skip_separators(in);
    int c = in.peek();
    if (c == EOF || !std::isdigit(c))
        throw ParseError(std::string("pgm: expected ") + what + " in header");
    long value = 0;
    while ((c = in.peek()) != EOF && std::isdigit(c)) {
        value = value * 10 + (in.get() - '0');
        if (value > 1'000'000'000)
            throw ParseError(std::string("pgm: ") + what + " out of range");
    }
    return static_cast<int>(value);
}

}  // namespace

DepthFrame read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
        throw ParseError("pgm: malformed magic number (expected P5)");

    const int width = read_header_number(in, "width");
    const int height = read_header_number(in, "height");
    const int maxval = read_header_number(in, "maxval");
    if (width == 0 || height == 0)
        throw ParseError("pgm: zero width or height");
    if (maxval != 255)
        throw ParseError("pgm: unsupported maxval " + std::to_string(maxval) +
                         " (only 255)");

    // Exactly one whitespace byte separates the header from the raster.
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        throw ParseError("pgm: missing whitespace before raster");

    const std::size_t count =
        static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> pixels(count);
    in.read(reinterpret_cast<char*>(pixels.data()),
            static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
        throw ParseError("pgm: truncated raster (" + std::to_string(in.gcount()) +
                         " of " + std::to_string(count) + " bytes)");
    return DepthFrame(width, height, std::move(pixels));
}

DepthFrame read_pgm(const std::string& bytes) {
    std::istringstream in(bytes);
    return read_pgm(in);
}

DepthFrame read_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open PGM file: " + path.string());
    try {
        return read_pgm(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_pgm(const DepthFrame& frame, std::ostream& out) {
    out << "P5\n" << frame.width() << ' ' << frame.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.pixels().data()),
              static_cast<std::streamsize>(frame.pixels().size()));
}

std::string write_pgm(const DepthFrame& frame) {
    std::ostringstream out;
    write_pgm(frame, out);
    return out.str();
}

void write_pgm_file(const DepthFrame& frame, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open PGM file for writing: " + path.string());
    write_pgm(frame, out);
    if (!out)
        throw IoError("write failed: " + path.string());
}

std::vector<std::filesystem::path> read_manifest(std::istream& in,
                                                 const std::filesystem::path& base_dir) {
    std::vector<std::filesystem::path> paths;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::filesystem::path p(line);
        paths.push_back(p.is_absolute() ? p : base_dir / p);
    }
    return paths;
}

FrameSequence read_sequence(const std::vector<std::filesystem::path>& paths) {
    if (paths.empty())
        throw InvalidParams("sequence: empty manifest");
    FrameSequence seq;
    for (const auto& p : paths) {
        DepthFrame frame = read_pgm_file(p);
        if (!seq.empty() &&
            (frame.width() != seq.width() || frame.height() != seq.height()))
            throw ParseError("sequence: dimension mismatch at " + p.string());
        seq.append(std::move(frame));
    }
    return seq;
}

FrameSequence read_sequence_file(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in)
        throw IoError("cannot open manifest: " + manifest_path.string());
    auto paths = read_manifest(in, manifest_path.parent_path());
    return read_sequence(paths);
}

std::filesystem::path write_sequence(const FrameSequence& seq,
                                     const std::filesystem::path& out_dir,
                                     const std::string& manifest_name) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir / "frames", ec);
    if (ec)
        throw IoError("cannot create output directory: " + (out_dir / "frames").string() +
                      " (" + ec.message() + ")");

    std::vector<std::string> names;
    names.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%06zu.pgm", i);
        std::string rel = std::string("frames/") + name;
        write_pgm_file(seq[i], out_dir / rel);
        names.push_back(std::move(rel));
    }

    const auto manifest_path = out_dir / manifest_name;
    std::ofstream out(manifest_path, std::ios::binary);
    if (!out)
        throw IoError("cannot write manifest: " + manifest_path.string());
    for (const auto& name : names)
        out << name << '\n';
    if (!out)
        throw IoError("write failed: " + manifest_path.string());
    return manifest_path;
}

}  // namespace tofsign
