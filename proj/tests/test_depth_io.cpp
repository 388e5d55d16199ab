#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "tofsign/pgm.hpp"

using namespace tofsign;

namespace {

std::string with_raster(const std::string& header, std::initializer_list<int> bytes) {
    std::string data = header;
    for (int b : bytes)
        data.push_back(static_cast<char>(b));
    return data;
}

}  // namespace

TEST_CASE("read_pgm parses a minimal P5 stream in raster order") {
    const auto frame = read_pgm(with_raster("P5 2 2 255 ", {0, 10, 20, 30}));
    CHECK(frame.width() == 2);
    CHECK(frame.height() == 2);
    CHECK(frame.at(0, 0) == 0);
    CHECK(frame.at(1, 0) == 10);
    CHECK(frame.at(0, 1) == 20);
    CHECK(frame.at(1, 1) == 30);
}

TEST_CASE("read_pgm accepts comments between header tokens") {
    const auto frame =
        read_pgm(with_raster("P5\n# a comment\n2 1\n# maxval next\n255\n", {7, 9}));
    CHECK(frame.width() == 2);
    CHECK(frame.at(0, 0) == 7);
    CHECK(frame.at(1, 0) == 9);
}

TEST_CASE("read_pgm rejects malformed input with named errors") {
    CHECK_THROWS_AS(read_pgm(with_raster("P6 1 1 255 ", {0})), ParseError);
    CHECK_THROWS_AS(read_pgm(with_raster("P5 1 1 65535 ", {0, 0})), ParseError);
    CHECK_THROWS_AS(read_pgm(with_raster("P5 0 2 255 ", {})), ParseError);
    CHECK_THROWS_AS(read_pgm(with_raster("P5 2 2 255 ", {1, 2, 3})), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("P5 2")), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("")), ParseError);
    CHECK_THROWS_AS(read_pgm(std::string("P5 a b 255 ")), ParseError);
}

TEST_CASE("write_pgm emits the fixed layout") {
    const DepthFrame frame(1, 1);
    const std::string bytes = write_pgm(frame);
    CHECK(bytes == std::string("P5\n1 1\n255\n\0", 12));
}

TEST_CASE("640x480 frame has a raster section of exactly width*height bytes") {
    const DepthFrame frame(640, 480);
    const std::string bytes = write_pgm(frame);
    const std::string header = "P5\n640 480\n255\n";
    CHECK(bytes.size() == header.size() + 640 * 480);
    CHECK(bytes.compare(0, header.size(), header) == 0);
}

TEST_CASE("pgm round trip is identity for random frames") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 32);
    for (int i = 0; i < 50; ++i) {
        const auto frame = testutil::random_frame(rng, dim(rng), dim(rng));
        CHECK(read_pgm(write_pgm(frame)) == frame);
    }
}

TEST_CASE("read_pgm never crashes: garbage input maps to ParseError") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> len(0, 64);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 500; ++i) {
        std::string garbage(static_cast<std::size_t>(len(rng)), '\0');
        for (auto& c : garbage)
            c = static_cast<char>(byte(rng));
        try {
            (void)read_pgm(garbage);
        } catch (const ParseError&) {
        }
    }
    // Truncations of a valid file parse or reject, never crash.
    const std::string valid = write_pgm(testutil::random_frame(rng, 5, 4));
    for (std::size_t cut = 0; cut < valid.size(); ++cut) {
        try {
            (void)read_pgm(valid.substr(0, cut));
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("read_sequence returns frames in manifest order, ignoring blank lines") {
    testutil::TempDir dir;
    for (int i = 0; i < 3; ++i) {
        DepthFrame frame(2, 2);
        frame.set(0, 0, static_cast<std::uint8_t>(100 + i));
        write_pgm_file(frame, dir.path() / ("f" + std::to_string(i) + ".pgm"));
    }
    std::ofstream(dir.path() / "manifest.txt")
        << "f0.pgm\n\nf1.pgm\nf2.pgm\n\n";

    const FrameSequence seq = read_sequence_file(dir.path() / "manifest.txt");
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].at(0, 0) == 100);
    CHECK(seq[1].at(0, 0) == 101);
    CHECK(seq[2].at(0, 0) == 102);
}

TEST_CASE("read_sequence rejects dimension mismatches") {
    testutil::TempDir dir;
    write_pgm_file(DepthFrame(2, 2), dir.path() / "a.pgm");
    write_pgm_file(DepthFrame(3, 3), dir.path() / "b.pgm");
    std::ofstream(dir.path() / "manifest.txt") << "a.pgm\nb.pgm\n";
    CHECK_THROWS_AS(read_sequence_file(dir.path() / "manifest.txt"), ParseError);
}

TEST_CASE("read_sequence rejects empty manifests and missing files") {
    testutil::TempDir dir;
    std::ofstream(dir.path() / "empty.txt") << "\n\n";
    CHECK_THROWS_AS(read_sequence_file(dir.path() / "empty.txt"), InvalidParams);

    std::ofstream(dir.path() / "missing.txt") << "nope.pgm\n";
    CHECK_THROWS_AS(read_sequence_file(dir.path() / "missing.txt"), IoError);

    CHECK_THROWS_AS(read_sequence_file(dir.path() / "does_not_exist.txt"), IoError);
}

TEST_CASE("write_sequence lays out frames plus manifest, readable back") {
    testutil::TempDir dir;
    std::mt19937 rng(5);
    FrameSequence seq;
    for (int i = 0; i < 4; ++i)
        seq.append(testutil::random_frame(rng, 6, 5));

    const auto manifest = write_sequence(seq, dir.path() / "db");
    const FrameSequence back = read_sequence_file(manifest);
    REQUIRE(back.size() == seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        CHECK(back[i] == seq[i]);
}
