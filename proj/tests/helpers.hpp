#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tofsign/depth_frame.hpp"

namespace testutil {

inline tofsign::DepthFrame random_frame(std::mt19937& rng, int width, int height) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<std::uint8_t> px(static_cast<std::size_t>(width) *
                                 static_cast<std::size_t>(height));
    for (auto& v : px)
        v = static_cast<std::uint8_t>(dist(rng));
    return {width, height, std::move(px)};
}

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("tofsign_test_" + std::to_string(rd()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace testutil
