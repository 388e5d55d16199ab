#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tofsign/errors.hpp"

namespace tofsign {

// Single 8-bit depth frame. Origin is the top-left corner; x indexes
// columns (rightward), y indexes rows (downward). Nearer objects carry
// higher intensity.
class DepthFrame {
public:
    DepthFrame(int width, int height)
        : width_(width),
          height_(height),
          pixels_(checked_size(width, height), 0) {}

    DepthFrame(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != checked_size(width, height))
            throw InvalidParams("DepthFrame: pixel count does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
    void set(int x, int y, std::uint8_t v) { pixels_[index(x, y)] = v; }

    std::span<const std::uint8_t> pixels() const { return pixels_; }
    std::span<std::uint8_t> pixels() { return pixels_; }

    bool operator==(const DepthFrame&) const = default;

private:
    static std::size_t checked_size(int width, int height) {
        if (width <= 0 || height <= 0)
            throw InvalidParams("DepthFrame: dimensions must be positive");
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;
};

// Ordered recording of frames sharing one resolution. append() rejects
// dimension mismatches, so the invariant holds by construction.
class FrameSequence {
public:
    FrameSequence() = default;

    void append(DepthFrame frame) {
        if (!frames_.empty() && (frame.width() != frames_.front().width() ||
                                 frame.height() != frames_.front().height()))
            throw InvalidParams("FrameSequence: frame dimensions differ");
        frames_.push_back(std::move(frame));
    }

    bool empty() const { return frames_.empty(); }
    std::size_t size() const { return frames_.size(); }
    const DepthFrame& operator[](std::size_t i) const { return frames_[i]; }

    // Valid only for non-empty sequences.
    int width() const { return frames_.front().width(); }
    int height() const { return frames_.front().height(); }

    auto begin() const { return frames_.begin(); }
    auto end() const { return frames_.end(); }

    // Informational; capture devices in this domain run at ~30 fps.
    double frame_rate_hint = 30.0;

private:
    std::vector<DepthFrame> frames_;
};

}  // namespace tofsign
