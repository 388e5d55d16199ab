#pragma once

#include <cstdint>

#include "tofsign/depth_frame.hpp"

namespace tofsign {

// First-order grey-value moments, kept as exact integers. Division is
// deferred to centroid construction so no rounding happens here.
struct MomentSet {
    std::int64_t m00 = 0;  // total intensity
    std::int64_t m10 = 0;  // x-weighted intensity sum
    std::int64_t m01 = 0;  // y-weighted intensity sum
};

// Intensity-weighted center of gravity, sub-pixel.
struct Centroid {
    double x = 0.0;
    double y = 0.0;
};

// Displacement of the center of gravity between the first and last frame
// of an action. This 2-D vector is the complete classification feature.
struct MovementVector {
    double dx = 0.0;
    double dy = 0.0;
};

// Grey-value moment of order (p, q): sum over all pixels of
// x^p * y^q * intensity(x, y), with x the column and y the row index.
// Evaluated with per-column power tables rather than per-pixel pow calls;
// exact for first-order moments on any 8-bit frame (the m10 bound is
// 255 * width * height * (width - 1), well inside int64).
std::int64_t moment(const DepthFrame& frame, int p, int q);

// Single-pass computation of m00, m10, m01.
MomentSet compute_moments(const DepthFrame& frame);

// (m10/m00, m01/m00). Throws EmptyFrameError when m00 == 0, i.e. no hand
// survived filtering.
Centroid centroid(const DepthFrame& frame);
Centroid centroid(const MomentSet& m);

inline MovementVector movement_vector(const Centroid& start, const Centroid& end) {
    return {end.x - start.x, end.y - start.y};
}

}  // namespace tofsign
