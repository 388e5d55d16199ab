#include "tofsign/features.hpp"

#include <vector>

namespace tofsign {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

}  // namespace

std::int64_t moment(const DepthFrame& frame, int p, int q) {
    if (p < 0 || q < 0)
        throw InvalidParams("moment: orders must be non-negative");

    std::vector<std::int64_t> xpow(static_cast<std::size_t>(frame.width()));
    for (int x = 0; x < frame.width(); ++x)
        xpow[static_cast<std::size_t>(x)] = ipow(x, p);

    auto px = frame.pixels();
    std::int64_t total = 0;
    std::size_t i = 0;
    for (int y = 0; y < frame.height(); ++y) {
        std::int64_t row = 0;
        for (int x = 0; x < frame.width(); ++x, ++i)
            row += xpow[static_cast<std::size_t>(x)] * px[i];
        total += ipow(y, q) * row;
    }
    return total;
}

MomentSet compute_moments(const DepthFrame& frame) {
    MomentSet m;
    auto px = frame.pixels();
    std::size_t i = 0;
    for (int y = 0; y < frame.height(); ++y) {
        std::int64_t row_sum = 0;
        std::int64_t row_xdot = 0;
        for (int x = 0; x < frame.width(); ++x, ++i) {
            const std::int64_t v = px[i];
            row_sum += v;
            row_xdot += x * v;
        }
        m.m00 += row_sum;
        m.m10 += row_xdot;
        m.m01 += y * row_sum;
    }
    return m;
}

Centroid centroid(const MomentSet& m) {
    if (m.m00 == 0)
        throw EmptyFrameError("centroid: frame has zero total intensity");
    return {static_cast<double>(m.m10) / static_cast<double>(m.m00),
            static_cast<double>(m.m01) / static_cast<double>(m.m00)};
}

Centroid centroid(const DepthFrame& frame) {
    return centroid(compute_moments(frame));
}

}  // namespace tofsign
