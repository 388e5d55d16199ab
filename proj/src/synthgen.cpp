#include "tofsign/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tofsign/features.hpp"

namespace tofsign {

void GenParams::validate() const {
    band.validate();
    if (frame_width < 8 || frame_height < 8)
        throw InvalidParams("gen: frame dimensions must be at least 8x8");
    if (hand_radius < 1)
        throw InvalidParams("gen: hand_radius must be >= 1");
    if (travel_distance <= 0.0)
        throw InvalidParams("gen: travel_distance must be positive");
    if (travel_jitter < 0.0 || travel_jitter >= travel_distance / 2.0)
        throw InvalidParams("gen: travel_jitter must satisfy 0 <= jitter < travel_distance/2");
    if (position_jitter < 0.0)
        throw InvalidParams("gen: position_jitter must be >= 0");
    if (frames_per_action < 2)
        throw InvalidParams("gen: frames_per_action must be >= 2");
    if (blank_frames_between < 1)
        throw InvalidParams("gen: blank_frames_between must be >= 1");
    if (clipped_fraction < 0.0 || clipped_fraction > 1.0)
        throw InvalidParams("gen: clipped_fraction must lie in [0, 1]");
}

GenParams tiny_gen_params(std::uint32_t seed) {
    GenParams p;
    p.seed = seed;
    p.frame_width = 64;
    p.frame_height = 48;
    p.hand_radius = 10;
    p.travel_distance = 16.0;
    p.travel_jitter = 2.0;
    p.position_jitter = 12.0;
    p.frames_per_action = 5;
    p.blank_frames_between = 2;
    return p;
}

namespace {

struct Direction {
    double x = 0.0;
    double y = 0.0;
};

Direction class_direction(GestureClass c) {
    switch (c) {
        case GestureClass::Right: return {1.0, 0.0};
        case GestureClass::Left: return {-1.0, 0.0};
        case GestureClass::Up: return {0.0, -1.0};
        case GestureClass::Down: return {0.0, 1.0};
    }
    throw InvalidParams("gen: invalid GestureClass value");
}

// Static scene behind the hand: a horizontal depth gradient plus one
// distractor blob, every pixel outside the intensity band so the filter
// removes the lot.
DepthFrame make_background(const GenParams& p) {
    DepthFrame bg(p.frame_width, p.frame_height);
    const int max_bg = p.band.low - 1;
    if (max_bg > 0 && p.frame_width > 1) {
        for (int x = 0; x < p.frame_width; ++x) {
            const auto v = static_cast<std::uint8_t>(
                static_cast<long>(x) * max_bg / (p.frame_width - 1));
            for (int y = 0; y < p.frame_height; ++y)
                bg.set(x, y, v);
        }
    }
    if (p.band.low >= 2) {
        const auto v = static_cast<std::uint8_t>(p.band.low / 2);
        const double cx = p.frame_width * 0.75;
        const double cy = p.frame_height * 0.25;
        const double r = p.hand_radius * 1.5;
        const double r2 = r * r;
        const int x0 = std::max(0, static_cast<int>(std::floor(cx - r)));
        const int x1 = std::min(p.frame_width - 1, static_cast<int>(std::ceil(cx + r)));
        const int y0 = std::max(0, static_cast<int>(std::floor(cy - r)));
        const int y1 = std::min(p.frame_height - 1, static_cast<int>(std::ceil(cy + r)));
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                const double dx = x - cx;
                const double dy = y - cy;
                if (dx * dx + dy * dy <= r2)
                    bg.set(x, y, v);
            }
    }
    return bg;
}

// Filled disk, cropped at the frame bounds. Depth profile is radial:
// band.high-1 at the center falling to band.low at the rim, so every hand
// pixel stays inside [band.low, band.high).
void render_hand(DepthFrame& frame, double cx, double cy, const GenParams& p) {
    const double r = p.hand_radius;
    const double r2 = r * r;
    const int span = p.band.high - 1 - p.band.low;
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - r)));
    const int x1 = std::min(frame.width() - 1, static_cast<int>(std::ceil(cx + r)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - r)));
    const int y1 = std::min(frame.height() - 1, static_cast<int>(std::ceil(cy + r)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double dx = x - cx;
            const double dy = y - cy;
            const double d2 = dx * dx + dy * dy;
            if (d2 <= r2) {
                const auto v = static_cast<std::uint8_t>(
                    p.band.low + std::llround(span * (1.0 - d2 / r2)));
                frame.set(x, y, v);
            }
        }
    }
}

int visible_hand_pixels(const DepthFrame& frame, const GenParams& p) {
    int count = 0;
    for (std::uint8_t v : frame.pixels())
        if (p.band.contains(v))
            ++count;
    return count;
}

// Draws travel and perpendicular drift, then renders the linear motion over
// the shared background. Draw order is part of the output contract.
FrameSequence render_action(GestureClass c, Position start, const GenParams& p,
                            Rng& rng, const DepthFrame& background) {
    const Direction dir = class_direction(c);
    const double travel =
        p.travel_distance + rng.uniform(-p.travel_jitter, p.travel_jitter);
    const double drift = rng.uniform(-p.travel_jitter, p.travel_jitter);
    const Position end = {start.x + travel * dir.x - drift * dir.y,
                          start.y + travel * dir.y + drift * dir.x};

    FrameSequence seq;
    for (int t = 0; t < p.frames_per_action; ++t) {
        const double alpha = static_cast<double>(t) / (p.frames_per_action - 1);
        DepthFrame frame = background;
        render_hand(frame, start.x + alpha * (end.x - start.x),
                    start.y + alpha * (end.y - start.y), p);
        seq.append(std::move(frame));
    }

    if (visible_hand_pixels(seq[0], p) == 0 ||
        visible_hand_pixels(seq[seq.size() - 1], p) == 0)
        throw InvalidParams("gen: blob fully invisible in start or end frame");
    return seq;
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

Interval motion_axis_interval(int dim, double sign, const GenParams& p) {
    const double margin = p.hand_radius + 1.0;
    const double travel_max = p.travel_distance + p.travel_jitter;
    Interval iv;
    if (sign > 0) {  // moving toward dim-1
        iv.lo = margin;
        iv.hi = dim - 1 - margin - travel_max;
    } else {
        iv.lo = margin + travel_max;
        iv.hi = dim - 1 - margin;
    }
    if (iv.lo > iv.hi)
        throw InvalidParams("gen: frame dimension " + std::to_string(dim) +
                            " too small for hand_radius and travel_distance");
    return iv;
}

Interval perp_axis_interval(int dim, const GenParams& p) {
    const double margin = p.hand_radius + p.travel_jitter + 1.0;
    Interval iv{margin, dim - 1 - margin};
    if (iv.lo > iv.hi)
        throw InvalidParams("gen: frame dimension " + std::to_string(dim) +
                            " too small for hand_radius and travel_jitter");
    return iv;
}

double clamp_to(double v, const Interval& iv) {
    return std::clamp(v, iv.lo, iv.hi);
}

// Start position for one database action. Unclipped actions keep the whole
// blob in frame for every frame of the motion; clipped ones sit across one
// of the two edges parallel to the motion, leaving between roughly 30% and
// 70% of the disk visible.
Position database_start(GestureClass c, Position base, bool clipped,
                        const GenParams& p, Rng& rng) {
    const Direction dir = class_direction(c);
    const bool horizontal = dir.x != 0.0;
    const double motion_sign = horizontal ? dir.x : dir.y;
    const int motion_dim = horizontal ? p.frame_width : p.frame_height;
    const int perp_dim = horizontal ? p.frame_height : p.frame_width;

    const Interval motion_iv = motion_axis_interval(motion_dim, motion_sign, p);
    const Interval perp_iv = perp_axis_interval(perp_dim, p);

    double motion_coord = clamp_to(horizontal ? base.x : base.y, motion_iv);
    double perp_coord = clamp_to(horizontal ? base.y : base.x, perp_iv);

    if (clipped) {
        const bool far_edge = (rng.next_u32() & 1u) != 0;
        const double r = p.hand_radius;
        const double inset = rng.uniform(-r / 8.0, r / 4.0);
        perp_coord = far_edge ? (perp_dim - 1) - inset : inset;
    }

    return horizontal ? Position{motion_coord, perp_coord}
                      : Position{perp_coord, motion_coord};
}

}  // namespace

FrameSequence generate_action(GestureClass c, Position start,
                              const GenParams& params, Rng& rng) {
    params.validate();
    return render_action(c, start, params, rng, make_background(params));
}

SyntheticDatabase generate_database(const GenParams& params) {
    params.validate();
    constexpr int kNumSets = 9;
    constexpr int kNumActions = kNumSets * 4;

    Rng rng(params.seed);
    const DepthFrame background = make_background(params);

    // Deterministic clipped slots, spread evenly across the 36 actions.
    const int n_clipped = static_cast<int>(
        std::llround(params.clipped_fraction * kNumActions));
    std::vector<bool> clipped_slot(kNumActions, false);
    for (int j = 0; j < n_clipped; ++j)
        clipped_slot[static_cast<std::size_t>(((2 * j + 1) * kNumActions) /
                                              (2 * n_clipped))] = true;

    SyntheticDatabase db;
    db.truth.num_sets = kNumSets;

    auto append_blanks = [&] {
        for (int i = 0; i < params.blank_frames_between; ++i)
            db.sequence.append(background);
    };

    const Position center = {params.frame_width / 2.0, params.frame_height / 2.0};

    append_blanks();
    for (int set_id = 1; set_id <= kNumSets; ++set_id) {
        Position base = center;
        if (set_id > 1) {
            base.x += rng.uniform(-params.position_jitter, params.position_jitter);
            base.y += rng.uniform(-params.position_jitter, params.position_jitter);
        }
        for (GestureClass c : kAllGestureClasses) {
            const int slot = (set_id - 1) * 4 + class_index(c);
            const Position start =
                database_start(c, base, clipped_slot[static_cast<std::size_t>(slot)],
                               params, rng);
            FrameSequence action = render_action(c, start, params, rng, background);

            const Centroid c_start = centroid(band_filter(action[0], params.band));
            const Centroid c_end =
                centroid(band_filter(action[action.size() - 1], params.band));
            db.truth.samples.push_back({movement_vector(c_start, c_end), c, set_id,
                                        c_start, c_end});

            for (const DepthFrame& frame : action)
                db.sequence.append(frame);
            append_blanks();
        }
    }
    return db;
}

}  // namespace tofsign
