#pragma once

#include <array>
#include <string_view>

#include "tofsign/errors.hpp"

namespace tofsign {

// The four directional hand movements. Directions are screen coordinates
// with the top-left origin: Right = +x, Left = -x, Up = -y, Down = +y.
enum class GestureClass { Right, Left, Up, Down };

inline constexpr std::array<GestureClass, 4> kAllGestureClasses = {
    GestureClass::Right, GestureClass::Left, GestureClass::Up, GestureClass::Down};

constexpr int class_index(GestureClass c) { return static_cast<int>(c); }

std::string_view to_string(GestureClass c);

// Accepts exactly "Right", "Left", "Up" or "Down"; throws ParseError otherwise.
GestureClass gesture_class_from_string(std::string_view name);

}  // namespace tofsign
