#include "tofsign/gesture.hpp"

#include <string>

namespace tofsign {

std::string_view to_string(GestureClass c) {
    switch (c) {
        case GestureClass::Right: return "Right";
        case GestureClass::Left: return "Left";
        case GestureClass::Up: return "Up";
        case GestureClass::Down: return "Down";
    }
    throw InvalidParams("to_string: invalid GestureClass value");
}

GestureClass gesture_class_from_string(std::string_view name) {
    for (GestureClass c : kAllGestureClasses) {
        if (name == to_string(c))
            return c;
    }
    throw ParseError("unknown gesture class: \"" + std::string(name) + "\"");
}

}  // namespace tofsign
