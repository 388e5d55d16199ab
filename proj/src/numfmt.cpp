#include "tofsign/numfmt.hpp"

#include <charconv>

#include "tofsign/errors.hpp"

namespace tofsign {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        throw InvalidParams("format_double: value not representable");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("not a number: \"" + std::string(text) + "\"");
    return value;
}

long parse_long(std::string_view text) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("not an integer: \"" + std::string(text) + "\"");
    return value;
}

}  // namespace tofsign
