#pragma once

#include <string>
#include <string_view>

namespace tofsign {

// Shortest decimal representation that parses back to the same double
// (std::to_chars). "1" for 1.0, "0.9375" for 15/16. Used everywhere a
// floating value ends up in a report or CSV so output is byte-reproducible.
std::string format_double(double value);

// Strict parsers for CSV fields: the whole field must be consumed.
double parse_double(std::string_view text);
long parse_long(std::string_view text);

}  // namespace tofsign
