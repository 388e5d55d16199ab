#pragma once

#include <string>
#include <vector>

#include "tofsign/gesture.hpp"

namespace tofsign {

// One recognized sign: informational gloss, the SiGML movement element
// name, and the HamNoSys code point (Private Use Area) for that symbol.
struct SignEntry {
    std::string gloss;
    std::string element_name;
    char32_t hamnosys_codepoint = 0;
};

// Right -> hammover/U+E082, Left -> hammovel/U+E086,
// Up -> hammoveu/U+E080, Down -> hammoved/U+E084.
SignEntry class_to_element(GestureClass c);

// Serializes the recognized classes, in order, as a UTF-8 SiGML document:
//
//   <sigml>
//     <hns_sign gloss="...">
//       <hamnosys_nonmanual/>
//       <hamnosys_manual>
//         <hammover/>
//       </hamnosys_manual>
//     </hns_sign>
//     ...
//   </sigml>
//
// Output bytes are deterministic for a given input. An empty list yields
// an empty <sigml/> root.
std::string emit_sigml(const std::vector<GestureClass>& classes);

// Recovers the class list from a document produced by emit_sigml (or a
// structurally equivalent one; whitespace and indentation are irrelevant).
// Throws ParseError on malformed XML or unknown movement elements.
std::vector<GestureClass> parse_sigml(std::string_view xml);

}  // namespace tofsign
