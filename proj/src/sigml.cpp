#include "tofsign/sigml.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace tofsign {

SignEntry class_to_element(GestureClass c) {
    switch (c) {
        case GestureClass::Right: return {"HAND_TO_RIGHT", "hammover", U''};
        case GestureClass::Left: return {"HAND_TO_LEFT", "hammovel", U''};
        case GestureClass::Up: return {"HAND_TO_UP", "hammoveu", U''};
        case GestureClass::Down: return {"HAND_TO_DOWN", "hammoved", U''};
    }
    throw InvalidParams("class_to_element: invalid GestureClass value");
}

std::string emit_sigml(const std::vector<GestureClass>& classes) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
    if (classes.empty()) {
        out << "<sigml/>\n";
        return out.str();
    }
    out << "<sigml>\n";
    for (GestureClass c : classes) {
        const SignEntry entry = class_to_element(c);
        out << "  <hns_sign gloss=\"" << entry.gloss << "\">\n"
            << "    <hamnosys_nonmanual/>\n"
            << "    <hamnosys_manual>\n"
            << "      <" << entry.element_name << "/>\n"
            << "    </hamnosys_manual>\n"
            << "  </hns_sign>\n";
    }
    out << "</sigml>\n";
    return out.str();
}

namespace {

// Minimal XML reader, just enough for the SiGML dialect above: elements,
// quoted attributes, self-closing tags, comments, the XML declaration and
// the five standard entities. Non-whitespace text content is rejected.

struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlNode> children;
};

class XmlReader {
public:
    explicit XmlReader(std::string_view text) : text_(text) {}

    XmlNode parse_document() {
        skip_misc(true);
        if (pos_ >= text_.size() || text_[pos_] != '<')
            throw ParseError("xml: expected root element");
        XmlNode root = parse_element();
        skip_misc(false);
        if (pos_ < text_.size())
            throw ParseError("xml: content after root element");
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("xml: " + what + " at byte " + std::to_string(pos_));
    }

    bool starts_with(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
    }

    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Whitespace, comments and (optionally) the declaration between nodes.
    void skip_misc(bool allow_declaration) {
        for (;;) {
            skip_whitespace();
            if (allow_declaration && starts_with("<?")) {
                const auto end = text_.find("?>", pos_);
                if (end == std::string_view::npos)
                    fail("unterminated declaration");
                pos_ = end + 2;
            } else if (starts_with("<!--")) {
                const auto end = text_.find("-->", pos_ + 4);
                if (end == std::string_view::npos)
                    fail("unterminated comment");
                pos_ = end + 3;
            } else {
                return;
            }
        }
    }

    std::string read_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == ':' || c == '.')
                ++pos_;
            else
                break;
        }
        if (pos_ == start)
            fail("expected name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            const auto end = raw.find(';', i);
            if (end == std::string_view::npos)
                fail("unterminated entity");
            const std::string_view name = raw.substr(i + 1, end - i - 1);
            if (name == "amp") out += '&';
            else if (name == "lt") out += '<';
            else if (name == "gt") out += '>';
            else if (name == "quot") out += '"';
            else if (name == "apos") out += '\'';
            else fail("unknown entity &" + std::string(name) + ";");
            i = end;
        }
        return out;
    }

    XmlNode parse_element() {
        ++pos_;  // consume '<'
        XmlNode node;
        node.name = read_name();

        for (;;) {
            skip_whitespace();
            if (pos_ >= text_.size())
                fail("unterminated tag <" + node.name);
            if (starts_with("/>")) {
                pos_ += 2;
                return node;
            }
            if (text_[pos_] == '>') {
                ++pos_;
                break;
            }
            std::string attr = read_name();
            skip_whitespace();
            if (pos_ >= text_.size() || text_[pos_] != '=')
                fail("expected '=' after attribute " + attr);
            ++pos_;
            skip_whitespace();
            if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\''))
                fail("expected quoted value for attribute " + attr);
            const char quote = text_[pos_++];
            const auto end = text_.find(quote, pos_);
            if (end == std::string_view::npos)
                fail("unterminated attribute value");
            node.attributes.emplace_back(std::move(attr),
                                         decode_entities(text_.substr(pos_, end - pos_)));
            pos_ = end + 1;
        }

        // Children until the matching end tag.
        for (;;) {
            const std::size_t text_start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '<')
                ++pos_;
            for (std::size_t i = text_start; i < pos_; ++i) {
                if (!std::isspace(static_cast<unsigned char>(text_[i])))
                    fail("unexpected text content in <" + node.name + ">");
            }
            if (pos_ >= text_.size())
                fail("missing end tag for <" + node.name + ">");
            if (starts_with("<!--")) {
                skip_misc(false);
                continue;
            }
            if (starts_with("</")) {
                pos_ += 2;
                const std::string name = read_name();
                if (name != node.name)
                    fail("mismatched end tag </" + name + "> for <" + node.name + ">");
                skip_whitespace();
                if (pos_ >= text_.size() || text_[pos_] != '>')
                    fail("malformed end tag");
                ++pos_;
                return node;
            }
            node.children.push_back(parse_element());
        }
    }
};

const XmlNode& single_child(const XmlNode& node, std::string_view name) {
    const XmlNode* found = nullptr;
    for (const auto& child : node.children) {
        if (child.name == name) {
            if (found)
                throw ParseError("sigml: multiple <" + std::string(name) + "> in <" +
                                 node.name + ">");
            found = &child;
        }
    }
    if (!found)
        throw ParseError("sigml: missing <" + std::string(name) + "> in <" + node.name +
                         ">");
    return *found;
}

GestureClass class_from_element_name(std::string_view element_name) {
    for (GestureClass c : kAllGestureClasses) {
        if (class_to_element(c).element_name == element_name)
            return c;
    }
    throw ParseError("sigml: unknown movement element <" + std::string(element_name) +
                     ">");
}

}  // namespace

std::vector<GestureClass> parse_sigml(std::string_view xml) {
    const XmlNode root = XmlReader(xml).parse_document();
    if (root.name != "sigml")
        throw ParseError("sigml: root element is <" + root.name + ">, expected <sigml>");

    std::vector<GestureClass> classes;
    for (const auto& sign : root.children) {
        if (sign.name != "hns_sign")
            throw ParseError("sigml: unexpected <" + sign.name + "> under <sigml>");
        const XmlNode& manual = single_child(sign, "hamnosys_manual");
        if (manual.children.size() != 1)
            throw ParseError("sigml: <hamnosys_manual> must contain exactly one element");
        classes.push_back(class_from_element_name(manual.children.front().name));
    }
    return classes;
}

}  // namespace tofsign
