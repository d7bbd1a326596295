#include "parse_util.hpp"

#include <cctype>
#include <string>

namespace edr::detail {

void trim(std::string_view& text, std::size_t& at) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
        ++at;
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
}

Integer parse_signed_integer(std::string_view text, std::size_t offset) {
    std::size_t at = offset;
    trim(text, at);
    if (text.empty()) throw ParseError("expected an integer", at);
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') ++i;
    if (i == text.size()) throw ParseError("expected digits after sign", at + i);
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw ParseError("unexpected character in integer", at + k);
    Integer v(std::string(text.substr(text[0] == '+' ? 1 : 0)));
    return v;
}

std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text, char sep) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == sep && depth == 0) {
            out.emplace_back(text.substr(start, i - start), start);
            start = i + 1;
        }
    }
    out.emplace_back(text.substr(start), start);
    return out;
}

}  // namespace edr::detail
