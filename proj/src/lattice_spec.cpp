#include <cctype>
#include <string>

#include "rootlat/error.hpp"
#include "rootlat/lattice.hpp"

namespace rootlat {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& what) {
    fail(ErrorKind::Parse, "lattice spec '" + text + "': " + what + " at position " + std::to_string(pos));
}

} // namespace

CompositeLattice parse_lattice_spec(const std::string& text) {
    // '+'-separated tokens [ADE][0-9]+ with optional "k*" multiplier;
    // whitespace ignored, kind letter case-insensitive.
    std::string s;
    std::vector<size_t> src; // original position of each kept character
    for (size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            src.push_back(i);
        }
    auto pos_of = [&](size_t i) { return i < src.size() ? src[i] : text.size(); };

    std::vector<std::pair<Kind, int>> parts;
    size_t i = 0;
    if (s.empty()) fail(ErrorKind::EmptySpec, "empty lattice spec");
    while (true) {
        long repeat = 1;
        size_t tok = i;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j >= s.size() || s[j] != '*') parse_fail(text, pos_of(i), "expected '*' after multiplier");
            repeat = std::stol(s.substr(i, j - i));
            if (repeat < 1) parse_fail(text, pos_of(i), "multiplier must be >= 1");
            i = j + 1;
            tok = i;
        }
        if (i >= s.size()) parse_fail(text, pos_of(i), "expected lattice token");
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        Kind kind;
        if (c == 'A') kind = Kind::A;
        else if (c == 'D') kind = Kind::D;
        else if (c == 'E') kind = Kind::E;
        else parse_fail(text, pos_of(i), std::string("unknown kind '") + s[i] + "'");
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) parse_fail(text, pos_of(tok), "missing rank digits");
        long rank = std::stol(s.substr(i, j - i));
        for (long r = 0; r < repeat; ++r) parts.emplace_back(kind, static_cast<int>(rank));
        i = j;
        if (i == s.size()) break;
        if (s[i] != '+') parse_fail(text, pos_of(i), std::string("expected '+', got '") + s[i] + "'");
        ++i;
    }
    return build_composite(parts);
}

} // namespace rootlat
