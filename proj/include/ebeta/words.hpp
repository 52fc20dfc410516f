#pragma once

#include <string>
#include <vector>

#include "ebeta/errors.hpp"

namespace ebeta {

/// The three letters of the coding alphabet, standing for 0, 1 and β+1.
/// The numeric value of DB depends on β and is resolved only when geometry needs it.
enum class Digit : unsigned char { D0 = 0, D1 = 1, DB = 2 };

using Word = std::vector<Digit>;

constexpr char digit_char(Digit d) {
    switch (d) {
        case Digit::D0: return '0';
        case Digit::D1: return '1';
        default: return 'B';
    }
}

inline Digit digit_from_char(char c) {
    switch (c) {
        case '0': return Digit::D0;
        case '1': return Digit::D1;
        case 'B': return Digit::DB;
        default: throw ParseError(std::string("bad digit '") + c + "'");
    }
}

inline std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Digit d : w) s.push_back(digit_char(d));
    return s;
}

/// Whitespace is ignored; anything outside {0,1,B} is rejected.
inline Word parse_word(const std::string& s) {
    Word w;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        w.push_back(digit_from_char(c));
    }
    return w;
}

}  // namespace ebeta
