#pragma once

#include <string>
#include <string_view>

#include "graev/freegroup.hpp"

namespace graev {

// Text grammar:
//   word  := term (WS term)*
//   term  := "e" | point inv?
//   point := "[" nat ("," nat)* "]"
//   inv   := "^-1"
// "[]" is also accepted for the zero point. Parsing canonicalizes points but
// never reduces the word.
Word parse_word(std::string_view text);

std::string to_string(const Point& p);
std::string to_string(const Letter& l);
std::string to_string(const Word& w);
inline std::string to_string(const ReducedWord& w) { return to_string(w.word()); }

}  // namespace graev
