#pragma once

#include <string_view>
#include <vector>

#include "graev/freegroup.hpp"
#include "graev/word_io.hpp"

namespace graev::test {

inline Letter P(std::initializer_list<std::uint64_t> c) { return Letter::pos(Point(c)); }
inline Letter N(std::initializer_list<std::uint64_t> c) { return Letter::neg(Point(c)); }
inline Letter E() { return Letter::identity(); }

inline Word W(std::string_view text) { return parse_word(text); }
inline ReducedWord R(std::string_view text) { return reduce(parse_word(text)); }

// {[0], [1], [2]}: the 3-point alphabet used by the exhaustive suites.
inline std::vector<Point> three_points() { return {Point{}, Point{1}, Point{2}}; }

}  // namespace graev::test
