#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graev/freegroup.hpp"

namespace graev {

// A non-crossing involution on {0, ..., size()-1}. Fixed points are allowed.
// Matches on an interval {m, ..., n} are represented re-indexed from 0.
class Match {
 public:
  // Throws std::invalid_argument unless `map` is a match.
  explicit Match(std::vector<std::size_t> map);

  static Match identity(std::size_t len);

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  std::span<const std::size_t> map() const { return map_; }

  // Restriction to {first, ..., last}, re-indexed to start at 0. The
  // interval must be closed under the involution.
  Match restrict(std::size_t first, std::size_t last) const;

  friend bool operator==(const Match&, const Match&) = default;
  friend auto operator<=>(const Match&, const Match&) = default;

 private:
  struct Unchecked {};
  Match(std::vector<std::size_t> map, Unchecked) : map_(std::move(map)) {}
  friend void for_each_match(std::size_t, const std::function<void(const Match&)>&);
  std::vector<std::size_t> map_;
};

// Literal check of both defining conditions; the crossing test quantifies
// over all pairs i < j. Out-of-range images give false.
bool is_match(std::span<const std::size_t> candidate);

// Same predicate, linear time: involution check plus a stack scan for
// properly nested arcs.
bool is_match_linear(std::span<const std::size_t> candidate);

// Visits every match on {0, ..., len-1} exactly once. Order: index 0 fixed
// first, then 0 paired with j = 1, 2, ...; each case recurses on the inner
// segment before the outer one. len == 0 throws std::invalid_argument.
void for_each_match(std::size_t len, const std::function<void(const Match&)>& visit);
std::vector<Match> enumerate_matches(std::size_t len);

// Motzkin number M_len from M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}.
// Throws std::overflow_error past 64 bits.
std::uint64_t count_matches(std::size_t len);

// w^theta: x_i where theta(i) > i, e where theta(i) = i, and the inverse of
// x_theta(i) where theta(i) < i.
Word apply_match(const Word& w, const Match& theta);

// Sum of letterwise distances of two equal-length words.
Rat rho(const Word& u, const Word& v);

std::string to_string(const Match& m);  // "3 2 1 0"

}  // namespace graev
