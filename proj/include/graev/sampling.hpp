#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graev/freegroup.hpp"
#include "graev/matching.hpp"

namespace graev {

// Seeded source built on the raw output of std::mt19937_64, which the
// standard pins down bit for bit. The std distributions are not, so all
// derived draws are computed here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// All points of depth <= depth with every coordinate in [0, max_coord].
std::vector<Point> points_up_to_depth(std::size_t depth, std::uint64_t max_coord);

// Pos and Neg letters over the given points (no e).
std::vector<Letter> signed_letters(const std::vector<Point>& points);

// Every reduced word of length 1..max_len over the letters, plus [e].
std::vector<ReducedWord> all_reduced_words(const std::vector<Letter>& letters,
                                           std::size_t max_len);

struct SamplerConfig {
  std::vector<Point> alphabet;
  std::size_t max_len = 8;
  // Probability of adding another letter (geometric length).
  std::uint64_t continue_num = 3;
  std::uint64_t continue_den = 4;
};

// Random reduced words: geometric length capped at max_len, letters drawn
// uniformly with a sign, and a draw that would cancel its predecessor is
// rejected and redrawn, so the output is already reduced.
class WordSampler {
 public:
  WordSampler(SamplerConfig config, std::uint64_t seed);

  ReducedWord next();
  // A word of exactly `len` letters.
  ReducedWord next_of_length(std::size_t len);
  // Pair of distinct words.
  std::pair<ReducedWord, ReducedWord> next_distinct_pair();
  Letter next_letter();
  // Random raw word (letters may cancel, e allowed).
  Word next_raw(std::size_t len);

  Rng& rng() { return rng_; }

 private:
  SamplerConfig config_;
  Rng rng_;
};

// A random match on {0, ..., len-1}: each leading index is fixed or paired
// with a uniformly chosen position, then both segments recurse.
Match random_match(Rng& rng, std::size_t len);

}  // namespace graev
