#include "graev/sampling.hpp"

#include <stdexcept>

namespace graev {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::vector<Point> points_up_to_depth(std::size_t depth, std::uint64_t max_coord) {
  std::vector<Point> out;
  std::vector<std::uint64_t> coords(depth, 0);
  for (;;) {
    out.emplace_back(coords);
    std::size_t k = 0;
    while (k < depth && coords[k] == max_coord) coords[k++] = 0;
    if (k == depth) break;
    ++coords[k];
  }
  return out;
}

std::vector<Letter> signed_letters(const std::vector<Point>& points) {
  std::vector<Letter> out;
  for (const auto& p : points) {
    out.push_back(Letter::pos(p));
    out.push_back(Letter::neg(p));
  }
  return out;
}

std::vector<ReducedWord> all_reduced_words(const std::vector<Letter>& letters,
                                           std::size_t max_len) {
  std::vector<ReducedWord> out{ReducedWord::identity()};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer)
      for (const auto& l : letters) {
        if (l.is_identity()) continue;
        if (!prefix.empty() && prefix.back() == l.inverse()) continue;
        auto w = prefix;
        w.push_back(l);
        out.push_back(reduce(Word(w)));
        next.push_back(std::move(w));
      }
    layer = std::move(next);
  }
  return out;
}

WordSampler::WordSampler(SamplerConfig config, std::uint64_t seed)
    : config_(std::move(config)), rng_(seed) {
  if (config_.alphabet.empty()) throw std::invalid_argument("WordSampler: empty alphabet");
  if (config_.max_len == 0) throw std::invalid_argument("WordSampler: max_len must be >= 1");
}

Letter WordSampler::next_letter() {
  const Point& p = config_.alphabet[rng_.below(config_.alphabet.size())];
  return rng_.chance(1, 2) ? Letter::pos(p) : Letter::neg(p);
}

ReducedWord WordSampler::next_of_length(std::size_t len) {
  std::vector<Letter> letters;
  while (letters.size() < len) {
    Letter l = next_letter();
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(std::move(l));
  }
  if (letters.empty()) return ReducedWord::identity();
  return reduce(Word(std::move(letters)));
}

ReducedWord WordSampler::next() {
  std::size_t len = 1;
  while (len < config_.max_len && rng_.chance(config_.continue_num, config_.continue_den)) ++len;
  return next_of_length(len);
}

std::pair<ReducedWord, ReducedWord> WordSampler::next_distinct_pair() {
  for (;;) {
    ReducedWord u = next();
    ReducedWord v = next();
    if (u != v) return {std::move(u), std::move(v)};
  }
}

Word WordSampler::next_raw(std::size_t len) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back(rng_.chance(1, 8) ? Letter::identity() : next_letter());
  return Word(std::move(letters));
}

namespace {

void fill_random(Rng& rng, std::vector<std::size_t>& map, std::size_t begin, std::size_t end) {
  while (begin < end) {
    std::size_t j = begin + rng.below(end - begin);
    map[begin] = j;
    map[j] = begin;
    if (j > begin) fill_random(rng, map, begin + 1, j);
    begin = j + 1;
  }
}

}  // namespace

Match random_match(Rng& rng, std::size_t len) {
  std::vector<std::size_t> map(len);
  fill_random(rng, map, 0, len);
  return Match(std::move(map));
}

}  // namespace graev
