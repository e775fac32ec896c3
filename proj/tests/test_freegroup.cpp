#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "graev/errors.hpp"
#include "graev/freegroup.hpp"
#include "graev/sampling.hpp"
#include "graev/word_io.hpp"
#include "support.hpp"

using namespace graev;
using namespace graev::test;

namespace {

std::vector<Letter> test_alphabet() {
  std::vector<Letter> out{E()};
  for (const auto& p : {Point{}, Point{1}, Point{2}, Point{1, 2}, Point{1, 3}, Point{1, 2, 5},
                        Point{0, 0, 1}}) {
    out.push_back(Letter::pos(p));
    out.push_back(Letter::neg(p));
  }
  return out;
}

// Rewrites in a random order: either cancel a random x x^{-1} to e, or drop
// a random e from a word longer than one letter.
Word reduce_by_random_rewriting(Word w, std::mt19937& gen) {
  for (;;) {
    std::vector<std::pair<int, std::size_t>> moves;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.size() > 1 && w[i].is_identity()) moves.emplace_back(0, i);
      if (i + 1 < w.size() && !w[i].is_identity() && w[i + 1] == w[i].inverse())
        moves.emplace_back(1, i);
    }
    if (moves.empty()) return w;
    auto [kind, i] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(gen)];
    std::vector<Letter> next(w.begin(), w.end());
    if (kind == 0) {
      next.erase(next.begin() + static_cast<long>(i));
    } else {
      next.erase(next.begin() + static_cast<long>(i), next.begin() + static_cast<long>(i) + 2);
      next.insert(next.begin() + static_cast<long>(i), E());
    }
    w = Word(std::move(next));
  }
}

}  // namespace

TEST_CASE("points drop trailing zeros", "[freegroup]") {
  CHECK(Point{1, 2, 0, 0} == Point{1, 2});
  CHECK(Point{0, 0}.depth() == 0);
  CHECK(Point{1, 2, 3}.truncate(2) == Point{1, 2});
  CHECK(Point{1, 0, 3}.truncate(2) == Point{1});
  CHECK(Point{1, 2}[7] == 0);
}

TEST_CASE("letter_distance examples", "[freegroup]") {
  CHECK(letter_distance(P({1, 2}), P({1, 2})) == Rat(0));
  CHECK(letter_distance(P({1, 2}), P({1, 3})) == Rat(1, 2));
  CHECK(letter_distance(N({1}), P({2})) == Rat(1));
  CHECK(letter_distance(E(), P({})) == Rat(1));
  CHECK(letter_distance(E(), E()) == Rat(0));
  CHECK(letter_distance(P({1, 2, 5}), P({1, 2, 6})) == Rat(1, 4));
  CHECK(letter_distance(N({0, 0, 1}), N({})) == Rat(1, 4));
  CHECK(letter_distance(N({1, 2}), N({1, 3})) == Rat(1, 2));
}

TEST_CASE("letter_distance is a metric bounded by 1", "[freegroup][property]") {
  auto letters = test_alphabet();
  for (const auto& a : letters)
    for (const auto& b : letters) {
      Rat dab = letter_distance(a, b);
      CHECK(dab <= Rat(1));
      CHECK(dab.is_zero() == (a == b));
      CHECK(dab == letter_distance(b, a));
      CHECK(dab == letter_distance(a.inverse(), b.inverse()));
      for (const auto& c : letters) CHECK(dab <= letter_distance(a, c) + letter_distance(c, b));
    }
}

TEST_CASE("distinct points of N_n are at least 2^-n apart", "[freegroup][property]") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto points = points_up_to_depth(n, 2);
    for (const auto& p : points)
      for (const auto& q : points)
        if (p != q) CHECK(letter_distance(Letter::pos(p), Letter::pos(q)) >= Rat::pow2_neg(n));
  }
}

TEST_CASE("inverse is an involution", "[freegroup]") {
  for (const auto& a : test_alphabet()) CHECK(a.inverse().inverse() == a);
  CHECK(E().inverse() == E());
  CHECK(P({1}).inverse() == N({1}));
}

TEST_CASE("words are never empty", "[freegroup]") {
  CHECK_THROWS_AS(Word(std::vector<Letter>{}), std::invalid_argument);
  CHECK(Word().size() == 1);
  CHECK(Word()[0].is_identity());
}

TEST_CASE("reduce examples", "[freegroup]") {
  CHECK(reduce(Word{P({1}), N({1})}).word() == Word{E()});
  CHECK(reduce(Word{P({1}), E(), P({2})}).word() == (Word{P({1}), P({2})}));
  CHECK(reduce(Word{P({1}), N({2}), P({2}), P({1})}).word() == (Word{P({1}), P({1})}));
  CHECK(reduce(Word{E(), E()}).is_identity());
  CHECK(reduce(Word{P({}), N({})}).is_identity());
}

TEST_CASE("reduce is idempotent and yields irreducible words", "[freegroup][property]") {
  WordSampler sampler({{Point{}, Point{1}, Point{2}}, 10}, 17);
  for (int i = 0; i < 300; ++i) {
    Word raw = sampler.next_raw(1 + sampler.rng().below(10));
    ReducedWord r = reduce(raw);
    CHECK(is_irreducible(r));
    CHECK(reduce(r) == r);
  }
}

TEST_CASE("reduction does not depend on cancellation order", "[freegroup][property]") {
  WordSampler sampler({{Point{}, Point{1}}, 12}, 5);
  std::mt19937 gen(99);
  for (int i = 0; i < 300; ++i) {
    Word raw = sampler.next_raw(1 + sampler.rng().below(12));
    Word expected = reduce(raw).word();
    for (int trial = 0; trial < 3; ++trial)
      CHECK(reduce_by_random_rewriting(raw, gen) == expected);
  }
}

TEST_CASE("multiply and invert examples", "[freegroup]") {
  CHECK(multiply(R("[1]"), R("[1]^-1")).is_identity());
  CHECK(multiply(R("[1]"), R("e")) == R("[1]"));
  CHECK(multiply(R("[1] [2]"), R("[2]^-1 [3]")) == R("[1] [3]"));
  CHECK(invert(R("e")).is_identity());
  CHECK(invert(R("[1] [2]")).word() == W("[2]^-1 [1]^-1"));
  CHECK(invert(R("[1]^-1")).word() == W("[1]"));
}

TEST_CASE("free group axioms on small words", "[freegroup][property]") {
  auto words = all_reduced_words(signed_letters(three_points()), 2);
  const ReducedWord e;
  for (const auto& u : words) {
    CHECK(multiply(u, e) == u);
    CHECK(multiply(e, u) == u);
    CHECK(multiply(u, invert(u)).is_identity());
    CHECK(multiply(invert(u), u).is_identity());
    for (const auto& v : words)
      for (const auto& w : words)
        CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
  }
}

TEST_CASE("word text round trip", "[freegroup][io]") {
  for (const char* canonical : {"e", "[1]", "[1,2]^-1 [1,3]", "[0]", "e e [4] [0,0,7]^-1"})
    CHECK(to_string(parse_word(canonical)) == canonical);
  CHECK(to_string(parse_word("[1,2,0,0]")) == "[1,2]");
  CHECK(to_string(parse_word("[]")) == "[0]");
  CHECK(to_string(parse_word("  [1]   [2]^-1 ")) == "[1] [2]^-1");

  WordSampler sampler({points_up_to_depth(3, 3), 9}, 23);
  for (int i = 0; i < 200; ++i) {
    Word w = sampler.next_raw(1 + sampler.rng().below(9));
    CHECK(parse_word(to_string(w)) == w);
  }
}

TEST_CASE("parse errors name the column", "[freegroup][io]") {
  auto column_of = [](std::string_view text) -> std::size_t {
    try {
      parse_word(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("") == 1);
  CHECK(column_of("x") == 1);
  CHECK(column_of("[1,]") == 4);
  CHECK(column_of("[1] [2") == 7);
  CHECK(column_of("[1][2]") == 4);
  CHECK(column_of("[1]^2") == 4);
  CHECK(column_of("[1, 2]") == 4);
  CHECK(column_of("[99999999999999999999]") == 21);
  CHECK_THROWS_WITH(parse_word("[1] q"), Catch::Matchers::ContainsSubstring("column 5"));
}
