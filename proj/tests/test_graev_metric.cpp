#include <catch2/catch_amalgamated.hpp>

#include "graev/errors.hpp"
#include "graev/graev_metric.hpp"
#include "graev/sampling.hpp"
#include "support.hpp"

using namespace graev;
using namespace graev::test;

namespace {

std::vector<ReducedWord> small_words(std::size_t max_len) {
  return all_reduced_words(signed_letters(three_points()), max_len);
}

}  // namespace

TEST_CASE("brute-force norm examples", "[graev]") {
  CHECK(graev_norm_bruteforce(W("e")).value == Rat(0));
  NormResult r = graev_norm_bruteforce(W("[1,2]^-1 [1,3]"));
  CHECK(r.value == Rat(1, 2));
  CHECK(r.witness == Match({1, 0}));
  CHECK(graev_norm_bruteforce(W("[1] [2]")).value == Rat(1));
  // Python brute-force oracle: the commutator of [1] and [2] has norm 2.
  CHECK(graev_norm_bruteforce(W("[1] [2] [1]^-1 [2]^-1")).value == Rat(2));
  // Input is reduced first.
  CHECK(graev_norm_bruteforce(W("[5] [1] [1]^-1 [5]^-1")).value == Rat(0));
}

TEST_CASE("brute-force witness attains the value", "[graev][property]") {
  WordSampler sampler({points_up_to_depth(2, 2), 9}, 3);
  for (int i = 0; i < 100; ++i) {
    ReducedWord w = sampler.next();
    NormResult r = graev_norm_bruteforce(w);
    CHECK(rho(w, apply_match(w, r.witness)) == r.value);
  }
}

TEST_CASE("brute force enforces the enumeration cap", "[graev]") {
  Word long_word = W("[1] [2] [1] [2] [1] [2] [1] [2] [1] [2] [1] [2] [1] [2] [1]");
  CHECK_THROWS_AS(graev_norm_bruteforce(long_word), ResourceLimitError);
  CHECK_THROWS_WITH(graev_norm_bruteforce(long_word, 4), Catch::Matchers::ContainsSubstring("cap 4"));
  // Cancelling letters do not count against the cap.
  CHECK(graev_norm_bruteforce(W("[1] [2] [2]^-1 [1]^-1 [3]"), 1).value == Rat(1));
}

TEST_CASE("DP norm examples", "[graev]") {
  CHECK(graev_norm_dp(W("e")) == Rat(0));
  CHECK(graev_norm_dp(W("[1,2]^-1 [1,3]")) == Rat(1, 2));
  CHECK(graev_norm_dp(W("[1] [2] [1]^-1 [2]^-1")) == Rat(2));
  // No cap on the DP path.
  std::string text;
  for (int i = 0; i < 40; ++i) text += i % 2 ? "[1,2] " : "[1,3]^-1 ";
  CHECK(graev_norm_dp(W(text)) == Rat(10));
}

TEST_CASE("DP equals brute force on every word of length <= 8", "[graev][oracle]") {
  for (const auto& w : small_words(8)) {
    INFO(to_string(w));
    REQUIRE(graev_norm_dp(w) == graev_norm_bruteforce(w).value);
  }
}

TEST_CASE("DP equals brute force on random words", "[graev][oracle]") {
  WordSampler sampler({points_up_to_depth(3, 2), 12, 7, 8}, 2024);
  for (int i = 0; i < 500; ++i) {
    ReducedWord w = sampler.next();
    INFO(to_string(w));
    REQUIRE(graev_norm_dp(w) == graev_norm_bruteforce(w).value);
  }
}

TEST_CASE("DP witness attains the DP value", "[graev][property]") {
  WordSampler sampler({points_up_to_depth(2, 3), 16}, 8);
  for (int i = 0; i < 200; ++i) {
    ReducedWord w = sampler.next();
    NormResult r = graev_norm_dp_witness(w);
    CHECK(rho(w, apply_match(w, r.witness)) == r.value);
  }
}

TEST_CASE("distance examples", "[graev]") {
  ReducedWord u = R("[1,2]");
  ReducedWord v = R("[1,3]");
  CHECK(graev_distance(u, u) == Rat(0));
  CHECK(graev_distance(u, v) == Rat(1, 2));
  CHECK(graev_bidistance(u, u) == Rat(0));
  CHECK(graev_bidistance(u, v) == Rat(1));
  CHECK(graev_bidistance(R("[1]"), R("[2]")) == Rat(2));
}

TEST_CASE("graev distance is a left-invariant metric extending d", "[graev][property]") {
  auto words = small_words(2);
  std::vector<std::vector<Rat>> dist(words.size(), std::vector<Rat>(words.size()));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) dist[i][j] = graev_distance(words[i], words[j]);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      CHECK(dist[i][j].is_zero() == (i == j));
      CHECK(dist[i][j] == dist[j][i]);
      for (std::size_t k = 0; k < words.size(); ++k) CHECK(dist[i][j] <= dist[i][k] + dist[k][j]);
    }

  auto letters = signed_letters(points_up_to_depth(2, 2));
  for (const auto& a : letters)
    for (const auto& b : letters)
      if (a.kind() == Letter::Kind::Pos && b.kind() == Letter::Kind::Pos)
        CHECK(graev_distance(reduce(Word{a}), reduce(Word{b})) == letter_distance(a, b));

  std::vector<Letter> gs = signed_letters(three_points());
  gs.push_back(E());
  for (const auto& g : gs) {
    ReducedWord gw = reduce(Word{g});
    for (const auto& u : words)
      for (const auto& v : words)
        CHECK(graev_distance(multiply(gw, u), multiply(gw, v)) == graev_distance(u, v));
  }
}

TEST_CASE("trivial-scale norm is conjugation and inversion invariant", "[graev][property]") {
  auto words = small_words(3);
  std::vector<Letter> gs = signed_letters(three_points());
  gs.push_back(E());
  for (const auto& u : words) {
    Rat n = graev_norm(u);
    CHECK(graev_norm(invert(u)) == n);
    for (const auto& g : gs) {
      ReducedWord gw = reduce(Word{g});
      CHECK(graev_norm(multiply(multiply(invert(gw), u), gw)) == n);
    }
  }
}

TEST_CASE("distinct words over N_n are 2^-n apart", "[graev][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    WordSampler sampler({points_up_to_depth(n, 2), 5}, 40 + n);
    for (int i = 0; i < 150; ++i) {
      auto [u, v] = sampler.next_distinct_pair();
      CHECK(graev_distance(u, v) >= Rat::pow2_neg(n));
      CHECK(graev_bidistance(u, v) >= Rat::pow2_neg(n));
    }
  }
}
