#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graev/freegroup.hpp"
#include "graev/matching.hpp"
#include "graev/scale.hpp"

namespace graev {

// Truncation depth n of the projection pi_n.
struct Level {
  std::size_t n = 0;
  friend auto operator<=>(const Level&, const Level&) = default;
};

Point project_point(const Point& p, Level level);

// pi_n applied letterwise (signs kept, e fixed), without reduction.
Word project_letters(const Word& w, Level level);

// The homomorphism F(N) -> F(N_n) induced by pi_n.
ReducedWord f_n(const ReducedWord& w, Level level);

struct LipschitzWitnessReport {
  Rat projected;  // norm_theta(pi_n(w*), theta)
  Rat original;   // norm_theta(w*, theta)
  bool holds() const { return projected <= original; }
};

// Witness-level Lipschitz inequality for f_n: projecting the letters of a
// pre-reduced word never raises N^theta under a regular scale.
LipschitzWitnessReport check_lipschitz_witness(const Word& w_star, const Match& theta,
                                               const Scale& scale, Level level);

struct LipschitzDistanceReport {
  Rat projected;  // d(f_n u, f_n v)
  Rat original;   // d(u, v)
  bool holds() const { return projected <= original; }
};

// Trivial-scale bidistance can only shrink under f_n.
LipschitzDistanceReport check_lipschitz_distance(const ReducedWord& u, const ReducedWord& v,
                                                 Level level);

struct ExtensionViolation {
  int condition;  // 1, 2 or 3
  Letter x;
  Letter y;       // unused for conditions 1 and 3
  Rat r;          // only meaningful for condition 3
  std::string detail;
};

struct ExtensionReport {
  std::size_t checks = 0;
  std::vector<ExtensionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Sampled hypotheses for extending phi = pi_n to a homomorphism of words:
// (1) phi(e) = e and phi(x^{-1}) = phi(x)^{-1};
// (2) d(pi_n x, pi_n y) <= d(x, y);
// (3) Gamma(pi_n x, r) <= Gamma(x, r).
ExtensionReport check_extension_conditions(Level level, const Scale& scale,
                                           std::span<const Letter> letters,
                                           std::span<const Rat> r_grid);

// Least n with f_n(u) != f_n(v); nullopt when u == v. For distinct words the
// scan stops by max depth, where f_n is the identity on both.
std::optional<std::size_t> separating_level(const ReducedWord& u, const ReducedWord& v);

struct DiscretenessReport {
  Level level;
  Rat bound;  // 2^{-n}
  std::size_t pairs = 0;
  std::optional<Rat> min_distance;  // unset for corpora with < 2 words
  std::optional<std::pair<ReducedWord, ReducedWord>> attaining;
  std::vector<std::pair<ReducedWord, ReducedWord>> violations;
  bool ok() const { return violations.empty(); }
};

// Checks d(u, v) >= 2^{-n} for all distinct corpus pairs, with the
// trivial-scale bidistance (a lower bound for every scale). Duplicate words
// are compared once. Throws std::invalid_argument for a word using a point
// deeper than n.
DiscretenessReport check_discreteness(Level level, std::span<const ReducedWord> corpus);

// Same check on an explicit list of pairs; pairs of equal words are skipped.
DiscretenessReport check_discreteness_pairs(
    Level level, std::span<const std::pair<ReducedWord, ReducedWord>> pairs);

}  // namespace graev
