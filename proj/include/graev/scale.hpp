#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graev/freegroup.hpp"
#include "graev/matching.hpp"

namespace graev {

// A scale on X-bar: how far conjugating by a letter can inflate a norm.
// evaluate must be pure. Scales shipped here are inverse-symmetric,
// Gamma(x^{-1}, r) == Gamma(x, r); a scale that is not must say so.
struct Scale {
  std::function<Rat(const Letter&, const Rat&)> evaluate;
  std::string name;
  bool declared_regular = false;
  bool inverse_symmetric = true;

  Rat operator()(const Letter& x, const Rat& r) const { return evaluate(x, r); }
};

// Gamma(x, r) = r.
Scale trivial_scale();

// Coefficients c_k >= 0 of the weighted family
//   Gamma(x, r) = r * (1 + sum_k c_k * x(k))   for x, x^{-1};  Gamma(e, r) = r.
// c_k = overrides[k] when present, else first * ratio^k.
struct WeightedCoefficients {
  Rat first = Rat(1, 4);
  Rat ratio = Rat(1, 4);
  std::map<std::size_t, Rat> overrides;

  Rat at(std::size_t k) const;
};

// Default coefficients give c_k = 4^{-(k+1)}. Regular because truncating a
// point only drops nonnegative summands.
Scale weighted_scale(const WeightedCoefficients& c = {}, std::string name = "weighted");

// Key-value scale file:
//   # comment
//   name  = my-scale
//   first = 1/4
//   ratio = 1/4
//   coef.3 = 1/2
// Unknown keys and malformed values throw ParseError (line, column).
Scale parse_scale_file(std::string_view text);
Scale load_scale_file(const std::string& path);

// N^theta_Gamma(w), evaluated by the three-case recursion on the leading
// index: a single letter costs d(e, x); theta(0) = k < last splits the word;
// theta(0) = last pairs the ends x^{-1} ... y and costs
// d(x, y) + max{Gamma(x, inner), Gamma(y, inner)}, with inner = 0 when the
// ends are adjacent.
Rat norm_theta(const Word& w, const Match& theta, const Scale& scale);

struct ScaleNormResult {
  Rat value;
  Match witness;
};

// min over theta of norm_theta(w, theta, scale), for this exact word w (no
// insertions), by interval DP. Relies on Gamma being monotone in r.
ScaleNormResult norm_theta_min(const Word& w, const Scale& scale);

// Certified interval around N_Gamma(w).
struct BoundedNorm {
  Rat lower;         // trivial-scale Graev norm of w
  Rat upper;         // norm_theta(upper_word, upper_match, scale)
  Word upper_word;   // reduces to w
  Match upper_match;
};

inline constexpr std::size_t kDefaultSearchCap = 200000;

struct BoundsOptions {
  std::size_t search_cap = kDefaultSearchCap;
  // Extra pre-reduced candidates; each must reduce to the target word.
  std::vector<Word> seeds;
};

// upper: minimum of norm_theta_min over w and every word obtained from it by
// up to `budget` insertions of a cancelling pair a a^{-1} (or a lone e). The
// letters a range over the letters of w, their inverses, their truncations
// pi_m for m up to the max depth of w, and e. Throws ResourceLimitError when
// the candidate count could exceed options.search_cap.
BoundedNorm norm_bounds(const ReducedWord& w, const Scale& scale, std::size_t budget,
                        const BoundsOptions& options = {});

// Bounds for N(g^{-1} u g) that include g^{-1} u* g as a candidate, where u*
// is the upper witness of `u`. The conjugated match then guarantees
//   upper <= Gamma(g, u.upper).
BoundedNorm conjugate_bounds(const BoundedNorm& u, const Letter& g, const Scale& scale,
                             std::size_t budget, BoundsOptions options = {});

struct DistanceBounds {
  BoundedNorm left;      // delta_Gamma(u, v) = N(u^{-1} v)
  BoundedNorm inverted;  // delta_Gamma(u^{-1}, v^{-1}) = N(u v^{-1})
  Rat bi_lower() const { return left.lower + inverted.lower; }
  Rat bi_upper() const { return left.upper + inverted.upper; }
};

DistanceBounds scale_distance_bounds(const ReducedWord& u, const ReducedWord& v,
                                     const Scale& scale, std::size_t budget,
                                     const BoundsOptions& options = {});

// The conjugated witness inverse(g) v g with the match eta that pairs the
// new ends and shifts theta by one inside.
struct ConjugationWitness {
  Word word;
  Match eta;
  Rat conjugated;  // norm_theta(word, eta)
  Rat scaled;      // Gamma(g, norm_theta(v, theta))
  bool holds() const { return conjugated == scaled; }
};

// Throws std::logic_error if eta fails is_match (never expected).
ConjugationWitness conjugation_witness(const Word& v, const Match& theta, const Letter& g,
                                       const Scale& scale);

enum class ScaleAxiom {
  IdentityFixed,     // Gamma(e, r) = r
  Dominates,         // Gamma(x, r) >= r
  ZeroIffZero,       // Gamma(x, r) = 0 iff r = 0
  Monotone,          // nondecreasing in r
  VanishesAtZero,    // small r gives small Gamma (sampled)
  Regular,           // Gamma(x, r) >= Gamma(pi_n x, r)
  InverseSymmetric,  // Gamma(x^{-1}, r) = Gamma(x, r)
};

std::string_view to_string(ScaleAxiom a);

struct ScaleViolation {
  ScaleAxiom axiom;
  Letter letter;
  Rat r;
  std::string detail;
};

struct ScaleAxiomReport {
  std::size_t checks = 0;
  std::vector<ScaleViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(ScaleAxiom a) const;
};

struct ScaleCheckOptions {
  // Gamma(x, eps) must stay at or below this for the sampled tail.
  Rat tail_threshold = Rat(1, 100);
  // How many of the smallest eps_tail entries are tested.
  std::size_t tail_samples = 2;
};

// Sampled check of the scale conditions. The limit condition can only be
// reported as consistent, never proved. Regularity is checked when the scale
// declares it; inverse symmetry when the scale claims it. Throws
// std::invalid_argument when a grid is empty or unsorted.
ScaleAxiomReport check_scale_axioms(const Scale& scale, std::span<const Letter> letters,
                                    std::span<const Rat> r_grid, std::span<const Rat> eps_tail,
                                    const ScaleCheckOptions& options = {});

std::vector<Rat> default_r_grid();
std::vector<Rat> default_eps_tail();

}  // namespace graev
