#include "graev/tower.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graev/graev_metric.hpp"
#include "graev/word_io.hpp"

namespace graev {

Point project_point(const Point& p, Level level) { return p.truncate(level.n); }

Word project_letters(const Word& w, Level level) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(l.truncate(level.n));
  return Word(std::move(out));
}

ReducedWord f_n(const ReducedWord& w, Level level) { return reduce(project_letters(w, level)); }

LipschitzWitnessReport check_lipschitz_witness(const Word& w_star, const Match& theta,
                                               const Scale& scale, Level level) {
  return {norm_theta(project_letters(w_star, level), theta, scale),
          norm_theta(w_star, theta, scale)};
}

LipschitzDistanceReport check_lipschitz_distance(const ReducedWord& u, const ReducedWord& v,
                                                 Level level) {
  return {graev_bidistance(f_n(u, level), f_n(v, level)), graev_bidistance(u, v)};
}

ExtensionReport check_extension_conditions(Level level, const Scale& scale,
                                           std::span<const Letter> letters,
                                           std::span<const Rat> r_grid) {
  ExtensionReport report;
  auto expect = [&](bool ok, int condition, const Letter& x, const Letter& y, const Rat& r,
                    std::string detail) {
    ++report.checks;
    if (!ok) report.violations.push_back({condition, x, y, r, std::move(detail)});
  };

  expect(Letter::identity().truncate(level.n).is_identity(), 1, Letter::identity(),
         Letter::identity(), Rat::zero(), "pi_n(e) != e");
  for (const auto& x : letters) {
    Letter px = x.truncate(level.n);
    expect(x.inverse().truncate(level.n) == px.inverse(), 1, x, x, Rat::zero(),
           "pi_n(x^-1) = " + to_string(x.inverse().truncate(level.n)) + ", expected " +
               to_string(px.inverse()));
    for (const auto& y : letters) {
      Rat before = letter_distance(x, y);
      Rat after = letter_distance(px, y.truncate(level.n));
      expect(after <= before, 2, x, y, Rat::zero(),
             "d rises from " + before.str() + " to " + after.str());
    }
    for (const auto& r : r_grid) {
      Rat g = scale(x, r);
      Rat gp = scale(px, r);
      expect(gp <= g, 3, x, x, r, "Gamma(pi_n x, r) = " + gp.str() + " > " + g.str());
    }
  }
  return report;
}

std::optional<std::size_t> separating_level(const ReducedWord& u, const ReducedWord& v) {
  if (u == v) return std::nullopt;
  const std::size_t top = std::max(u.max_depth(), v.max_depth());
  for (std::size_t n = 0; n <= top; ++n)
    if (f_n(u, Level{n}) != f_n(v, Level{n})) return n;
  // f_top is the identity on both words, so the scan cannot fall through.
  throw std::logic_error("separating_level: distinct words agree at every level");
}

namespace {

void require_depth(Level level, const ReducedWord& w) {
  if (w.max_depth() > level.n)
    throw std::invalid_argument("check_discreteness: word '" + to_string(w) +
                                "' uses a point deeper than level " + std::to_string(level.n));
}

void record(DiscretenessReport& report, const ReducedWord& u, const ReducedWord& v) {
  Rat d = graev_bidistance(u, v);
  ++report.pairs;
  if (d < report.bound) report.violations.emplace_back(u, v);
  if (!report.min_distance || d < *report.min_distance) {
    report.min_distance = d;
    report.attaining.emplace(u, v);
  }
}

}  // namespace

DiscretenessReport check_discreteness(Level level, std::span<const ReducedWord> corpus) {
  for (const auto& w : corpus) require_depth(level, w);

  std::set<ReducedWord> unique(corpus.begin(), corpus.end());
  std::vector<ReducedWord> words(unique.begin(), unique.end());

  DiscretenessReport report;
  report.level = level;
  report.bound = Rat::pow2_neg(level.n);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) record(report, words[i], words[j]);
  return report;
}

DiscretenessReport check_discreteness_pairs(
    Level level, std::span<const std::pair<ReducedWord, ReducedWord>> pairs) {
  DiscretenessReport report;
  report.level = level;
  report.bound = Rat::pow2_neg(level.n);
  for (const auto& [u, v] : pairs) {
    require_depth(level, u);
    require_depth(level, v);
    if (u != v) record(report, u, v);
  }
  return report;
}

}  // namespace graev
