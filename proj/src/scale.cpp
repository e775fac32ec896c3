#include "graev/scale.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graev/errors.hpp"
#include "graev/graev_metric.hpp"

namespace graev {

Scale trivial_scale() {
  return Scale{[](const Letter&, const Rat& r) { return r; }, "trivial", true, true};
}

Rat WeightedCoefficients::at(std::size_t k) const {
  if (auto it = overrides.find(k); it != overrides.end()) return it->second;
  Rat c = first;
  for (std::size_t i = 0; i < k; ++i) c *= ratio;
  return c;
}

Scale weighted_scale(const WeightedCoefficients& c, std::string name) {
  auto eval = [c](const Letter& x, const Rat& r) -> Rat {
    if (x.is_identity()) return r;
    Rat factor = Rat::one();
    const Point& p = x.point();
    for (std::size_t k = 0; k < p.depth(); ++k)
      if (p[k] != 0) factor += c.at(k) * Rat(p[k]);
    return r * factor;
  };
  return Scale{std::move(eval), std::move(name), true, true};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Scale parse_scale_file(std::string_view text) {
  WeightedCoefficients c;
  std::string name = "weighted";
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("scale file line " + std::to_string(line_no) + ": expected key = value",
                       line_no, 1);
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    auto as_rat = [&] {
      try {
        return Rat::parse(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError("scale file line " + std::to_string(line_no) + ": " + e.what(),
                         line_no, eq + 2);
      }
    };
    if (key == "name") {
      name = std::string(value);
    } else if (key == "first") {
      c.first = as_rat();
    } else if (key == "ratio") {
      c.ratio = as_rat();
    } else if (key.substr(0, 5) == "coef.") {
      std::string_view idx = key.substr(5);
      if (idx.empty() || idx.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("scale file line " + std::to_string(line_no) + ": bad coefficient index '" +
                             std::string(idx) + "'",
                         line_no, 6);
      c.overrides[std::stoul(std::string(idx))] = as_rat();
    } else {
      throw ParseError("scale file line " + std::to_string(line_no) + ": unknown key '" +
                           std::string(key) + "'",
                       line_no, 1);
    }
  }
  return weighted_scale(c, std::move(name));
}

Scale load_scale_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scale file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scale_file(buf.str());
}

namespace {

Rat norm_theta_rec(const Word& w, const Match& theta, const Scale& scale, std::size_t a,
                   std::size_t b) {
  if (a == b) return letter_distance(Letter::identity(), w[a]);
  std::size_t k = theta[a];
  if (k < b) return norm_theta_rec(w, theta, scale, a, k) + norm_theta_rec(w, theta, scale, k + 1, b);
  Letter x = w[a].inverse();
  const Letter& y = w[b];
  Rat inner = b == a + 1 ? Rat::zero() : norm_theta_rec(w, theta, scale, a + 1, b - 1);
  return letter_distance(x, y) + max(scale(x, inner), scale(y, inner));
}

}  // namespace

Rat norm_theta(const Word& w, const Match& theta, const Scale& scale) {
  if (w.size() != theta.size())
    throw std::invalid_argument("norm_theta: word length " + std::to_string(w.size()) +
                                " != match size " + std::to_string(theta.size()));
  if (!is_match(theta.map())) throw std::invalid_argument("norm_theta: not a match");
  return norm_theta_rec(w, theta, scale, 0, w.size() - 1);
}

namespace {

// Inclusive intervals [i, j]. choice == j + 1 marks "pair the ends",
// otherwise it is the split point k (block [i, k] then [k + 1, j]).
// A single letter has choice == i + 1 == j + 1 and is a fixed point.
class ScaleTable {
 public:
  ScaleTable(const Word& w, const Scale& scale)
      : n_(w.size()), value_(n_ * n_), choice_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      value_[idx(i, i)] = letter_distance(Letter::identity(), w[i]);
      choice_[idx(i, i)] = i + 1;
    }
    for (std::size_t len = 2; len <= n_; ++len) {
      for (std::size_t i = 0; i + len <= n_; ++i) {
        std::size_t j = i + len - 1;
        Letter x = w[i].inverse();
        const Letter& y = w[j];
        Rat inner = len == 2 ? Rat::zero() : value_[idx(i + 1, j - 1)];
        Rat best = letter_distance(x, y) + max(scale(x, inner), scale(y, inner));
        std::size_t pick = j + 1;
        for (std::size_t k = i; k < j; ++k) {
          Rat c = value_[idx(i, k)] + value_[idx(k + 1, j)];
          if (c < best) {
            best = std::move(c);
            pick = k;
          }
        }
        value_[idx(i, j)] = std::move(best);
        choice_[idx(i, j)] = pick;
      }
    }
  }

  const Rat& value() const { return value_[idx(0, n_ - 1)]; }

  Match witness() const {
    std::vector<std::size_t> map(n_);
    trace(0, n_ - 1, map);
    return Match(std::move(map));
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * n_ + j; }

  void trace(std::size_t i, std::size_t j, std::vector<std::size_t>& map) const {
    if (i == j) {
      map[i] = i;
      return;
    }
    std::size_t c = choice_[idx(i, j)];
    if (c == j + 1) {
      map[i] = j;
      map[j] = i;
      if (i + 1 <= j - 1) trace(i + 1, j - 1, map);
    } else {
      trace(i, c, map);
      trace(c + 1, j, map);
    }
  }

  std::size_t n_;
  std::vector<Rat> value_;
  std::vector<std::size_t> choice_;
};

std::vector<Letter> insertion_alphabet(const ReducedWord& w) {
  std::set<Point> points;
  std::size_t depth = w.max_depth();
  for (const auto& l : w) {
    if (l.is_identity()) continue;
    for (std::size_t m = 0; m <= depth; ++m) points.insert(l.point().truncate(m));
  }
  std::vector<Letter> out{Letter::identity()};
  for (const auto& p : points) {
    out.push_back(Letter::pos(p));
    out.push_back(Letter::neg(p));
  }
  return out;
}

Word insert_at(const Word& w, std::size_t pos, const Letter& a) {
  std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.push_back(a);
  if (!a.is_identity()) out.push_back(a.inverse());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
  return Word(std::move(out));
}

}  // namespace

ScaleNormResult norm_theta_min(const Word& w, const Scale& scale) {
  ScaleTable t(w, scale);
  return ScaleNormResult{t.value(), t.witness()};
}

BoundedNorm norm_bounds(const ReducedWord& w, const Scale& scale, std::size_t budget,
                        const BoundsOptions& options) {
  const std::vector<Letter> alphabet = insertion_alphabet(w);

  std::vector<Word> candidates{w.word()};
  for (const auto& s : options.seeds) {
    if (reduce(s) != w)
      throw std::invalid_argument("norm_bounds: seed does not reduce to the target word");
    candidates.push_back(s);
  }

  std::set<Word> seen{w.word()};
  std::vector<Word> frontier{w.word()};
  std::size_t estimate = candidates.size();
  for (std::size_t round = 0; round < budget; ++round) {
    std::size_t longest = 0;
    for (const auto& f : frontier) longest = std::max(longest, f.size());
    estimate += frontier.size() * (longest + 1) * alphabet.size();
    if (estimate > options.search_cap)
      throw ResourceLimitError("norm_bounds: insertion budget " + std::to_string(budget) +
                               " needs up to " + std::to_string(estimate) +
                               " candidates, above the search cap " +
                               std::to_string(options.search_cap));
    std::vector<Word> next;
    for (const auto& f : frontier)
      for (std::size_t pos = 0; pos <= f.size(); ++pos)
        for (const auto& a : alphabet) {
          Word c = insert_at(f, pos, a);
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
    candidates.insert(candidates.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::optional<BoundedNorm> best;
  for (const auto& c : candidates) {
    ScaleNormResult r = norm_theta_min(c, scale);
    if (!best || r.value < best->upper)
      best = BoundedNorm{Rat::zero(), std::move(r.value), c, std::move(r.witness)};
  }
  best->lower = graev_norm_dp(w);
  return *std::move(best);
}

BoundedNorm conjugate_bounds(const BoundedNorm& u, const Letter& g, const Scale& scale,
                             std::size_t budget, BoundsOptions options) {
  Word seed = concat(concat(Word{g.inverse()}, u.upper_word), Word{g});
  ReducedWord target = reduce(seed);
  options.seeds.push_back(std::move(seed));
  return norm_bounds(target, scale, budget, options);
}

DistanceBounds scale_distance_bounds(const ReducedWord& u, const ReducedWord& v,
                                     const Scale& scale, std::size_t budget,
                                     const BoundsOptions& options) {
  return DistanceBounds{norm_bounds(multiply(invert(u), v), scale, budget, options),
                        norm_bounds(multiply(u, invert(v)), scale, budget, options)};
}

ConjugationWitness conjugation_witness(const Word& v, const Match& theta, const Letter& g,
                                       const Scale& scale) {
  if (v.size() != theta.size())
    throw std::invalid_argument("conjugation_witness: word length != match size");
  const std::size_t n = v.size();
  std::vector<std::size_t> eta(n + 2);
  eta[0] = n + 1;
  eta[n + 1] = 0;
  for (std::size_t i = 1; i <= n; ++i) eta[i] = theta[i - 1] + 1;
  if (!is_match(eta)) throw std::logic_error("conjugation_witness: eta is not a match");

  Word word = concat(concat(Word{g.inverse()}, v), Word{g});
  Match eta_match(std::move(eta));
  Rat conjugated = norm_theta(word, eta_match, scale);
  Rat scaled = scale(g, norm_theta(v, theta, scale));
  return ConjugationWitness{std::move(word), std::move(eta_match), std::move(conjugated),
                            std::move(scaled)};
}

std::string_view to_string(ScaleAxiom a) {
  switch (a) {
    case ScaleAxiom::IdentityFixed:
      return "i.identity";
    case ScaleAxiom::Dominates:
      return "i.dominates";
    case ScaleAxiom::ZeroIffZero:
      return "ii.zero";
    case ScaleAxiom::Monotone:
      return "iii.monotone";
    case ScaleAxiom::VanishesAtZero:
      return "iv.limit";
    case ScaleAxiom::Regular:
      return "regular";
    case ScaleAxiom::InverseSymmetric:
      return "inverse-symmetric";
  }
  return "?";
}

bool ScaleAxiomReport::violates(ScaleAxiom a) const {
  return std::any_of(violations.begin(), violations.end(),
                     [a](const ScaleViolation& v) { return v.axiom == a; });
}

ScaleAxiomReport check_scale_axioms(const Scale& scale, std::span<const Letter> letters,
                                    std::span<const Rat> r_grid, std::span<const Rat> eps_tail,
                                    const ScaleCheckOptions& options) {
  if (r_grid.empty() || eps_tail.empty())
    throw std::invalid_argument("check_scale_axioms: grids must be nonempty");
  if (!std::is_sorted(r_grid.begin(), r_grid.end()) ||
      !std::is_sorted(eps_tail.begin(), eps_tail.end()))
    throw std::invalid_argument("check_scale_axioms: grids must be sorted");

  ScaleAxiomReport report;
  auto expect = [&](bool ok, ScaleAxiom axiom, const Letter& x, const Rat& r,
                    const std::string& detail) {
    ++report.checks;
    if (!ok) report.violations.push_back({axiom, x, r, detail});
  };

  for (const Rat& r : r_grid) {
    Rat g = scale(Letter::identity(), r);
    expect(g == r, ScaleAxiom::IdentityFixed, Letter::identity(), r,
           "Gamma(e, r) = " + g.str());
  }

  for (const Letter& x : letters) {
    std::optional<Rat> previous;
    for (const Rat& r : r_grid) {
      Rat g = scale(x, r);
      expect(g >= r, ScaleAxiom::Dominates, x, r, "Gamma(x, r) = " + g.str() + " < r");
      expect(g.is_zero() == r.is_zero(), ScaleAxiom::ZeroIffZero, x, r,
             "Gamma(x, r) = " + g.str());
      if (previous)
        expect(*previous <= g, ScaleAxiom::Monotone, x, r,
               "decreases from " + previous->str() + " to " + g.str());
      previous = g;
      if (scale.inverse_symmetric) {
        Rat gi = scale(x.inverse(), r);
        expect(gi == g, ScaleAxiom::InverseSymmetric, x, r,
               "Gamma(x^-1, r) = " + gi.str() + " vs " + g.str());
      }
      if (scale.declared_regular && !x.is_identity()) {
        for (std::size_t n = 0; n <= x.point().depth(); ++n) {
          Rat gt = scale(x.truncate(n), r);
          expect(gt <= g, ScaleAxiom::Regular, x, r,
                 "Gamma(pi_" + std::to_string(n) + " x, r) = " + gt.str() + " > " + g.str());
        }
      }
    }
    std::size_t tail = std::min(options.tail_samples, eps_tail.size());
    for (std::size_t i = 0; i < tail; ++i) {
      Rat g = scale(x, eps_tail[i]);
      expect(g <= options.tail_threshold, ScaleAxiom::VanishesAtZero, x, eps_tail[i],
             "Gamma(x, eps) = " + g.str() + " above " + options.tail_threshold.str());
    }
  }
  return report;
}

std::vector<Rat> default_r_grid() {
  return {Rat(0), Rat(1, 1024), Rat(1, 8), Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(5)};
}

std::vector<Rat> default_eps_tail() { return {Rat(1, 1000000000), Rat(1, 1000000), Rat(1, 1000)}; }

}  // namespace graev
