#include "graev/graev_metric.hpp"

#include <optional>
#include <string>
#include <vector>

#include "graev/errors.hpp"

namespace graev {

NormResult graev_norm_bruteforce(const Word& w, std::size_t match_cap) {
  ReducedWord r = reduce(w);
  const std::size_t n = r.size();
  if (n > match_cap)
    throw ResourceLimitError("brute-force norm: reduced length " + std::to_string(n) +
                             " exceeds the match enumeration cap " +
                             std::to_string(match_cap));
  // rho(r, r^theta) summed position by position. Position i of r^theta holds
  // r[i], e, or the inverse of r[theta(i)] (see apply_match), so the three
  // possible letterwise distances are tabulated once per word.
  const Letter identity;
  std::vector<Rat> to_identity(n);
  std::vector<Rat> to_partner(n * n);  // [i * n + j]: d(r[i], r[j]^-1), j < i
  for (std::size_t i = 0; i < n; ++i) {
    to_identity[i] = letter_distance(r[i], identity);
    for (std::size_t j = 0; j < i; ++j) to_partner[i * n + j] = letter_distance(r[i], r[j].inverse());
  }
  auto term = [&](const Match& theta, std::size_t i) -> const Rat* {
    if (theta[i] > i) return nullptr;  // d(r[i], r[i]) = 0
    if (theta[i] == i) return &to_identity[i];
    return &to_partner[i * n + theta[i]];
  };

  std::optional<NormResult> best;
  for_each_match(n, [&](const Match& theta) {
    Rat cost;
    for (std::size_t i = 0; i < n; ++i)
      if (const Rat* t = term(theta, i); t && !t->is_zero()) cost += *t;
    if (!best || cost < best->value) best = NormResult{std::move(cost), theta};
  });
  return *best;
}

namespace {

// Half-open intervals [i, j) over the reduced letters. choice[i][j] == i means
// x_i is a fixed point, otherwise it is x_i's partner.
struct GraevTable {
  std::size_t n;
  std::vector<Rat> cost;
  std::vector<std::size_t> choice;

  explicit GraevTable(const Word& x) : n(x.size()), cost((n + 1) * (n + 1)), choice((n + 1) * (n + 1)) {
    std::vector<Rat> to_identity(n);
    std::vector<Rat> pair_cost(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      to_identity[i] = letter_distance(x[i], Letter::identity());
      Letter inv = x[i].inverse();
      for (std::size_t k = i + 1; k < n; ++k) pair_cost[i * n + k] = letter_distance(x[k], inv);
    }
    for (std::size_t len = 1; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        std::size_t j = i + len;
        Rat best = to_identity[i] + at(i + 1, j);
        std::size_t pick = i;
        for (std::size_t k = i + 1; k < j; ++k) {
          Rat c = pair_cost[i * n + k] + at(i + 1, k) + at(k + 1, j);
          if (c < best) {
            best = std::move(c);
            pick = k;
          }
        }
        cost[i * (n + 1) + j] = std::move(best);
        choice[i * (n + 1) + j] = pick;
      }
    }
  }

  const Rat& at(std::size_t i, std::size_t j) const { return cost[i * (n + 1) + j]; }

  void trace(std::size_t i, std::size_t j, std::vector<std::size_t>& map) const {
    while (i < j) {
      std::size_t k = choice[i * (n + 1) + j];
      map[i] = k;
      map[k] = i;
      if (k != i) trace(i + 1, k, map);
      i = k + 1;
    }
  }
};

}  // namespace

Rat graev_norm_dp(const Word& w) {
  ReducedWord r = reduce(w);
  return GraevTable(r).at(0, r.size());
}

NormResult graev_norm_dp_witness(const Word& w) {
  ReducedWord r = reduce(w);
  GraevTable t(r);
  std::vector<std::size_t> map(r.size());
  t.trace(0, r.size(), map);
  return NormResult{t.at(0, r.size()), Match(std::move(map))};
}

Rat graev_distance(const ReducedWord& u, const ReducedWord& v) {
  return graev_norm_dp(multiply(invert(u), v));
}

Rat graev_bidistance(const ReducedWord& u, const ReducedWord& v) {
  return graev_distance(u, v) + graev_distance(invert(u), invert(v));
}

}  // namespace graev
