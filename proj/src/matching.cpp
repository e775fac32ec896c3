#include "graev/matching.hpp"

#include <limits>
#include <stdexcept>

namespace graev {

namespace {

bool is_involution(std::span<const std::size_t> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= m.size()) return false;
    if (m[m[i]] != i) return false;
  }
  return true;
}

}  // namespace

bool is_match(std::span<const std::size_t> candidate) {
  if (!is_involution(candidate)) return false;
  const std::size_t n = candidate.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (j < candidate[i] && candidate[i] < candidate[j]) return false;
  return true;
}

bool is_match_linear(std::span<const std::size_t> candidate) {
  if (!is_involution(candidate)) return false;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    std::size_t partner = candidate[i];
    if (partner > i) {
      open.push_back(i);
    } else if (partner < i) {
      if (open.empty() || open.back() != partner) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

Match::Match(std::vector<std::size_t> map) : map_(std::move(map)) {
  if (map_.empty()) throw std::invalid_argument("Match: empty domain");
  if (!is_match_linear(map_)) throw std::invalid_argument("Match: not a non-crossing involution");
}

Match Match::identity(std::size_t len) {
  std::vector<std::size_t> m(len);
  for (std::size_t i = 0; i < len; ++i) m[i] = i;
  return Match(std::move(m));
}

Match Match::restrict(std::size_t first, std::size_t last) const {
  if (first > last || last >= map_.size())
    throw std::invalid_argument("Match::restrict: bad interval");
  std::vector<std::size_t> m;
  m.reserve(last - first + 1);
  for (std::size_t i = first; i <= last; ++i) {
    if (map_[i] < first || map_[i] > last)
      throw std::invalid_argument("Match::restrict: interval not closed under the match");
    m.push_back(map_[i] - first);
  }
  return Match(std::move(m), Unchecked{});
}

namespace {

struct Segment {
  std::size_t begin;
  std::size_t end;  // exclusive
};

void generate(std::vector<std::size_t>& map, std::vector<Segment>& pending,
              const std::function<void()>& emit) {
  if (pending.empty()) {
    emit();
    return;
  }
  Segment s = pending.back();
  pending.pop_back();
  if (s.begin == s.end) {
    generate(map, pending, emit);
  } else {
    map[s.begin] = s.begin;
    pending.push_back({s.begin + 1, s.end});
    generate(map, pending, emit);
    pending.pop_back();
    for (std::size_t j = s.begin + 1; j < s.end; ++j) {
      map[s.begin] = j;
      map[j] = s.begin;
      pending.push_back({j + 1, s.end});
      pending.push_back({s.begin + 1, j});
      generate(map, pending, emit);
      pending.pop_back();
      pending.pop_back();
    }
  }
  pending.push_back(s);
}

}  // namespace

void for_each_match(std::size_t len, const std::function<void(const Match&)>& visit) {
  if (len == 0) throw std::invalid_argument("enumerate_matches: length must be >= 1");
  // Generated in place; `current` is a valid match whenever visit runs.
  Match current(std::vector<std::size_t>(len), Match::Unchecked{});
  std::vector<Segment> pending{{0, len}};
  generate(current.map_, pending, [&] { visit(current); });
}

std::vector<Match> enumerate_matches(std::size_t len) {
  std::vector<Match> out;
  for_each_match(len, [&](const Match& m) { out.push_back(m); });
  return out;
}

std::uint64_t count_matches(std::size_t len) {
  std::vector<std::uint64_t> m{1, 1};
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t n = 1; n < len; ++n) {
    std::uint64_t next = m[n];
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t a = m[k];
      std::uint64_t b = m[n - 1 - k];
      if (b != 0 && a > kMax / b) throw std::overflow_error("count_matches: overflow");
      if (next > kMax - a * b) throw std::overflow_error("count_matches: overflow");
      next += a * b;
    }
    m.push_back(next);
  }
  return m[len];
}

Word apply_match(const Word& w, const Match& theta) {
  if (w.size() != theta.size())
    throw std::invalid_argument("apply_match: word length " + std::to_string(w.size()) +
                                " != match size " + std::to_string(theta.size()));
  std::vector<Letter> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t partner = theta[i];
    if (partner > i)
      out.push_back(w[i]);
    else if (partner == i)
      out.push_back(Letter::identity());
    else
      out.push_back(w[partner].inverse());
  }
  return Word(std::move(out));
}

Rat rho(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("rho: word lengths differ (" + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()) + ")");
  Rat sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum += letter_distance(u[i], v[i]);
  return sum;
}

std::string to_string(const Match& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m[i]);
  }
  return out;
}

}  // namespace graev
