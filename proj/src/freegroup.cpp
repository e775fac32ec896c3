#include "graev/freegroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace graev {

Point::Point(std::initializer_list<std::uint64_t> coords)
    : Point(std::vector<std::uint64_t>(coords)) {}

Point::Point(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {
  while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

Point Point::truncate(std::size_t n) const {
  if (n >= coords_.size()) return *this;
  return Point(std::vector<std::uint64_t>(coords_.begin(), coords_.begin() + n));
}

Letter Letter::inverse() const {
  switch (kind_) {
    case Kind::Pos:
      return Letter(Kind::Neg, point_);
    case Kind::Neg:
      return Letter(Kind::Pos, point_);
    case Kind::Identity:
      break;
  }
  return *this;
}

Letter Letter::truncate(std::size_t n) const {
  if (is_identity()) return *this;
  return Letter(kind_, point_.truncate(n));
}

Rat letter_distance(const Letter& a, const Letter& b) {
  if (a == b) return Rat::zero();
  if (a.kind() != b.kind()) return Rat::one();
  // Same sign, different points. Identity == Identity was caught above.
  const Point& p = a.point();
  const Point& q = b.point();
  std::size_t k = 0;
  while (p[k] == q[k]) ++k;
  return Rat::pow2_neg(k);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("Word: empty letter sequence");
}

std::size_t Word::max_depth() const {
  std::size_t d = 0;
  for (const auto& l : letters_) d = std::max(d, l.point().depth());
  return d;
}

bool is_irreducible(const Word& w) {
  if (w.size() == 1) return true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_identity()) return false;
    if (i + 1 < w.size() && w[i].inverse() == w[i + 1]) return false;
  }
  return true;
}

ReducedWord reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w) {
    if (l.is_identity()) continue;
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  if (stack.empty()) return ReducedWord::identity();
  return ReducedWord(Word(std::move(stack)));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  return reduce(concat(u, v));
}

ReducedWord invert(const ReducedWord& u) { return reduce(invert_word(u)); }

}  // namespace graev
