#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "graev/rational.hpp"

namespace graev {

// A finitely supported sequence of naturals. Stored without trailing zeros,
// so equality of points is equality of the stored coordinates.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<std::uint64_t> coords);
  explicit Point(std::vector<std::uint64_t> coords);

  // Number of stored coordinates; p lies in N_n iff depth() <= n.
  std::size_t depth() const { return coords_.size(); }
  std::uint64_t operator[](std::size_t k) const {
    return k < coords_.size() ? coords_[k] : 0;
  }
  std::span<const std::uint64_t> coords() const { return coords_; }

  // Zero every coordinate at index >= n.
  Point truncate(std::size_t n) const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<std::uint64_t> coords_;
};

// An element of X-bar: the identity marker e, a point, or a formal inverse.
class Letter {
 public:
  enum class Kind : std::uint8_t { Identity, Pos, Neg };

  Letter() = default;
  static Letter identity() { return Letter(); }
  static Letter pos(Point p) { return Letter(Kind::Pos, std::move(p)); }
  static Letter neg(Point p) { return Letter(Kind::Neg, std::move(p)); }

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::Identity; }
  // The underlying point; the zero point for Identity.
  const Point& point() const { return point_; }

  Letter inverse() const;
  // Letter with the same sign over point().truncate(n); Identity is fixed.
  Letter truncate(std::size_t n) const;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  Letter(Kind k, Point p) : kind_(k), point_(std::move(p)) {}
  Kind kind_ = Kind::Identity;
  Point point_;
};

// Base metric on X-bar. Same-sign letters get max{2^-k : coordinates differ
// at k}; e against anything else, and opposite signs, are at distance 1.
Rat letter_distance(const Letter& a, const Letter& b);

// A nonempty finite sequence of letters (an element of W(X)).
class Word {
 public:
  Word() : letters_{Letter::identity()} {}
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Largest point depth occurring in the word.
  std::size_t max_depth() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// An irreducible word: [e] or a sequence with no e and no adjacent inverse
// pair. Only obtainable through reduce(), so the invariant always holds.
class ReducedWord {
 public:
  ReducedWord() = default;  // the identity [e]

  static ReducedWord identity() { return ReducedWord(); }

  const Word& word() const { return word_; }
  operator const Word&() const { return word_; }  // NOLINT
  std::size_t size() const { return word_.size(); }
  const Letter& operator[](std::size_t i) const { return word_[i]; }
  std::span<const Letter> letters() const { return word_.letters(); }
  auto begin() const { return word_.begin(); }
  auto end() const { return word_.end(); }
  bool is_identity() const { return word_.size() == 1 && word_[0].is_identity(); }
  std::size_t max_depth() const { return word_.max_depth(); }

  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  friend ReducedWord reduce(const Word& w);
  explicit ReducedWord(Word w) : word_(std::move(w)) {}
  Word word_;
};

bool is_irreducible(const Word& w);

ReducedWord reduce(const Word& w);
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& u);

// Letterwise inverse of a raw word (reverse and invert each letter).
Word invert_word(const Word& w);
// Plain concatenation, no reduction.
Word concat(const Word& u, const Word& v);

}  // namespace graev
