#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace graev {

// Exact nonnegative rational, always in lowest terms. Every distance, norm
// and scale value in the library is a Rat. Values whose numerator and
// denominator fit in 64 bits are held inline; anything larger is an mpq.
class Rat {
 public:
  Rat() = default;
  Rat(std::uint64_t n) : rep_(Small{n, 1}) {}  // NOLINT(google-explicit-constructor)
  Rat(std::uint64_t num, std::uint64_t den);

  // Parses "p", "p/q" (decimal naturals, q > 0).
  static Rat parse(std::string_view text);

  // 2^{-k}
  static Rat pow2_neg(std::size_t k);
  static Rat one() { return Rat(1); }
  static Rat zero() { return Rat(); }

  bool is_zero() const;

  Rat& operator+=(const Rat& other);
  Rat& operator*=(const Rat& other);
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  Rat operator/(const Rat& other) const;

  // a - b, only defined when a >= b.
  Rat minus(const Rat& other) const;

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  std::string numerator() const;
  std::string denominator() const;

  // "p/q"; q == 1 still prints as "p/1".
  std::string str() const;

  // Only for display; never used in comparisons.
  double approx() const;

 private:
  struct Small {
    std::uint64_t num;
    std::uint64_t den;
  };

  static Rat from_mpq(mpq_class v);
  mpq_class to_mpq() const;

  std::variant<Small, mpq_class> rep_{Small{0, 1}};
};

inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace graev
