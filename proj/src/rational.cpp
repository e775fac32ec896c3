#include "graev/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace graev {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

constexpr u128 kMax64 = std::numeric_limits<u64>::max();

mpz_class from_u64(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

bool fits_u64(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

u64 to_u64(const mpz_class& z) {
  u64 v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rat::Rat(u64 num, u64 den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  u64 g = std::gcd(num, den);
  rep_ = Small{num / g, den / g};
}

Rat Rat::from_mpq(mpq_class v) {
  v.canonicalize();
  if (sgn(v) < 0) throw std::domain_error("Rat: negative value");
  Rat r;
  if (fits_u64(v.get_num()) && fits_u64(v.get_den()))
    r.rep_ = Small{to_u64(v.get_num()), to_u64(v.get_den())};
  else
    r.rep_ = std::move(v);
  return r;
}

mpq_class Rat::to_mpq() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return mpq_class(from_u64(s->num), from_u64(s->den));
  return std::get<mpq_class>(rep_);
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a nonnegative rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return from_mpq(mpq_class(n, d));
}

Rat Rat::pow2_neg(std::size_t k) {
  if (k < 64) return Rat(1, u64{1} << k);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return from_mpq(mpq_class(mpz_class(1), den));
}

bool Rat::is_zero() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return s->num == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

Rat& Rat::operator+=(const Rat& other) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&other.rep_);
  if (a && b) {
    if (b->num == 0) return *this;
    if (a->num == 0) return *this = other;
    // a/b + c/d with g = gcd(b, d): numerator t = a(d/g) + c(b/g) and
    // denominator (b/g) d, then cancel gcd(t, g).
    u64 g = std::gcd(a->den, b->den);
    u128 t = u128(a->num) * (b->den / g) + u128(b->num) * (a->den / g);
    u64 g2 = std::gcd(static_cast<u64>(t % g), g);
    u128 num = t / g2;
    u128 den = u128(a->den / g) * (b->den / g2);
    if (num <= kMax64 && den <= kMax64) {
      rep_ = Small{static_cast<u64>(num), static_cast<u64>(den)};
      return *this;
    }
  }
  *this = from_mpq(to_mpq() + other.to_mpq());
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  const auto* a = std::get_if<Small>(&rep_);
  const auto* b = std::get_if<Small>(&other.rep_);
  if (a && b) {
    if (a->num == 0 || b->num == 0) return *this = Rat();
    u64 g1 = std::gcd(a->num, b->den);
    u64 g2 = std::gcd(b->num, a->den);
    u128 num = u128(a->num / g1) * (b->num / g2);
    u128 den = u128(a->den / g2) * (b->den / g1);
    if (num <= kMax64 && den <= kMax64) {
      rep_ = Small{static_cast<u64>(num), static_cast<u64>(den)};
      return *this;
    }
  }
  *this = from_mpq(to_mpq() * other.to_mpq());
  return *this;
}

Rat Rat::operator/(const Rat& other) const {
  if (other.is_zero()) throw std::domain_error("Rat: division by zero");
  return from_mpq(mpq_class(to_mpq() / other.to_mpq()));
}

Rat Rat::minus(const Rat& other) const {
  if (*this < other) throw std::domain_error("Rat: subtraction would go negative");
  return from_mpq(mpq_class(to_mpq() - other.to_mpq()));
}

bool operator==(const Rat& a, const Rat& b) {
  const auto* x = std::get_if<Rat::Small>(&a.rep_);
  const auto* y = std::get_if<Rat::Small>(&b.rep_);
  if (x && y) return x->num == y->num && x->den == y->den;
  // Canonical forms: a small value never equals a big one.
  if (x || y) return false;
  return cmp(std::get<mpq_class>(a.rep_), std::get<mpq_class>(b.rep_)) == 0;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  const auto* x = std::get_if<Rat::Small>(&a.rep_);
  const auto* y = std::get_if<Rat::Small>(&b.rep_);
  if (x && y) return u128(x->num) * y->den <=> u128(y->num) * x->den;
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rat::numerator() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return std::to_string(s->num);
  return std::get<mpq_class>(rep_).get_num().get_str();
}

std::string Rat::denominator() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return std::to_string(s->den);
  return std::get<mpq_class>(rep_).get_den().get_str();
}

std::string Rat::str() const { return numerator() + "/" + denominator(); }

double Rat::approx() const { return to_mpq().get_d(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace graev
