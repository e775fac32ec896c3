#include "graev/word_io.hpp"

#include <cctype>
#include <limits>

#include "graev/errors.hpp"

namespace graev {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Letter> letters;
    skip_ws();
    if (at_end()) fail("empty word");
    while (!at_end()) {
      if (!letters.empty() && !had_ws_) fail("expected whitespace between terms");
      letters.push_back(term());
      skip_ws();
    }
    return Word(std::move(letters));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    had_ws_ = false;
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
      had_ws_ = true;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string token = at_end() ? std::string("end of input")
                                 : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " (found " +
                         token + ")",
                     0, pos_ + 1);
  }

  Letter term() {
    if (peek() == 'e') {
      ++pos_;
      return Letter::identity();
    }
    if (peek() != '[') fail("expected 'e' or '['");
    Point p = point();
    if (text_.substr(pos_, 3) == "^-1") {
      pos_ += 3;
      return Letter::neg(std::move(p));
    }
    if (!at_end() && peek() == '^') fail("expected '^-1'");
    return Letter::pos(std::move(p));
  }

  Point point() {
    ++pos_;  // '['
    std::vector<std::uint64_t> coords;
    if (!at_end() && peek() == ']') {
      ++pos_;
      return Point();
    }
    for (;;) {
      coords.push_back(nat());
      if (at_end()) fail("unterminated point");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() != ',') fail("expected ',' or ']'");
      ++pos_;
    }
    return Point(std::move(coords));
  }

  std::uint64_t nat() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a natural number");
    std::uint64_t v = 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (kMax - digit) / 10) fail("coordinate out of range");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool had_ws_ = false;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Point& p) {
  if (p.depth() == 0) return "[0]";
  std::string out = "[";
  for (std::size_t k = 0; k < p.depth(); ++k) {
    if (k) out += ',';
    out += std::to_string(p[k]);
  }
  return out + "]";
}

std::string to_string(const Letter& l) {
  switch (l.kind()) {
    case Letter::Kind::Identity:
      return "e";
    case Letter::Kind::Pos:
      return to_string(l.point());
    case Letter::Kind::Neg:
      return to_string(l.point()) + "^-1";
  }
  return {};
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

}  // namespace graev
