#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toromaps {

/// A signed generator letter: +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
using Letter = int;

/// Thrown by parse_word; position() is the 0-based offset of the offending
/// character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Element of the free group on {a, b}. Always stored freely reduced, so two
/// words are equal as group elements iff they compare equal.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters)
      : Word(std::vector<Letter>(letters)) {}

  static Word a() { return Word{1}; }
  static Word b() { return Word{2}; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(long exponent) const;

  /// Canonical text form: runs collapse to exponents, `*` separators, and
  /// the identity prints as `1`. Reparses to the same word.
  std::string to_string() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Grammar: word := term ('*' term)* ; term := atom ['^' int] ;
/// atom := 'a' | 'b' | '1' | '(' word ')'. Whitespace is ignored.
Word parse_word(std::string_view text);

Word invert(const Word& w);
Word concat(const Word& lhs, const Word& rhs);
Word power(const Word& w, long k);

/// Swaps the roles of a and b letter by letter.
Word swap_generators(const Word& w);

}  // namespace toromaps
