#include "toromaps/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace toromaps {

namespace {

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty word", pos_);
    Word w = word();
    skip_ws();
    if (!at_end()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return w;
  }

 private:
  Word word() {
    Word w = term();
    for (;;) {
      skip_ws();
      if (at_end() || text_[pos_] != '*') return w;
      ++pos_;
      w = w * term();
    }
  }

  Word term() {
    Word base = atom();
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  Word atom() {
    skip_ws();
    if (at_end()) throw ParseError("expected generator or '('", pos_);
    const char c = text_[pos_];
    if (c == 'a') {
      ++pos_;
      return Word::a();
    }
    if (c == 'b') {
      ++pos_;
      return Word::b();
    }
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      Word inner = word();
      skip_ws();
      if (at_end() || text_[pos_] != ')') {
        throw ParseError("unbalanced '(' opened at " + std::to_string(open),
                         pos_);
      }
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unknown generator '") + c + "'", pos_);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  long exponent() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer exponent", pos_);
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<int>::max() - 9) / 10) {
        throw ParseError("exponent too large", start);
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter x : letters) {
    if (x != 1 && x != -1 && x != 2 && x != -2) {
      throw std::invalid_argument("word letter out of range: " +
                                  std::to_string(x));
    }
    push_reduced(letters_, x);
  }
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);
  }
  return out;
}

Word Word::pow(long exponent) const {
  if (exponent == 0 || letters_.empty()) return Word{};
  const Word base = exponent < 0 ? inverse() : *this;
  const long count = exponent < 0 ? -exponent : exponent;
  // The repeated middle is cyclically reduced.
  std::size_t lo = 0;
  std::size_t hi = base.letters_.size();
  while (hi - lo >= 2 && base.letters_[lo] == -base.letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters_.assign(base.letters_.begin(), base.letters_.begin() + lo);
  for (long i = 0; i < count; ++i) {
    out.letters_.insert(out.letters_.end(), base.letters_.begin() + lo,
                        base.letters_.begin() + hi);
  }
  out.letters_.insert(out.letters_.end(), base.letters_.begin() + hi,
                      base.letters_.end());
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    const int gen = letters_[i] > 0 ? letters_[i] : -letters_[i];
    const int sign = letters_[i] > 0 ? 1 : -1;
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long run = static_cast<long>(j - i) * sign;
    if (!out.empty()) out += '*';
    out += gen == 1 ? 'a' : 'b';
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out;
  out.letters_.reserve(lhs.letters_.size() + rhs.letters_.size());
  out.letters_ = lhs.letters_;
  for (Letter x : rhs.letters_) push_reduced(out.letters_, x);
  return out;
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

Word invert(const Word& w) { return w.inverse(); }

Word concat(const Word& lhs, const Word& rhs) { return lhs * rhs; }

Word power(const Word& w, long k) { return w.pow(k); }

Word swap_generators(const Word& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& x : out) x = x > 0 ? 3 - x : -(3 + x);
  return Word(std::move(out));
}

}  // namespace toromaps
