#include "toromaps/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace toromaps {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("cycle notation: " + what + " at position " +
                                std::to_string(pos));
  };
  std::size_t max_point = 0;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected point");
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > PermGroup::kMaxDegree) fail("point too large");
        ++pos;
      }
      if (value == 0) fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
      max_point = std::max(max_point, value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  Permutation p(std::max(degree, max_point));
  std::vector<bool> touched(p.degree(), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (touched[cycle[i]]) {
        throw std::invalid_argument("cycle notation: point " +
                                    std::to_string(cycle[i] + 1) +
                                    " appears twice");
      }
      touched[cycle[i]] = true;
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[images_[x]] = static_cast<Point>(x);
  }
  return out;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::moved_point_count() const noexcept {
  std::size_t n = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) n += images_[x] != x;
  return n;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    Point y = static_cast<Point>(x);
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += ',';
      out += std::to_string(y + 1);
      first = false;
      y = images_[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("composing permutations of different degree");
  }
  Permutation out(p.degree());
  for (std::size_t x = 0; x < p.images_.size(); ++x) {
    out.images_[x] = q.images_[p.images_[x]];
  }
  return out;
}

Permutation PermutationRep::evaluate(const Word& w) const {
  Permutation result(degree());
  const Permutation a_inv = a.inverse();
  const Permutation b_inv = b.inverse();
  for (Letter x : w.letters()) {
    switch (x) {
      case 1: result = result * a; break;
      case -1: result = result * a_inv; break;
      case 2: result = result * b; break;
      default: result = result * b_inv; break;
    }
  }
  return result;
}

std::string PermutationRep::to_string() const {
  return "[ a, b ] -> [ " + a.to_cycle_string() + ", " + b.to_cycle_string() +
         " ]";
}

}  // namespace toromaps
