#include "toromaps/presentation.hpp"

#include <numeric>

namespace toromaps {

std::string Presentation::to_string() const {
  std::string out = "< a, b | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += relators[i].to_string();
  }
  return out + " >";
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Map44: return "44";
    case Family::Map36: return "36";
    case Family::Map63: return "63";
    case Family::Hyper333: return "333";
  }
  return "?";
}

std::string_view family_symbol(Family f) {
  switch (f) {
    case Family::Map44: return "{4,4}";
    case Family::Map36: return "{3,6}";
    case Family::Map63: return "{6,3}";
    case Family::Hyper333: return "(3,3,3)";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected 44, 36, 63 or 333)");
}

bool ToroidalSpec::is_valid() const noexcept {
  if (s1 < 0 || s2 < 0) return false;
  return s1 > 1 || s2 > 1;
}

void ToroidalSpec::validate() const {
  if (s1 < 0 || s2 < 0) {
    throw InvalidSpec("negative vector component in " + to_string());
  }
  if (!is_valid()) {
    throw InvalidSpec("excluded vector " + to_string() +
                      " (need (s1,s2) not in {(0,0),(1,0),(0,1),(1,1)})");
  }
}

int ToroidalSpec::gcd() const noexcept { return std::gcd(s1, s2); }

bool ToroidalSpec::is_reflexible() const noexcept {
  return s1 == 0 || s2 == 0 || s1 == s2;
}

std::string ToroidalSpec::to_string() const {
  return std::string(family_symbol(family)) + "_(" + std::to_string(s1) + "," +
         std::to_string(s2) + ")";
}

namespace {

// Words for {3,6}; {6,3} is obtained from them by swapping a and b.
TranslationWords translations_36() {
  return {Word{1, -2, -2}, Word{-1, 2, 2}};
}

}  // namespace

TranslationWords translation_words(const ToroidalSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Map44:
    case Family::Hyper333:
      return {Word{1, -2}, Word{-1, 2}};
    case Family::Map36:
      return translations_36();
    case Family::Map63: {
      const auto t = translations_36();
      return {swap_generators(t.u), swap_generators(t.v)};
    }
  }
  throw InvalidSpec("unknown family");
}

Presentation toroidal_presentation(const ToroidalSpec& spec) {
  const TranslationWords t = translation_words(spec);
  const Word a = Word::a();
  const Word b = Word::b();
  const Word lattice = t.u.pow(spec.s1) * t.v.pow(spec.s2);

  Presentation p;
  switch (spec.family) {
    case Family::Map44:
      p.relators = {a.pow(4), b.pow(4), (a * b).pow(2), lattice};
      break;
    case Family::Map36:
      p.relators = {a.pow(3), b.pow(6), (a * b).pow(2), lattice};
      break;
    case Family::Map63:
      p.relators = {a.pow(6), b.pow(3), (a * b).pow(2), lattice};
      break;
    case Family::Hyper333:
      p.relators = {a.pow(3), b.pow(3), (a * b).pow(3), lattice};
      break;
  }
  return p;
}

std::int64_t expected_translation_order(const ToroidalSpec& spec) {
  const std::int64_t x = spec.s1;
  const std::int64_t y = spec.s2;
  if (spec.family == Family::Map44) return x * x + y * y;
  return x * x + x * y + y * y;
}

std::int64_t expected_group_order(const ToroidalSpec& spec) {
  const std::int64_t t = expected_translation_order(spec);
  switch (spec.family) {
    case Family::Map44: return 4 * t;
    case Family::Map36:
    case Family::Map63: return 6 * t;
    case Family::Hyper333: return 3 * t;
  }
  return 0;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace toromaps
