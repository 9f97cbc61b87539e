#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toromaps/word.hpp"

namespace toromaps {

/// A finitely presented group on the two generators a, b.
struct Presentation {
  std::vector<Word> relators;

  std::string to_string() const;
};

enum class Family { Map44, Map36, Map63, Hyper333 };

inline constexpr Family kAllFamilies[] = {Family::Map44, Family::Map36,
                                          Family::Map63, Family::Hyper333};

/// CLI name of a family: "44", "36", "63" or "333".
std::string_view family_name(Family f);
/// Human-readable symbol such as "{4,4}" or "(3,3,3)".
std::string_view family_symbol(Family f);
/// Inverse of family_name; throws std::invalid_argument on unknown names.
Family parse_family(std::string_view name);

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A toroidal map or hypermap: tessellation family plus the vector (s1, s2).
struct ToroidalSpec {
  Family family = Family::Map44;
  int s1 = 0;
  int s2 = 0;

  bool is_valid() const noexcept;
  /// Throws InvalidSpec unless is_valid().
  void validate() const;
  /// gcd(s1, s2) with gcd(0, n) = n.
  int gcd() const noexcept;
  /// True when the map is reflexible (s1 s2 (s1 - s2) = 0).
  bool is_reflexible() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ToroidalSpec&, const ToroidalSpec&) = default;
};

struct TranslationWords {
  Word u;
  Word v;
};

Presentation toroidal_presentation(const ToroidalSpec& spec);
TranslationWords translation_words(const ToroidalSpec& spec);

/// |T| = s1^2 + s2^2 for {4,4}, s1^2 + s1 s2 + s2^2 otherwise.
std::int64_t expected_translation_order(const ToroidalSpec& spec);

/// |G| = 4|T| for {4,4}, 6|T| for {3,6} and {6,3}, 3|T| for (3,3,3).
/// For {3,6} this is 6|T| even though a has order 3: the vertex
/// stabiliser <b> has order 6 and T is regular on vertices.
std::int64_t expected_group_order(const ToroidalSpec& spec);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

}  // namespace toromaps
