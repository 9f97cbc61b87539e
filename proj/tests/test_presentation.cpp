#include <doctest.h>

#include "toromaps/presentation.hpp"

using namespace toromaps;

namespace {

Word w(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("toroidal presentations") {
  const Presentation p44 = toroidal_presentation({Family::Map44, 2, 1});
  CHECK(p44.relators == std::vector<Word>{w("a^4"), w("b^4"), w("(a*b)^2"),
                                          w("(a*b^-1)^2*(a^-1*b)")});
  const Presentation p333 = toroidal_presentation({Family::Hyper333, 3, 2});
  CHECK(p333.relators == std::vector<Word>{w("a^3"), w("b^3"), w("(a*b)^3"),
                                           w("(a*b^-1)^3*(a^-1*b)^2")});
  CHECK_THROWS_AS(toroidal_presentation({Family::Map44, 1, 1}), InvalidSpec);
}

TEST_CASE("translation words") {
  const TranslationWords t44 = translation_words({Family::Map44, 2, 1});
  CHECK(t44.u == Word{1, -2});
  CHECK(t44.v == Word{-1, 2});
  const TranslationWords t36 = translation_words({Family::Map36, 2, 1});
  CHECK(t36.u == Word{1, -2, -2});
  CHECK(t36.v == Word{-1, 2, 2});
  const TranslationWords t63 = translation_words({Family::Map63, 2, 1});
  CHECK(t63.u == swap_generators(t36.u));
  CHECK(t63.v == swap_generators(t36.v));
  const TranslationWords t333 = translation_words({Family::Hyper333, 3, 2});
  CHECK(t333.u == Word{1, -2});
  CHECK(t333.v == Word{-1, 2});
}

TEST_CASE("expected orders") {
  CHECK(expected_translation_order({Family::Map44, 3, 1}) == 10);
  CHECK(expected_translation_order({Family::Map36, 2, 1}) == 7);
  CHECK(expected_translation_order({Family::Hyper333, 3, 2}) == 19);
  CHECK(expected_group_order({Family::Map44, 2, 1}) == 20);
  CHECK(expected_group_order({Family::Map36, 2, 0}) == 24);
  CHECK(expected_group_order({Family::Map63, 2, 0}) == 24);
  CHECK(expected_group_order({Family::Hyper333, 3, 2}) == 57);
}

TEST_CASE("spec validation") {
  for (auto [s1, s2] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 3}, {2, -2}}) {
    const ToroidalSpec spec{Family::Map36, s1, s2};
    CHECK_FALSE(spec.is_valid());
    CHECK_THROWS_AS(spec.validate(), InvalidSpec);
  }
  CHECK(ToroidalSpec{Family::Map44, 2, 0}.is_valid());
  CHECK(ToroidalSpec{Family::Map44, 2, 1}.to_string() == "{4,4}_(2,1)");
  CHECK(ToroidalSpec{Family::Hyper333, 3, 2}.to_string() == "(3,3,3)_(3,2)");
  CHECK(ToroidalSpec{Family::Map44, 6, 4}.gcd() == 2);
  CHECK(ToroidalSpec{Family::Map44, 0, 5}.gcd() == 5);
  CHECK(ToroidalSpec{Family::Map44, 3, 3}.is_reflexible());
  CHECK_FALSE(ToroidalSpec{Family::Map44, 2, 1}.is_reflexible());
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("55"), std::invalid_argument);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}
