#include <doctest.h>

#include <random>

#include "toromaps/finite_group.hpp"
#include "toromaps/toroidal_analysis.hpp"

using namespace toromaps;

namespace {

const ToroidalSpec k44_21{Family::Map44, 2, 1};
const ToroidalSpec k333_32{Family::Hyper333, 3, 2};

CosetTable cosets(const ToroidalSpec& spec, std::vector<Word> subgens) {
  return enumerate(toroidal_presentation(spec), subgens);
}

}  // namespace

TEST_CASE("coset enumeration examples") {
  CHECK(cosets(k44_21, {Word::b()}).size() == 5);
  CHECK(cosets(k44_21, {}).size() == 20);
  CHECK(cosets(k333_32, {Word::a()}).size() == 19);
  CHECK(cosets(k44_21, {Word::a(), Word::b()}).size() == 1);
}

TEST_CASE("degree-5 coset action matches the reference representation") {
  const PermutationRep rep = to_permutation_rep(cosets(k44_21, {Word::b()}));
  const PermutationRep reference{Permutation::from_cycles("(1,2,4,3)", 5),
                               Permutation::from_cycles("(2,3,5,4)", 5)};
  CHECK(find_intertwiner(rep, reference).has_value());
}

TEST_CASE("regular and trivial tables") {
  const PermutationRep regular = to_permutation_rep(cosets(k44_21, {}));
  CHECK(regular.a.moved_point_count() == 20);
  CHECK(regular.b.moved_point_count() == 20);
  const PermutationRep one = to_permutation_rep(cosets(k44_21, {Word::a(), Word::b()}));
  CHECK(one.degree() == 1);
  CHECK(one.a.is_identity());
  CHECK(one.b.is_identity());
}

TEST_CASE("enumeration is deterministic and closed") {
  for (const ToroidalSpec& spec : {k44_21, k333_32, ToroidalSpec{Family::Map36, 3, 1}}) {
    const Presentation pres = toroidal_presentation(spec);
    const std::vector<Word> subgens{parse_word("a*b")};
    const CosetTable t1 = enumerate(pres, subgens);
    const CosetTable t2 = enumerate(pres, subgens);
    CHECK(t1 == t2);
    for (std::uint32_t c = 0; c < t1.size(); ++c) {
      for (int col = 0; col < 4; ++col) {
        CHECK(t1.act(t1.act(c, col), inverse_column(col)) == c);
      }
      for (const Word& r : pres.relators) CHECK(t1.trace(c, r) == c);
    }
    for (const Word& s : subgens) CHECK(t1.trace(0, s) == 0);
  }
}

TEST_CASE("regular table size equals the expected order across the sweep") {
  ScanRange range;
  range.max_sum = 8;
  for (const ToroidalSpec& spec : specs_in_range(range)) {
    CAPTURE(spec.to_string());
    const CosetTable table = cosets(spec, {});
    CHECK(table.size() == static_cast<std::size_t>(expected_group_order(spec)));
    CHECK(group_order(PermGroup(to_permutation_rep(table))) == table.size());
  }
}

TEST_CASE("Lagrange on random cyclic subgroups") {
  std::mt19937 rng(3);
  for (const ToroidalSpec& spec : {k44_21, k333_32, ToroidalSpec{Family::Map63, 2, 2}}) {
    const FiniteGroup g = FiniteGroup::from_regular_table(cosets(spec, {}));
    for (int i = 0; i < 20; ++i) {
      std::vector<Letter> raw;
      for (int k = 0; k < 6; ++k) raw.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : 2);
      const Word w(raw);
      const std::size_t index = cosets(spec, {w}).size();
      CHECK(index * g.element_order(g.evaluate(w)) == g.order());
    }
  }
}

TEST_CASE("capacity and core checks") {
  CHECK_THROWS_AS(enumerate(toroidal_presentation(k333_32), {}, 10), CapacityExceeded);
  CHECK(core_is_trivial(cosets(k44_21, {Word::b()}), 20));
  CHECK(core_is_trivial(cosets(k44_21, {}), 20));
  const TranslationWords t = translation_words(k44_21);
  CHECK_FALSE(core_is_trivial(cosets(k44_21, {t.u, t.v}), 20));
}
