#include <doctest.h>

#include "oracle_compare.hpp"
#include "toromaps/toroidal_analysis.hpp"

using namespace toromaps;

namespace {

FiniteGroup group_of(std::initializer_list<const char*> cycles, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
  return FiniteGroup::from_permutations(PermGroup(gens));
}

std::vector<std::size_t> orders(const std::vector<SubgroupClass>& classes) {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.order);
  return out;
}

}  // namespace

TEST_CASE("small lattices") {
  const FiniteGroup c4 = group_of({"(1,2,3,4)"}, 4);
  CHECK(orders(all_subgroup_classes(c4)) == std::vector<std::size_t>{1, 2, 4});
  CHECK(corefree_indices(c4) == std::set<std::size_t>{4});
  const FiniteGroup s3 = group_of({"(1,2,3)", "(1,2)"}, 3);
  CHECK(orders(all_subgroup_classes(s3)) == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(corefree_indices(s3) == std::set<std::size_t>{3, 6});
  const FiniteGroup d4 = group_of({"(1,2,3,4)", "(1,3)"}, 4);
  CHECK(all_subgroup_classes(d4).size() == 8);
  CHECK(corefree_indices(d4) == std::set<std::size_t>{4, 8});
}

TEST_CASE("join closure equals the all-subsets oracle on small groups") {
  const std::vector<FiniteGroup> groups{
      group_of({"(1,2,3,4)"}, 4),
      group_of({"(1,2,3)", "(1,2)"}, 3),
      group_of({"(1,2,3,4)", "(1,3)"}, 4),
      group_of({"(1,2)", "(3,4)"}, 4),
      group_of({"(1,2,3)(4,5)"}, 5),
      group_of({"(1,2,3)", "(2,3,4)"}, 4),
      group_of({"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}, 6),
      group_of({"(1,2,3,4,5,6,7,8)", "(1,3)(4,8)(5,7)"}, 8),
      group_of({"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8),
      group_of({"(1,2)", "(3,4)", "(5,6)", "(7,8)"}, 8),
      ToroidalGroup::build({Family::Map44, 2, 0}).group,
      ToroidalGroup::build({Family::Hyper333, 2, 0}).group,
  };
  for (const FiniteGroup& g : groups) {
    CAPTURE(g.order());
    const oracle::Table t = oracle::Table::of(g);
    const auto expected = oracle::classes_of(t, oracle::subgroups_all_subsets(t));
    for (Execution e : {Execution::Serial, Execution::Parallel}) {
      EnumerationOptions options;
      options.execution = e;
      CHECK(oracle::summarize(all_subgroup_classes(g, options)) == expected);
    }
    CHECK(oracle::subgroups_by_adjunction(t) == oracle::subgroups_all_subsets(t));
  }
}

TEST_CASE("join closure equals the adjunction oracle on toroidal groups") {
  ScanRange range;
  range.min_sum = 3;
  range.max_sum = 6;
  range.ordered_only = true;
  for (const ToroidalSpec& spec : specs_in_range(range)) {
    if (expected_group_order(spec) > 120) continue;
    CAPTURE(spec.to_string());
    const FiniteGroup g = ToroidalGroup::build(spec).group;
    const oracle::Table t = oracle::Table::of(g);
    const auto expected = oracle::classes_of(t, oracle::subgroups_by_adjunction(t));
    const auto classes = all_subgroup_classes(g);
    CHECK(oracle::summarize(classes) == expected);
    CHECK(corefree_indices(classes) == oracle::degrees_of(t, expected));
  }
}

TEST_CASE("class records are consistent") {
  const ToroidalGroup tg = ToroidalGroup::build({Family::Map36, 2, 2});
  const FiniteGroup& g = tg.group;
  const auto classes = all_subgroup_classes(g);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const SubgroupClass& c = classes[i];
    CHECK(c.order * c.index == g.order());
    CHECK(g.order() % c.class_size == 0);
    CHECK(canonical_conjugate(g, c.representative) == c.representative);
    CHECK(g.generate(c.generators) == c.representative);
    std::vector<Element> from_words;
    for (const Word& w : c.witness_words) from_words.push_back(g.evaluate(w));
    CHECK(g.generate(from_words) == c.representative);
    CHECK(c.corefree == (core(g, c.representative).order() == 1));
    CHECK(find_class(g, classes, g.conjugate(c.representative, tg.b)) == i);
    if (i > 0) CHECK(classes[i - 1].order <= c.order);
  }
  CHECK(corefree_indices(classes) == std::set<std::size_t>{12, 18, 24, 36, 72});
}

TEST_CASE("examples from the toroidal groups") {
  const FiniteGroup g44 = ToroidalGroup::build({Family::Map44, 2, 1}).group;
  CHECK(corefree_indices(g44) == std::set<std::size_t>{5, 10, 20});
  const FiniteGroup g333 = ToroidalGroup::build({Family::Hyper333, 3, 2}).group;
  CHECK(corefree_indices(g333) == std::set<std::size_t>{19, 57});
  const FiniteGroup abelian = group_of({"(1,2,3,4,5,6)", "(7,8)"}, 8);
  CHECK(corefree_indices(abelian) == std::set<std::size_t>{abelian.order()});
}

TEST_CASE("serial and parallel kernels agree") {
  ScanRange range;
  range.min_sum = 3;
  range.max_sum = 7;
  range.ordered_only = true;
  for (const ToroidalSpec& spec : specs_in_range(range)) {
    CAPTURE(spec.to_string());
    const FiniteGroup g = ToroidalGroup::build(spec).group;
    EnumerationOptions serial;
    serial.execution = Execution::Serial;
    EnumerationOptions parallel;
    parallel.execution = Execution::Parallel;
    const auto a = all_subgroup_classes(g, serial);
    const auto b = all_subgroup_classes(g, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].representative == b[i].representative);
      CHECK(a[i].witness_words == b[i].witness_words);
      CHECK(a[i].class_size == b[i].class_size);
    }
  }
}

TEST_CASE("order cap") {
  EnumerationOptions options;
  options.max_group_order = 10;
  CHECK_THROWS_AS(all_subgroup_classes(ToroidalGroup::build({Family::Map44, 2, 1}).group,
                                       options),
                  CapacityExceeded);
}
