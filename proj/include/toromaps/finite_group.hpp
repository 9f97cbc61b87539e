#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toromaps/permutation.hpp"
#include "toromaps/todd_coxeter.hpp"
#include "toromaps/word.hpp"

namespace toromaps {

using Element = std::uint32_t;

/// A subgroup as its sorted set of element indices.
class Subgroup {
 public:
  Subgroup() = default;
  /// Sorts and deduplicates; does not check closure.
  explicit Subgroup(std::vector<Element> elements);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element x) const;
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<Element> elements_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const noexcept;
};

/// A finite group with indexed elements (0 is the identity) and right
/// multiplication by each generator and its inverse tabulated. Element words
/// come from a breadth-first spanning tree over the generator columns.
class FiniteGroup {
 public:
  /// Groups up to this order keep a full Cayley table.
  static constexpr std::size_t kCayleyLimit = 2048;

  /// Regular action: elements are the cosets of the trivial subgroup.
  static FiniteGroup from_regular_table(const CosetTable& table);
  /// Closure of permutation generators.
  static FiniteGroup from_permutations(const PermGroup& group,
                                       std::size_t max_order = PermGroup::kMaxOrder);

  std::size_t order() const noexcept { return order_; }
  std::size_t generator_count() const noexcept { return columns_.size() / 2; }
  Element generator(std::size_t i) const { return generators_[i]; }

  Element right_mul(Element x, int column) const {
    return columns_[static_cast<std::size_t>(column)][x];
  }
  Element mul(Element x, Element y) const;
  Element inverse(Element x) const { return inverses_[x]; }
  Element conjugate(Element x, Element g) const {
    return mul(mul(inverse(g), x), g);
  }
  std::uint64_t element_order(Element x) const;

  /// Only meaningful for groups with at most two generators (a, b).
  Element evaluate(const Word& w) const;
  Word word_of(Element x) const;

  Subgroup generate(std::span<const Element> generators) const;
  Subgroup conjugate(const Subgroup& h, Element g) const;

  /// Right-regular action of element x as a permutation of the elements.
  Permutation regular_image(Element x) const;

 private:
  FiniteGroup() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<std::vector<Element>> columns_;  // 2 per generator
  std::vector<Element> generators_;
  std::vector<Element> parent_;
  std::vector<int> parent_column_;
  std::vector<Element> inverses_;
  std::vector<Element> cayley_;  // order_ * order_ when order_ <= kCayleyLimit
};

bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                             const Subgroup& h2);

/// Largest normal subgroup of g inside h: the intersection of all conjugates.
Subgroup core(const FiniteGroup& g, const Subgroup& h);

/// Conjugate of h that is smallest as a sorted element list.
Subgroup canonical_conjugate(const FiniteGroup& g, const Subgroup& h);

/// Action of g on the right cosets of h, as images of each generator.
/// Coset 0 is h itself; the rest are numbered breadth-first.
std::vector<Permutation> coset_action(const FiniteGroup& g, const Subgroup& h);

}  // namespace toromaps
