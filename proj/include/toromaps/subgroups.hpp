#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "toromaps/finite_group.hpp"
#include "toromaps/word.hpp"

namespace toromaps {

/// One conjugacy class of subgroups.
struct SubgroupClass {
  Subgroup representative;  // smallest conjugate as a sorted element list
  std::size_t order = 0;
  std::size_t index = 0;
  std::size_t class_size = 0;  // number of conjugates
  bool corefree = false;
  std::vector<std::uint64_t> element_orders;  // sorted multiset
  std::vector<Element> generators;            // small generating set
  std::vector<Word> witness_words;            // words of `generators`
};

enum class Execution { Serial, Parallel };

struct EnumerationOptions {
  static constexpr std::size_t kMaxGroupOrder = 10000;

  Execution execution = Execution::Parallel;
  std::size_t max_group_order = kMaxGroupOrder;
};

/// One representative per conjugacy class, sorted by (order, element-order
/// multiset, representative). Throws CapacityExceeded above the order cap.
///
/// Classes are grown from the trivial subgroup: each round joins every
/// newly found representative with every cyclic subgroup it does not
/// contain. After round r every subgroup with a maximal chain of length r
/// from the trivial subgroup has its class present. Execution::Parallel
/// spreads the joins of a round over OpenMP threads; the merge into the
/// class index is serial and the result is identical in both modes.
std::vector<SubgroupClass> all_subgroup_classes(const FiniteGroup& g,
                                                const EnumerationOptions& options = {});

/// Indices of the core-free classes; always contains |G|.
std::set<std::size_t> corefree_indices(const std::vector<SubgroupClass>& classes);
std::set<std::size_t> corefree_indices(const FiniteGroup& g,
                                       const EnumerationOptions& options = {});

/// Position of the class containing h, or classes.size() if absent.
std::size_t find_class(const FiniteGroup& g,
                       const std::vector<SubgroupClass>& classes,
                       const Subgroup& h);

/// Greedy generating set: walk the elements in order, keeping those not yet
/// generated by the ones kept so far.
std::vector<Element> small_generating_set(const FiniteGroup& g,
                                          const Subgroup& h);

}  // namespace toromaps
