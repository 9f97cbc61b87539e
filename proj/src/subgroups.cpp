#include "toromaps/subgroups.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <unordered_map>

#ifdef TOROMAPS_HAVE_OPENMP
#include <omp.h>
#endif

namespace toromaps {

namespace {

struct Cyclic {
  Element generator;
  Subgroup elements;
};

struct Found {
  Subgroup elements;
  std::vector<Element> generators;
};

using ClassIndex = std::unordered_map<Subgroup, std::size_t, SubgroupHash>;

std::vector<Cyclic> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<Cyclic> out;
  std::unordered_map<Subgroup, std::size_t, SubgroupHash> seen;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    Subgroup c = g.generate(gen);
    if (seen.emplace(c, out.size()).second) out.push_back({x, std::move(c)});
  }
  return out;
}

std::optional<Found> join(const FiniteGroup& g, const Found& h, const Cyclic& c,
                          const ClassIndex& index) {
  if (h.elements.contains(c.generator)) return std::nullopt;
  std::vector<Element> gens = h.generators;
  gens.push_back(c.generator);
  Subgroup k = g.generate(gens);
  if (index.contains(k)) return std::nullopt;
  return Found{std::move(k), std::move(gens)};
}

// Serial reference kernel.
std::vector<std::optional<Found>> join_round_serial(const FiniteGroup& g,
                                                    const Found& h,
                                                    const std::vector<Cyclic>& cyclics,
                                                    const ClassIndex& index) {
  std::vector<std::optional<Found>> out(cyclics.size());
  for (std::size_t i = 0; i < cyclics.size(); ++i) {
    out[i] = join(g, h, cyclics[i], index);
  }
  return out;
}

// Same joins spread over OpenMP threads; `index` is only read here.
std::vector<std::optional<Found>> join_round_parallel(const FiniteGroup& g,
                                                      const Found& h,
                                                      const std::vector<Cyclic>& cyclics,
                                                      const ClassIndex& index) {
  std::vector<std::optional<Found>> out(cyclics.size());
  const auto n = static_cast<std::ptrdiff_t>(cyclics.size());
#ifdef TOROMAPS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        join(g, h, cyclics[static_cast<std::size_t>(i)], index);
  }
  return out;
}

struct ClassBuilder {
  const FiniteGroup& g;
  const std::vector<std::uint64_t>& element_orders;
  std::vector<Found> found;
  std::vector<SubgroupClass> classes;
  ClassIndex index;

  void add(Found f) {
    const std::size_t id = classes.size();
    SubgroupClass cls;
    cls.representative = f.elements;
    std::vector<Element> core_elems(f.elements.elements().begin(),
                                    f.elements.elements().end());
    std::size_t conjugates = 0;
    for (Element x = 0; x < g.order(); ++x) {
      Subgroup conj = g.conjugate(f.elements, x);
      if (index.contains(conj)) continue;
      ++conjugates;
      if (conj < cls.representative) cls.representative = conj;
      if (core_elems.size() > 1) {
        std::vector<Element> next;
        std::set_intersection(core_elems.begin(), core_elems.end(),
                              conj.elements().begin(), conj.elements().end(),
                              std::back_inserter(next));
        core_elems = std::move(next);
      }
      index.emplace(std::move(conj), id);
    }
    cls.order = f.elements.order();
    cls.index = g.order() / cls.order;
    cls.class_size = conjugates;
    cls.corefree = core_elems.size() == 1;
    for (Element x : cls.representative.elements()) {
      cls.element_orders.push_back(element_orders[x]);
    }
    std::sort(cls.element_orders.begin(), cls.element_orders.end());
    cls.generators = small_generating_set(g, cls.representative);
    if (g.generator_count() <= 2) {
      for (Element x : cls.generators) cls.witness_words.push_back(g.word_of(x));
    }
    classes.push_back(std::move(cls));
    found.push_back(std::move(f));
  }
};

}  // namespace

std::vector<Element> small_generating_set(const FiniteGroup& g,
                                          const Subgroup& h) {
  std::vector<Element> gens;
  std::vector<bool> inside(g.order(), false);
  inside[0] = true;
  for (Element x : h.elements()) {
    if (inside[x]) continue;
    gens.push_back(x);
    const Subgroup span = g.generate(gens);
    for (Element y : span.elements()) inside[y] = true;
  }
  return gens;
}

std::vector<SubgroupClass> all_subgroup_classes(const FiniteGroup& g,
                                                const EnumerationOptions& options) {
  if (g.order() > options.max_group_order) {
    throw CapacityExceeded("subgroup enumeration is limited to groups of order <= " +
                           std::to_string(options.max_group_order));
  }
  std::vector<std::uint64_t> element_orders(g.order());
  for (Element x = 0; x < g.order(); ++x) element_orders[x] = g.element_order(x);

  const std::vector<Cyclic> cyclics = cyclic_subgroups(g);
  ClassBuilder builder{g, element_orders, {}, {}, {}};
  builder.add(Found{Subgroup({0}), {}});

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const Found h = builder.found[id];
      auto results = options.execution == Execution::Parallel
                         ? join_round_parallel(g, h, cyclics, builder.index)
                         : join_round_serial(g, h, cyclics, builder.index);
      for (auto& r : results) {
        if (!r || builder.index.contains(r->elements)) continue;
        next.push_back(builder.classes.size());
        builder.add(std::move(*r));
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupClass> classes = std::move(builder.classes);
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& l, const SubgroupClass& r) {
              return std::tie(l.order, l.element_orders, l.representative) <
                     std::tie(r.order, r.element_orders, r.representative);
            });
  return classes;
}

std::set<std::size_t> corefree_indices(const std::vector<SubgroupClass>& classes) {
  std::set<std::size_t> out;
  for (const auto& c : classes) {
    if (c.corefree) out.insert(c.index);
  }
  return out;
}

std::set<std::size_t> corefree_indices(const FiniteGroup& g,
                                       const EnumerationOptions& options) {
  return corefree_indices(all_subgroup_classes(g, options));
}

std::size_t find_class(const FiniteGroup& g,
                       const std::vector<SubgroupClass>& classes,
                       const Subgroup& h) {
  const Subgroup canonical = canonical_conjugate(g, h);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].representative == canonical) return i;
  }
  return classes.size();
}

}  // namespace toromaps
