#include "toromaps/finite_group.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace toromaps {

namespace {

constexpr Element kNone = std::numeric_limits<Element>::max();

Letter letter_of_column(int column) {
  const int gen = column / 2 + 1;
  return column % 2 == 0 ? gen : -gen;
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Subgroup::Subgroup(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::size_t SubgroupHash::operator()(const Subgroup& h) const noexcept {
  std::size_t seed = h.order();
  for (Element x : h.elements()) {
    seed ^= x + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
  }
  return seed;
}

FiniteGroup FiniteGroup::from_regular_table(const CosetTable& table) {
  FiniteGroup g;
  g.order_ = table.size();
  g.columns_.assign(4, std::vector<Element>(g.order_));
  for (Element x = 0; x < g.order_; ++x) {
    for (int c = 0; c < 4; ++c) g.columns_[c][x] = table.act(x, c);
  }
  g.generators_ = {table.act(0, 0), table.act(0, 2)};
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const PermGroup& group,
                                           std::size_t max_order) {
  const std::vector<Permutation> elements = group.elements(max_order);
  std::unordered_map<Permutation, Element, PermHash> index;
  for (Element i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  FiniteGroup g;
  g.order_ = elements.size();
  for (const Permutation& gen : group.generators()) {
    const Permutation gen_inv = gen.inverse();
    std::vector<Element> fwd(g.order_);
    std::vector<Element> back(g.order_);
    for (Element x = 0; x < g.order_; ++x) {
      fwd[x] = index.at(elements[x] * gen);
      back[x] = index.at(elements[x] * gen_inv);
    }
    g.generators_.push_back(fwd[0]);
    g.columns_.push_back(std::move(fwd));
    g.columns_.push_back(std::move(back));
  }
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  parent_.assign(order_, kNone);
  parent_column_.assign(order_, -1);
  std::vector<Element> bfs{0};
  parent_[0] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const Element y = columns_[c][bfs[i]];
      if (parent_[y] == kNone) {
        parent_[y] = bfs[i];
        parent_column_[y] = static_cast<int>(c);
        bfs.push_back(y);
      }
    }
  }
  if (bfs.size() != order_) {
    throw std::logic_error("generator columns do not act transitively");
  }

  if (order_ <= kCayleyLimit) {
    cayley_.assign(order_ * order_, 0);
    for (Element x = 0; x < order_; ++x) {
      Element* row = &cayley_[static_cast<std::size_t>(x) * order_];
      row[0] = x;
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        const Element y = bfs[i];
        row[y] = columns_[parent_column_[y]][row[parent_[y]]];
      }
    }
  }

  inverses_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    // Read the spanning-tree word of x backwards with inverted letters.
    Element y = 0;
    for (Element z = x; z != 0; z = parent_[z]) {
      y = columns_[static_cast<std::size_t>(parent_column_[z] ^ 1)][y];
    }
    inverses_[x] = y;
  }
}

Element FiniteGroup::mul(Element x, Element y) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(x) * order_ + y];
  std::vector<int> path;
  for (Element z = y; z != 0; z = parent_[z]) path.push_back(parent_column_[z]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) x = columns_[*it][x];
  return x;
}

std::uint64_t FiniteGroup::element_order(Element x) const {
  std::uint64_t n = 1;
  for (Element y = x; y != 0; y = mul(y, x)) ++n;
  return n;
}

Element FiniteGroup::evaluate(const Word& w) const {
  Element x = 0;
  for (Letter l : w.letters()) {
    const int c = column_of(l);
    if (static_cast<std::size_t>(c) >= columns_.size()) {
      throw std::invalid_argument("word uses a generator the group lacks");
    }
    x = columns_[c][x];
  }
  return x;
}

Word FiniteGroup::word_of(Element x) const {
  std::vector<Letter> letters;
  for (Element z = x; z != 0; z = parent_[z]) {
    letters.push_back(letter_of_column(parent_column_[z]));
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

Subgroup FiniteGroup::generate(std::span<const Element> generators) const {
  std::vector<bool> seen(order_, false);
  std::vector<Element> out{0};
  seen[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element g : generators) {
      const Element y = mul(out[i], g);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return Subgroup(std::move(out));
}

Subgroup FiniteGroup::conjugate(const Subgroup& h, Element g) const {
  std::vector<Element> out;
  out.reserve(h.order());
  const Element g_inv = inverse(g);
  for (Element x : h.elements()) out.push_back(mul(mul(g_inv, x), g));
  return Subgroup(std::move(out));
}

Permutation FiniteGroup::regular_image(Element x) const {
  std::vector<Point> images(order_);
  for (Element y = 0; y < order_; ++y) images[y] = mul(y, x);
  return Permutation(std::move(images));
}

bool are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1,
                             const Subgroup& h2) {
  if (h1.order() != h2.order()) return false;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.conjugate(h1, x) == h2) return true;
  }
  return false;
}

Subgroup core(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> current(h.elements().begin(), h.elements().end());
  for (Element x = 0; x < g.order() && current.size() > 1; ++x) {
    const Subgroup conj = g.conjugate(h, x);
    std::vector<Element> next;
    std::set_intersection(current.begin(), current.end(), conj.elements().begin(),
                          conj.elements().end(), std::back_inserter(next));
    current = std::move(next);
  }
  return Subgroup(std::move(current));
}

Subgroup canonical_conjugate(const FiniteGroup& g, const Subgroup& h) {
  Subgroup best = h;
  for (Element x = 1; x < g.order(); ++x) {
    Subgroup conj = g.conjugate(h, x);
    if (conj < best) best = std::move(conj);
  }
  return best;
}

std::vector<Permutation> coset_action(const FiniteGroup& g, const Subgroup& h) {
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> label(g.order(), kUnset);
  std::vector<Element> reps{0};
  for (Element x : h.elements()) label[x] = 0;
  const std::size_t gens = g.generator_count();
  std::vector<std::vector<Point>> images(gens);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t i = 0; i < gens; ++i) {
      const Element y = g.right_mul(reps[c], static_cast<int>(2 * i));
      if (label[y] == kUnset) {
        const auto fresh = static_cast<Element>(reps.size());
        reps.push_back(y);
        for (Element x : h.elements()) label[g.mul(x, y)] = fresh;
      }
      images[i].push_back(label[y]);
    }
  }
  std::vector<Permutation> out;
  out.reserve(gens);
  for (auto& im : images) out.emplace_back(std::move(im));
  return out;
}

}  // namespace toromaps
