#include <algorithm>
#include <unordered_set>

#include "toromaps/permutation.hpp"

namespace toromaps {

namespace {

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

PermGroup::PermGroup(std::vector<Permutation> generators, std::size_t degree)
    : generators_(std::move(generators)), degree_(degree) {
  if (!generators_.empty()) degree_ = generators_.front().degree();
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("generators of different degree");
    }
  }
}

PermGroup::PermGroup(const PermutationRep& rep)
    : PermGroup(std::vector<Permutation>{rep.a, rep.b}) {}

std::vector<Permutation> PermGroup::elements(std::size_t max_order) const {
  if (degree_ > kMaxDegree) {
    throw CapacityExceeded("degree " + std::to_string(degree_) +
                           " exceeds the desk-scale limit");
  }
  std::vector<Permutation> out{Permutation(degree_)};
  std::unordered_set<Permutation, PermHash> seen{out.front()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation next = out[i] * g;
      if (seen.insert(next).second) {
        if (out.size() >= max_order) {
          throw CapacityExceeded("group order exceeds " +
                                 std::to_string(max_order));
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::uint64_t group_order(const PermGroup& g, std::size_t max_order) {
  return g.elements(max_order).size();
}

Partition orbits(const PermGroup& g) {
  const std::size_t n = g.degree();
  std::vector<bool> seen(n, false);
  Partition cells;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> cell{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      for (const auto& gen : g.generators()) {
        const Point y = gen(cell[i]);
        if (!seen[y]) {
          seen[y] = true;
          cell.push_back(y);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

BlockShape minimal_block_system_sizes(const PermGroup& g,
                                      const Partition& seed) {
  const std::size_t n = g.degree();
  if (seed.empty()) throw NotInvariant("empty partition");
  const std::size_t k = seed.front().size();
  std::vector<std::size_t> cell_of(n, seed.size());
  for (std::size_t c = 0; c < seed.size(); ++c) {
    if (seed[c].size() != k) throw NotInvariant("cells of unequal size");
    for (Point x : seed[c]) {
      if (x >= n || cell_of[x] != seed.size()) {
        throw NotInvariant("cells overlap or leave the point range");
      }
      cell_of[x] = c;
    }
  }
  if (seed.size() * k != n) throw NotInvariant("cells do not cover all points");
  for (const auto& gen : g.generators()) {
    for (const auto& cell : seed) {
      const std::size_t target = cell_of[gen(cell.front())];
      for (Point x : cell) {
        if (cell_of[gen(x)] != target) {
          throw NotInvariant("a generator splits a cell");
        }
      }
    }
  }
  return {seed.size(), k};
}

namespace {

class IntertwinerSearch {
 public:
  IntertwinerSearch(std::span<const Permutation> lhs,
                    std::span<const Permutation> rhs)
      : lhs_(lhs), rhs_(rhs), n_(lhs.front().degree()),
        phi_(n_, kUnset), used_(n_, false) {
    for (const auto& cell : orbits(PermGroup(std::vector<Permutation>(lhs.begin(), lhs.end())))) {
      reps_.push_back(cell.front());
    }
  }

  std::optional<Permutation> run() {
    if (!search(0)) return std::nullopt;
    return Permutation(phi_);
  }

 private:
  static constexpr Point kUnset = ~Point{0};

  bool search(std::size_t orbit) {
    if (orbit == reps_.size()) return true;
    for (Point y = 0; y < n_; ++y) {
      if (used_[y]) continue;
      std::vector<Point> assigned;
      if (propagate(reps_[orbit], y, assigned) && search(orbit + 1)) {
        return true;
      }
      for (Point x : assigned) {
        used_[phi_[x]] = false;
        phi_[x] = kUnset;
      }
    }
    return false;
  }

  bool propagate(Point root, Point image, std::vector<Point>& assigned) {
    phi_[root] = image;
    used_[image] = true;
    assigned.push_back(root);
    for (std::size_t i = 0; i < assigned.size(); ++i) {
      const Point x = assigned[i];
      for (std::size_t g = 0; g < lhs_.size(); ++g) {
        const Point x2 = lhs_[g](x);
        const Point y2 = rhs_[g](phi_[x]);
        if (phi_[x2] == kUnset) {
          if (used_[y2]) return false;
          phi_[x2] = y2;
          used_[y2] = true;
          assigned.push_back(x2);
        } else if (phi_[x2] != y2) {
          return false;
        }
      }
    }
    return true;
  }

  std::span<const Permutation> lhs_;
  std::span<const Permutation> rhs_;
  std::size_t n_;
  std::vector<Point> phi_;
  std::vector<bool> used_;
  std::vector<Point> reps_;
};

}  // namespace

std::optional<Permutation> find_intertwiner(std::span<const Permutation> lhs,
                                            std::span<const Permutation> rhs) {
  if (lhs.size() != rhs.size()) return std::nullopt;
  if (lhs.empty()) return std::nullopt;
  const std::size_t n = lhs.front().degree();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i].degree() != n || rhs[i].degree() != n) return std::nullopt;
  }
  if (n == 0) return Permutation(std::size_t{0});
  return IntertwinerSearch(lhs, rhs).run();
}

std::optional<Permutation> find_intertwiner(const PermutationRep& lhs,
                                            const PermutationRep& rhs) {
  const Permutation l[] = {lhs.a, lhs.b};
  const Permutation r[] = {rhs.a, rhs.b};
  return find_intertwiner(std::span<const Permutation>(l),
                          std::span<const Permutation>(r));
}

}  // namespace toromaps
