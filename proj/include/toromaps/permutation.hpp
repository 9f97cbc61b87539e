#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toromaps/word.hpp"

namespace toromaps {

using Point = std::uint32_t;

/// Bijection of {0..n-1}. Text I/O uses 1-based cycle notation, e.g.
/// "(1,2,4,3)(5,6)"; the identity prints as "()".
///
/// Composition follows the right-action convention: (p * q) first applies
/// p, then q, so image(p * q, x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  /// Parses cycle notation. The degree is max(degree, largest point).
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation pow(long k) const;
  std::uint64_t order() const;
  bool is_identity() const noexcept;
  std::size_t moved_point_count() const noexcept;

  /// Cycles sorted by smallest moved point, fixed points omitted.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Images of the generators a and b in a permutation action.
struct PermutationRep {
  Permutation a;
  Permutation b;

  std::size_t degree() const noexcept { return a.degree(); }
  /// Image of a word under the action.
  Permutation evaluate(const Word& w) const;
  std::string to_string() const;

  friend bool operator==(const PermutationRep&, const PermutationRep&) = default;
};

/// Cells are sorted, and sorted by their smallest point.
using Partition = std::vector<std::vector<Point>>;

class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Permutation group given by generators. Order and element enumeration use
/// breadth-first closure.
class PermGroup {
 public:
  static constexpr std::size_t kMaxDegree = 100000;
  static constexpr std::size_t kMaxOrder = 1000000;

  /// All generators must share one degree; an empty list needs `degree`.
  explicit PermGroup(std::vector<Permutation> generators,
                     std::size_t degree = 0);
  explicit PermGroup(const PermutationRep& rep);
  PermGroup(std::initializer_list<Permutation> generators)
      : PermGroup(std::vector<Permutation>(generators)) {}

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Permutation> generators() const noexcept {
    return generators_;
  }

  /// Elements in breadth-first order from the identity. Throws
  /// CapacityExceeded past max_order elements or past kMaxDegree points.
  std::vector<Permutation> elements(std::size_t max_order = kMaxOrder) const;

 private:
  std::vector<Permutation> generators_;
  std::size_t degree_ = 0;
};

std::uint64_t group_order(const PermGroup& g,
                          std::size_t max_order = PermGroup::kMaxOrder);
Partition orbits(const PermGroup& g);
bool is_transitive(const PermGroup& g);

struct BlockShape {
  std::size_t blocks = 0;      // m
  std::size_t block_size = 0;  // k
};

class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape of a G-invariant partition with equal cells. Throws NotInvariant if
/// some generator does not map cells onto cells, or if cells differ in size
/// or fail to cover the points.
BlockShape minimal_block_system_sizes(const PermGroup& g,
                                      const Partition& seed);

/// A bijection phi of points with phi(x^g) = phi(x)^h for each generator
/// pair (g, h), found by backtracking over images of orbit representatives.
std::optional<Permutation> find_intertwiner(std::span<const Permutation> lhs,
                                            std::span<const Permutation> rhs);
std::optional<Permutation> find_intertwiner(const PermutationRep& lhs,
                                            const PermutationRep& rhs);

}  // namespace toromaps
