#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toromaps/permutation.hpp"
#include "toromaps/presentation.hpp"
#include "toromaps/word.hpp"

namespace toromaps {

inline constexpr std::size_t kDefaultMaxCosets = 1000000;

/// Column order of a coset table: a, a^-1, b, b^-1.
inline constexpr int column_of(Letter x) noexcept {
  return 2 * ((x > 0 ? x : -x) - 1) + (x < 0 ? 1 : 0);
}
inline constexpr int inverse_column(int col) noexcept { return col ^ 1; }

/// Complete action of a, a^-1, b, b^-1 on the right cosets of a subgroup.
/// Cosets are numbered 0..size()-1 in breadth-first order from coset 0,
/// which is the subgroup itself.
class CosetTable {
 public:
  using Row = std::array<std::uint32_t, 4>;

  CosetTable() = default;
  explicit CosetTable(std::vector<Row> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  std::uint32_t act(std::uint32_t coset, int column) const {
    return rows_[coset][static_cast<std::size_t>(column)];
  }
  std::span<const Row> rows() const noexcept { return rows_; }

  /// Coset reached from `coset` by reading w left to right.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::vector<Row> rows_;
};

/// Index of <subgens> in the group of `pres`, as a complete coset table.
/// Throws CapacityExceeded once more than max_cosets cosets are live.
CosetTable enumerate(const Presentation& pres, std::span<const Word> subgens,
                     std::size_t max_cosets = kDefaultMaxCosets);

PermutationRep to_permutation_rep(const CosetTable& table);

/// True iff the coset action is faithful, i.e. its image has order order_G.
bool core_is_trivial(const CosetTable& table, std::uint64_t order_G);

}  // namespace toromaps
