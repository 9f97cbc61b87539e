#include "toromaps/todd_coxeter.hpp"

#include <algorithm>
#include <string>

namespace toromaps {

namespace {

using Columns = std::vector<int>;

Columns to_columns(const Word& w) {
  Columns out;
  out.reserve(w.length());
  for (Letter x : w.letters()) out.push_back(column_of(x));
  return out;
}

// HLT enumeration with eager coincidence processing. Rows of dead cosets are
// kept until compaction; `parent_` is a union-find forest whose roots are the
// live cosets.
class Enumerator {
 public:
  Enumerator(std::size_t max_cosets) : max_cosets_(max_cosets) {
    if (max_cosets_ < 1) throw std::invalid_argument("max_cosets must be >= 1");
    add_row();
  }

  CosetTable run(const Presentation& pres, std::span<const Word> subgens) {
    std::vector<Columns> relators;
    for (const Word& r : pres.relators) {
      if (!r.is_identity()) relators.push_back(to_columns(r));
    }
    for (const Word& w : subgens) {
      if (!w.is_identity()) scan_and_fill(0, to_columns(w));
    }
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      for (const Columns& r : relators) {
        if (!is_live(alpha)) break;
        scan_and_fill(static_cast<int>(alpha), r);
      }
      if (!is_live(alpha)) continue;
      for (int x = 0; x < 4; ++x) {
        if (table_[alpha][x] < 0) define(static_cast<int>(alpha), x);
      }
    }
    return compact();
  }

 private:
  using Row = std::array<int, 4>;

  void add_row() {
    if (live_ >= max_cosets_) {
      throw CapacityExceeded("coset enumeration exceeded " +
                             std::to_string(max_cosets_) + " cosets");
    }
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_;
  }

  bool is_live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  void define(int coset, int x) {
    add_row();
    const int d = static_cast<int>(table_.size()) - 1;
    table_[coset][x] = d;
    table_[d][inverse_column(x)] = coset;
  }

  void scan_and_fill(int alpha, const Columns& w) {
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) {
        f = table_[f][w[i]];
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inverse_column(w[j])] >= 0) {
        b = table_[b][inverse_column(w[j])];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inverse_column(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int k) {
    int root = k;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[k] != root) {
      const int next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int r1 = rep(k);
    const int r2 = rep(l);
    if (r1 == r2) return;
    const int lo = std::min(r1, r2);
    const int hi = std::max(r1, r2);
    parent_[hi] = lo;
    queue.push_back(hi);
    --live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int x = 0; x < 4; ++x) {
        const int f = table_[e][x];
        if (f < 0) continue;
        const int xi = inverse_column(x);
        if (table_[f][xi] == e) table_[f][xi] = -1;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][xi] >= 0) {
          merge(e1, table_[f1][xi], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][xi] = e1;
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<int> label(table_.size(), -1);
    std::vector<int> order{0};
    label[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < 4; ++x) {
        if (table_[order[i]][x] < 0) {
          throw std::logic_error("incomplete coset table after enumeration");
        }
        const int t = rep(table_[order[i]][x]);
        if (label[t] < 0) {
          label[t] = static_cast<int>(order.size());
          order.push_back(t);
        }
      }
    }
    std::vector<CosetTable::Row> rows(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < 4; ++x) {
        rows[i][x] = static_cast<std::uint32_t>(label[rep(table_[order[i]][x])]);
      }
    }
    return CosetTable(std::move(rows));
  }

  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::vector<Row> table_;
  std::vector<int> parent_;
};

}  // namespace

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (Letter x : w.letters()) coset = act(coset, column_of(x));
  return coset;
}

CosetTable enumerate(const Presentation& pres, std::span<const Word> subgens,
                     std::size_t max_cosets) {
  return Enumerator(max_cosets).run(pres, subgens);
}

PermutationRep to_permutation_rep(const CosetTable& table) {
  std::vector<Point> a(table.size());
  std::vector<Point> b(table.size());
  for (std::uint32_t c = 0; c < table.size(); ++c) {
    a[c] = table.act(c, 0);
    b[c] = table.act(c, 2);
  }
  return {Permutation(std::move(a)), Permutation(std::move(b))};
}

bool core_is_trivial(const CosetTable& table, std::uint64_t order_G) {
  const PermGroup image(to_permutation_rep(table));
  try {
    return group_order(image, static_cast<std::size_t>(order_G)) == order_G;
  } catch (const CapacityExceeded&) {
    return false;
  }
}

}  // namespace toromaps
