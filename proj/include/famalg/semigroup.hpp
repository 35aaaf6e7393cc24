#pragma once

#include <span>
#include <string>
#include <vector>

#include "famalg/error.hpp"

namespace famalg {

/// Finite commutative semigroup of indices, given by its Cayley table.
/// Construction goes through validate(), which rejects tables that are
/// not associative or not commutative.
class CommutativeSemigroup {
public:
  static CommutativeSemigroup validate(const std::vector<std::vector<int>>& table) {
    const int m = static_cast<int>(table.size());
    if (m <= 0) throw Error("SemanticError", "semigroup order must be positive");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(m) * m);
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != m)
        throw Error("SemanticError", "semigroup table is not square");
      for (int v : row) {
        if (v < 0 || v >= m)
          throw Error("IndexOutOfRange",
                      "table entry " + std::to_string(v) + " outside [0," + std::to_string(m) + ")");
        flat.push_back(v);
      }
    }
    CommutativeSemigroup s;
    s.order_ = m;
    s.table_ = std::move(flat);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (s.op(a, b) != s.op(b, a))
          throw Error("CommutativityViolation",
                      "table[" + std::to_string(a) + "][" + std::to_string(b) + "] != table[" +
                          std::to_string(b) + "][" + std::to_string(a) + "]");
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (s.op(s.op(a, b), c) != s.op(a, s.op(b, c)))
            throw Error("AssociativityViolation",
                        "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    return s;
  }

  /// The one-element semigroup; indexes all ordinary (non-family) products.
  static CommutativeSemigroup trivial() {
    CommutativeSemigroup s;
    s.order_ = 1;
    s.table_ = {0};
    return s;
  }

  int order() const { return order_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }

  /// Folds a nonempty word of elements through the table, left to right.
  int fold(std::span<const int> word) const {
    int acc = word[0];
    for (std::size_t i = 1; i < word.size(); ++i) acc = op(acc, word[i]);
    return acc;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b) out[a][b] = op(a, b);
    return out;
  }

  friend bool operator==(const CommutativeSemigroup& a, const CommutativeSemigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

private:
  CommutativeSemigroup() = default;
  int order_ = 1;
  std::vector<int> table_{0};
};

} // namespace famalg
