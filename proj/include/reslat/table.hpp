#ifndef RESLAT_TABLE_HPP
#define RESLAT_TABLE_HPP

#include <cstdint>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

/// Elements of a finite carrier are plain indices in [0, n).
using ElementId = int;

/// Total n x n binary operation over element indices.
/// Entry (r, c) is the value of (row element) op (column element).
class BinOpTable {
 public:
  BinOpTable() = default;
  explicit BinOpTable(int n, ElementId fill = 0)
      : n_(n), entries_(static_cast<size_t>(n) * n, fill) {}

  static BinOpTable from_rows(const std::vector<std::vector<ElementId>>& rows) {
    const int n = static_cast<int>(rows.size());
    BinOpTable t(n);
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n)
        throw StructuralError("table row has wrong length");
      for (int c = 0; c < n; ++c) {
        if (rows[r][c] < 0 || rows[r][c] >= n)
          throw StructuralError("table entry out of range");
        t.at(r, c) = rows[r][c];
      }
    }
    return t;
  }

  int size() const { return n_; }
  ElementId operator()(int r, int c) const {
    return entries_[static_cast<size_t>(r) * n_ + c];
  }
  ElementId& at(int r, int c) {
    return entries_[static_cast<size_t>(r) * n_ + c];
  }
  const std::vector<ElementId>& entries() const { return entries_; }

  bool operator==(const BinOpTable&) const = default;

 private:
  int n_ = 0;
  std::vector<ElementId> entries_;
};

/// Total unary operation, one image per element.
using UnaryTable = std::vector<ElementId>;

/// The order derived from the join table: a <= b iff a v b = b.
class InducedOrder {
 public:
  InducedOrder() = default;
  explicit InducedOrder(const BinOpTable& join) : n_(join.size()) {
    leq_.resize(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        leq_[static_cast<size_t>(a) * n_ + b] = (join(a, b) == b) ? 1 : 0;
  }

  int size() const { return n_; }
  bool leq(int a, int b) const {
    return leq_[static_cast<size_t>(a) * n_ + b] != 0;
  }

  bool operator==(const InducedOrder&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
};

}  // namespace reslat

#endif
