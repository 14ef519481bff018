#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cayley/elem.hpp"

namespace cayley {

/// A candidate group: a square matrix of elements whose first row is the
/// element list. Entries of an unvalidated table may lie outside that list.
class RawTable {
public:
  explicit RawTable(std::vector<std::vector<Elem>> rows);

  /// The row-by-row construction: row i holds op(elements[i], elements[j]).
  static RawTable from_op(std::span<const Elem> elements,
                          const std::function<Elem(const Elem&, const Elem&)>& op);

  int order() const { return n_; }
  std::span<const Elem> elements() const { return row(0); }
  std::span<const Elem> row(int i) const { return {cells_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }
  const Elem& entry(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const RawTable& a, const RawTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

private:
  RawTable(int n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {}

  int n_;
  std::vector<Elem> cells_; // row-major, n_ x n_
};

} // namespace cayley
