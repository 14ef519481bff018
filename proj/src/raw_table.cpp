#include "cayley/raw_table.hpp"

#include <stdexcept>

namespace cayley {

RawTable::RawTable(std::vector<std::vector<Elem>> rows) : n_(static_cast<int>(rows.size())) {
  if (rows.empty())
    throw std::invalid_argument("RawTable: order must be positive");
  cells_.reserve(static_cast<std::size_t>(n_) * n_);
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != n_)
      throw std::invalid_argument("RawTable: matrix must be square");
    for (auto& e : r)
      cells_.push_back(std::move(e));
  }
}

RawTable RawTable::from_op(std::span<const Elem> elements,
                           const std::function<Elem(const Elem&, const Elem&)>& op) {
  if (elements.empty())
    throw std::invalid_argument("RawTable: order must be positive");
  const int n = static_cast<int>(elements.size());
  std::vector<Elem> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const Elem& x : elements)
    for (const Elem& y : elements)
      cells.push_back(op(x, y));
  return RawTable(n, std::move(cells));
}

} // namespace cayley
