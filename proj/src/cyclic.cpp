#include "cayley/cyclic.hpp"

#include <stdexcept>

namespace cayley {

namespace detail {

int power_idx(int ai, std::int64_t n, const Group& g) {
  int cur = 0;
  for (std::int64_t k = 0; k < n; ++k)
    cur = g.op_idx(ai, cur);
  return cur;
}

std::int64_t ord_idx(int ai, const Group& g) {
  int cur = ai;
  std::int64_t n = 1;
  while (cur != 0) {
    if (n > g.order())
      throw std::logic_error("ord: no power reaches the identity");
    cur = g.op_idx(ai, cur);
    ++n;
  }
  return n;
}

} // namespace detail

Elem power(const Elem& a, std::int64_t n, const Group& g) {
  if (n < 0)
    throw std::invalid_argument("power: exponent must be non-negative");
  return g.element(detail::power_idx(g.index_in(a), n, g));
}

std::int64_t ord(const Elem& a, const Group& g) { return detail::ord_idx(g.index_in(a), g); }

std::vector<Elem> powers(const Elem& a, const Group& g) {
  const int ai = g.index_in(a);
  const std::int64_t k = detail::ord_idx(ai, g);
  std::vector<Elem> out;
  out.reserve(k);
  int cur = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    out.push_back(g.element(cur));
    cur = g.op_idx(ai, cur);
  }
  return out;
}

Group cyclic(const Elem& a, const Group& g) { return make_subgroup(powers(a, g), g); }

std::optional<Elem> elt_of_ord(std::int64_t n, const Group& g) {
  if (n < 1)
    throw std::invalid_argument("elt_of_ord: order must be positive");
  for (int i = 0; i < g.order(); ++i)
    if (detail::ord_idx(i, g) == n)
      return g.element(i);
  return std::nullopt;
}

} // namespace cayley
