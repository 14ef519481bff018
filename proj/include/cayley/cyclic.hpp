#pragma once

#include "cayley/group.hpp"

namespace cayley {

/// a^n by iterated left multiplication; a^0 is the identity.
Elem power(const Elem& a, std::int64_t n, const Group& g);

/// Least n >= 1 with a^n = identity; at most order(g).
std::int64_t ord(const Elem& a, const Group& g);

/// (a^0, a^1, ..., a^(ord-1)); duplicate-free.
std::vector<Elem> powers(const Elem& a, const Group& g);

/// The cyclic subgroup generated by a: elements powers(a, g), operation
/// inherited from g.
Group cyclic(const Elem& a, const Group& g);

/// First element of g (in element order) of order n, if any.
std::optional<Elem> elt_of_ord(std::int64_t n, const Group& g);

namespace detail {
int power_idx(int ai, std::int64_t n, const Group& g);
std::int64_t ord_idx(int ai, const Group& g);
} // namespace detail

} // namespace cayley
