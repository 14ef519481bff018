#pragma once

#include "cayley/group.hpp"

namespace cayley {

/// A left coset: members ordered by their index in the parent group,
/// duplicate-free, of length order(h). Doubles as a quotient-group element.
using Coset = std::vector<Elem>;

/// Throws subgroup_error unless h is a subgroup of g (sublist + agreeing op).
void require_subgroup(const Group& h, const Group& g);

/// The products op(x, y, g) for y in h, ordered by index in g.
Coset lcoset(const Elem& x, const Group& h, const Group& g);

/// One coset per equivalence class; pairwise disjoint; union covers g.
/// A class appears at the position of its last member in g's element order,
/// matching the classic recursive construction (and the tables it prints).
std::vector<Coset> lcosets(const Group& h, const Group& g);

/// Number of left cosets of h in g.
int subgroup_index(const Group& h, const Group& g);

/// Concatenation of the cosets, order preserved.
std::vector<Elem> append_cosets(std::span<const Coset> cs);

/// order(h) * subgroup_index(h, g) == order(g), as an executable check.
bool check_lagrange(const Group& h, const Group& g);

namespace detail {
/// Coset of the element with parent index xi, as ascending parent indices.
std::vector<std::int32_t> lcoset_indices(int xi, std::span<const std::int32_t> h_members,
                                         const Group& g);
/// g-indices of h's elements, in h's element order. Assumes h <= g.
std::vector<std::int32_t> member_indices(const Group& h, const Group& g);
} // namespace detail

} // namespace cayley
