#pragma once

#include "cayley/cosets.hpp"

namespace cayley {

/// The subgroup of elements commuting with a, in g's element order.
Group centralizer(const Elem& a, const Group& g);

/// The subgroup of elements commuting with everything in g.
Group center(const Group& g);

/// All conjugates of x, ordered by index in g, duplicate-free.
std::vector<Elem> conjs(const Elem& x, const Group& g);

/// First c (in element order) with conj(x, c) = y. Throws not_conjugate_error
/// when y is not a conjugate of x.
Elem conjer(const Elem& y, const Elem& x, const Group& g);

/// Mutually inverse maps between the conjugates of x and the cosets of its
/// centralizer.
Coset conj2coset(const Elem& y, const Elem& x, const Group& g);
Elem coset2conj(const Coset& c, const Elem& x, const Group& g);

/// The nontrivial conjugacy classes (size >= 2), each index-ordered; a class
/// appears at the position of its last member in g's element order.
std::vector<std::vector<Elem>> conjs_list(const Group& g);

/// |center| + sum of nontrivial class sizes = order, with the concatenation
/// duplicate-free and covering g.
bool check_class_equation(const Group& g);

/// First non-central element whose centralizer order is divisible by p.
std::optional<Elem> find_elt(const Group& g, std::int64_t p);

/// The first element of order exactly p, for a prime p dividing order(g).
/// Existence is Cauchy's theorem; the scan never fails on a valid group.
Elem cauchy_witness(const Group& g, std::int64_t p);

/// The inductive route to a Cauchy witness, recorded step by step: descend
/// into a centralizer while a suitable non-central element exists, fall back
/// to the center via the class equation, and in the abelian case either split
/// off a power directly or pass through a quotient and lift the result.
struct CauchyTrace {
  std::vector<std::string> steps;
  Elem witness;
};

CauchyTrace cauchy_trace(const Group& g, std::int64_t p);

} // namespace cayley
