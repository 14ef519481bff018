#pragma once

#include <functional>
#include <string>

#include "cayley/group.hpp"

namespace cayley {

/// A parametrized group family: element lister, operation, optional inverse,
/// and a guard on the parameter. Building a family instance checks the seven
/// obligations (non-empty, duplicate-free, non-nil elements; identity,
/// closure, associativity, inverse) before producing a validated Group.
struct FamilySpec {
  std::string name;
  std::function<bool(std::int64_t)> guard;
  std::function<std::vector<Elem>(std::int64_t)> elements;
  std::function<Elem(const Elem&, const Elem&, std::int64_t)> op;
  std::function<Elem(const Elem&, std::int64_t)> inv; // may be empty
};

struct FamilyOptions {
  int max_n = 6;          // resource gate for sym/alt
  bool full_assoc = false; // opt into the O(order^3) scan for large tables
  Exec exec = Exec::Auto;
};

/// Tables at or below this order always get the associativity scan; larger
/// ones (sym(6)) require FamilyOptions::full_assoc.
inline constexpr int kAssocScanMaxOrder = 360;

Group build_family(const FamilySpec& spec, std::int64_t param, const FamilyOptions& opts = {});

/// Materializes the table with no guard and no validation.
RawTable build_light(const FamilySpec& spec, std::int64_t param);

// concrete families

/// Additive group of integers mod n, n >= 1.
Group zadd(std::int64_t n);
/// Multiplicative group of integers relatively prime to n, n >= 2.
Group zmul(std::int64_t n);
/// Symmetric group on n points, n >= 1.
Group sym(int n, const FamilyOptions& opts = {});
/// Alternating group: the even permutations of sym(n).
Group alt(int n, const FamilyOptions& opts = {});

FamilySpec zadd_spec();
FamilySpec zmul_spec();
FamilySpec sym_spec();
FamilySpec alt_spec();

// permutation machinery

/// (0 1 ... n-1)
std::vector<std::int64_t> ninit(int n);
std::vector<Elem> ninit_elems(int n);
Elem identity_perm(int n);

/// All rearrangements of l, in lexicographic order of index tuples.
std::vector<Elem> perms(std::span<const Elem> l);

/// Composition: result[i] = p[r[i]] (apply r first, then p).
Elem comp_perm(const Elem& p, const Elem& r, int n);

/// result[i] = position of i in p; the compositional inverse.
Elem inv_perm(const Elem& p, int n);

/// Disjoint cycles of length >= 2, each starting at its smallest member,
/// ordered by smallest member; fixed points omitted.
std::vector<std::vector<std::int64_t>> cyc(const Elem& p);

/// Parity from the cycle shape: even iff the transposition count is even.
bool is_even_perm(const Elem& p);

} // namespace cayley
