#pragma once

#include <memory>
#include <optional>

#include "cayley/checks.hpp"
#include "cayley/errors.hpp"

namespace cayley {

struct group_invalid_error : math_error {
  group_invalid_error(CheckReport r) : math_error(r.summary()), report(std::move(r)) {}
  CheckReport report;
};

/// A validated operation table. Immutable; copies share the underlying table,
/// the element index map, and the precomputed inverse column, so concurrent
/// reads are unrestricted.
class Group {
public:
  /// Validates per the options and throws group_invalid_error on failure.
  static Group validate(RawTable t, const ValidationOptions& opts = {});

  int order() const;
  std::span<const Elem> elements() const;
  const Elem& element(int i) const;
  const Elem& identity() const { return element(0); }
  const RawTable& table() const;

  bool contains(const Elem& x) const { return index_of(x).has_value(); }
  std::optional<int> index_of(const Elem& x) const;
  /// index_of for a known member; throws membership_error otherwise.
  int index_in(const Elem& x) const;

  const Elem& op(const Elem& x, const Elem& y) const;
  /// The member of least index whose left product with x is the identity.
  const Elem& inv(const Elem& x) const;

  int op_idx(int i, int j) const;
  int inv_idx(int i) const;

  const scan::IndexTable& index_table() const;
  std::span<const std::int32_t> inverse_indices() const;

  friend bool operator==(const Group& a, const Group& b);

private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Subgroup disagreement search: requires h's elements to be a sublist of g's
/// (throws not_sublist_error otherwise) and returns the first pair of
/// h-members on which the two operations disagree, if any.
std::optional<std::pair<Elem, Elem>> check_subgroup(const Group& h, const Group& g);

bool is_subgroup(const Group& h, const Group& g);

/// Builds the subgroup of g with the given element list, whose table entry
/// (i,j) is op(l[i], l[j], g). The list must start with g's identity and be
/// closed under g's operation.
Group make_subgroup(std::span<const Elem> l, const Group& g);

/// First pair of members that do not commute, in row-major index order.
std::optional<std::pair<Elem, Elem>> check_abelian(const Group& g, Exec exec = Exec::Auto);

bool is_abelian(const Group& g);

} // namespace cayley
