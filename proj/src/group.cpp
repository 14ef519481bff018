#include "cayley/group.hpp"

namespace cayley {

struct Group::Impl {
  RawTable table;
  scan::ElemIndexMap map;
  scan::IndexTable idx;
  std::vector<std::int32_t> inv_idx;

  Impl(RawTable t, scan::ElemIndexMap m, scan::IndexTable i)
      : table(std::move(t)), map(std::move(m)), idx(std::move(i)) {
    const int n = table.order();
    inv_idx.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (idx.at(y, x) == 0) {
          inv_idx[x] = y;
          break;
        }
  }
};

Group Group::validate(RawTable t, const ValidationOptions& opts) {
  auto checks = detail::run_table_checks(t, opts);
  if (!checks.report.passed())
    throw group_invalid_error(std::move(checks.report));
  return Group(std::make_shared<const Impl>(std::move(t), std::move(checks.map),
                                            std::move(checks.idx)));
}

int Group::order() const { return impl_->table.order(); }

std::span<const Elem> Group::elements() const { return impl_->table.elements(); }

const Elem& Group::element(int i) const { return impl_->table.elements()[i]; }

const RawTable& Group::table() const { return impl_->table; }

std::optional<int> Group::index_of(const Elem& x) const {
  auto it = impl_->map.find(x);
  if (it == impl_->map.end())
    return std::nullopt;
  return it->second;
}

int Group::index_in(const Elem& x) const {
  auto i = index_of(x);
  if (!i)
    throw membership_error("element " + x.str() + " is not a group member");
  return *i;
}

const Elem& Group::op(const Elem& x, const Elem& y) const {
  return impl_->table.entry(index_in(x), index_in(y));
}

const Elem& Group::inv(const Elem& x) const { return element(inv_idx(index_in(x))); }

int Group::op_idx(int i, int j) const { return impl_->idx.at(i, j); }

int Group::inv_idx(int i) const { return impl_->inv_idx[i]; }

const scan::IndexTable& Group::index_table() const { return impl_->idx; }

std::span<const std::int32_t> Group::inverse_indices() const { return impl_->inv_idx; }

bool operator==(const Group& a, const Group& b) {
  return a.impl_ == b.impl_ || a.impl_->table == b.impl_->table;
}

std::optional<std::pair<Elem, Elem>> check_subgroup(const Group& h, const Group& g) {
  for (const Elem& x : h.elements())
    if (!g.contains(x))
      throw not_sublist_error("element " + x.str() + " of the candidate subgroup is not in the parent group");
  const int m = h.order();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Elem& in_h = h.table().entry(i, j);
      const Elem& in_g = g.op(h.element(i), h.element(j));
      if (!(in_h == in_g))
        return std::pair{h.element(i), h.element(j)};
    }
  return std::nullopt;
}

bool is_subgroup(const Group& h, const Group& g) {
  try {
    return !check_subgroup(h, g).has_value();
  } catch (const not_sublist_error&) {
    return false;
  }
}

Group make_subgroup(std::span<const Elem> l, const Group& g) {
  if (l.empty())
    throw subgroup_error("subgroup: element list is empty");
  auto map = scan::element_index_map(l);
  if (map.size() != l.size())
    throw subgroup_error("subgroup: element list has duplicates");
  for (const Elem& x : l)
    if (!g.contains(x))
      throw membership_error("subgroup: element " + x.str() + " is not in the parent group");
  if (!(l[0] == g.identity()))
    throw identity_not_first_error("subgroup: first element must be the identity " +
                                   g.identity().str() + ", got " + l[0].str());

  std::vector<std::vector<Elem>> rows;
  rows.reserve(l.size());
  for (const Elem& x : l) {
    std::vector<Elem> row;
    row.reserve(l.size());
    for (const Elem& y : l) {
      const Elem& p = g.op(x, y);
      auto it = map.find(p);
      if (it == map.end())
        throw not_closed_error("subgroup: not closed: " + x.str() + " * " + y.str() +
                               " = " + p.str() + " is outside the element list");
      row.push_back(l[it->second]); // canonical copy shares storage
    }
    rows.push_back(std::move(row));
  }

  Group h = Group::validate(RawTable(std::move(rows)));
  if (check_subgroup(h, g))
    throw subgroup_error("subgroup: operation disagrees with the parent group");
  return h;
}

std::optional<std::pair<Elem, Elem>> check_abelian(const Group& g, Exec exec) {
  if (auto cex = scan::abelian_cex(g.index_table(), exec))
    return std::pair{g.element(cex->first), g.element(cex->second)};
  return std::nullopt;
}

bool is_abelian(const Group& g) { return !check_abelian(g).has_value(); }

} // namespace cayley
