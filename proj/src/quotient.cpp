#include "cayley/quotient.hpp"

#include <algorithm>

namespace cayley {

Elem conj(const Elem& x, const Elem& y, const Group& g) {
  const int xi = g.index_in(x);
  const int yi = g.index_in(y);
  return g.element(g.op_idx(g.op_idx(g.inv_idx(yi), xi), yi));
}

std::optional<std::pair<Elem, Elem>> check_normal(const Group& h, const Group& g, Exec exec) {
  require_subgroup(h, g);
  const auto h_members = detail::member_indices(h, g);
  std::vector<bool> in_h(g.order(), false);
  for (std::int32_t m : h_members)
    in_h[m] = true;
  if (auto cex = scan::normal_cex(g.index_table(), g.inverse_indices(), h_members, in_h, exec))
    return std::pair{h.element(cex->first), g.element(cex->second)};
  return std::nullopt;
}

bool is_normal(const Group& h, const Group& g) { return !check_normal(h, g).has_value(); }

RawTable quotient_table(const Group& g, const Group& h) {
  const int n = g.order();
  std::vector<Coset> cosets = lcosets(h, g);

  // identity coset (the one containing elements[0]) moves to the front
  const auto is_identity_coset = [&](const Coset& c) { return c.front() == g.identity(); };
  auto qe = std::find_if(cosets.begin(), cosets.end(), is_identity_coset);
  std::rotate(cosets.begin(), qe, qe + 1);

  std::vector<Elem> qlist;
  qlist.reserve(cosets.size());
  for (Coset& c : cosets)
    qlist.push_back(Elem(std::move(c)));

  // coset position of each g-element, for O(1) representative products
  std::vector<int> coset_of(n, -1);
  for (std::size_t ci = 0; ci < qlist.size(); ++ci)
    for (const Elem& m : qlist[ci].as_seq())
      coset_of[g.index_in(m)] = static_cast<int>(ci);

  std::vector<std::vector<Elem>> rows;
  rows.reserve(qlist.size());
  for (const Elem& x : qlist) {
    const int xr = g.index_in(x.as_seq().front());
    std::vector<Elem> row;
    row.reserve(qlist.size());
    for (const Elem& y : qlist) {
      const int yr = g.index_in(y.as_seq().front());
      row.push_back(qlist[coset_of[g.op_idx(xr, yr)]]);
    }
    rows.push_back(std::move(row));
  }

  return RawTable(std::move(rows));
}

Group quotient_group(const Group& g, const Group& h) {
  if (auto cex = check_normal(h, g))
    throw not_normal_error("quotient: subgroup is not normal: conj(" + cex->first.str() +
                           ", " + cex->second.str() + ") = " +
                           conj(cex->first, cex->second, g).str() + " leaves the subgroup");
  return Group::validate(quotient_table(g, h));
}

} // namespace cayley

