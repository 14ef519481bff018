#include "cayley/cosets.hpp"

#include <algorithm>

namespace cayley {

void require_subgroup(const Group& h, const Group& g) {
  try {
    if (auto cex = check_subgroup(h, g))
      throw subgroup_error("not a subgroup: operations disagree on (" + cex->first.str() +
                           ", " + cex->second.str() + ")");
  } catch (const not_sublist_error& e) {
    throw subgroup_error(e.what());
  }
}

namespace detail {

std::vector<std::int32_t> member_indices(const Group& h, const Group& g) {
  std::vector<std::int32_t> out;
  out.reserve(h.order());
  for (const Elem& x : h.elements())
    out.push_back(static_cast<std::int32_t>(g.index_in(x)));
  return out;
}

std::vector<std::int32_t> lcoset_indices(int xi, std::span<const std::int32_t> h_members,
                                         const Group& g) {
  std::vector<std::int32_t> out;
  out.reserve(h_members.size());
  for (std::int32_t hm : h_members)
    out.push_back(static_cast<std::int32_t>(g.op_idx(xi, hm)));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

namespace {

Coset to_coset(std::span<const std::int32_t> indices, const Group& g) {
  Coset out;
  out.reserve(indices.size());
  for (std::int32_t i : indices)
    out.push_back(g.element(i));
  return out;
}

std::vector<std::vector<std::int32_t>> lcosets_indices(const Group& h, const Group& g) {
  const auto h_members = detail::member_indices(h, g);
  const int n = g.order();
  std::vector<bool> covered(n, false);
  std::vector<std::vector<std::int32_t>> found;
  // Traverse right to left: each coset is discovered at its last member and
  // prepended, which the final reverse realizes.
  for (int gi = n - 1; gi >= 0; --gi) {
    if (covered[gi])
      continue;
    auto coset = detail::lcoset_indices(gi, h_members, g);
    for (std::int32_t m : coset)
      covered[m] = true;
    found.push_back(std::move(coset));
  }
  std::reverse(found.begin(), found.end());
  return found;
}

} // namespace

Coset lcoset(const Elem& x, const Group& h, const Group& g) {
  require_subgroup(h, g);
  const int xi = g.index_in(x);
  return to_coset(detail::lcoset_indices(xi, detail::member_indices(h, g), g), g);
}

std::vector<Coset> lcosets(const Group& h, const Group& g) {
  require_subgroup(h, g);
  std::vector<Coset> out;
  for (const auto& coset : lcosets_indices(h, g))
    out.push_back(to_coset(coset, g));
  return out;
}

int subgroup_index(const Group& h, const Group& g) {
  require_subgroup(h, g);
  return static_cast<int>(lcosets_indices(h, g).size());
}

std::vector<Elem> append_cosets(std::span<const Coset> cs) {
  std::vector<Elem> out;
  for (const auto& c : cs)
    out.insert(out.end(), c.begin(), c.end());
  return out;
}

bool check_lagrange(const Group& h, const Group& g) {
  return static_cast<std::int64_t>(h.order()) * subgroup_index(h, g) == g.order();
}

} // namespace cayley
