#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayley/cosets.hpp"
#include "cayley/cyclic.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cayley;
using namespace testhelp;

namespace {

Coset coset_of_ints(std::initializer_list<std::int64_t> vs) {
  Coset c;
  for (auto v : vs)
    c.emplace_back(v);
  return c;
}

// independent route: multiply in the raw table, then sort by scanning the
// element row for positions
Coset naive_lcoset(const Elem& x, const Group& h, const Group& g) {
  std::vector<std::pair<int, Elem>> products;
  for (const Elem& y : h.elements()) {
    const auto p = oracle::naive_op(g.table(), x, y);
    REQUIRE(p.has_value());
    products.emplace_back(*oracle::naive_index(*p, g.table().elements()), *p);
  }
  std::sort(products.begin(), products.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Coset out;
  for (auto& [i, e] : products)
    out.push_back(e);
  return out;
}

} // namespace

TEST_CASE("lcoset") {
  const Group z15 = zmul(15);
  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);

  // identity coset is a permutation of the subgroup, index-ordered
  const Coset e_coset = lcoset(z15.identity(), h, z15);
  CHECK(e_coset == coset_of_ints({1, 4, 7, 13}));

  const Coset two = lcoset(Elem(2), h, z15);
  CHECK(two == coset_of_ints({2, 8, 11, 14}));
  CHECK(two == naive_lcoset(Elem(2), h, z15));

  const Group z13 = zmul(13);
  CHECK(lcoset(Elem(2), cyclic(Elem(3), z13), z13) == coset_of_ints({2, 5, 6}));

  // cosets have the subgroup's size and distinct members
  for (const Elem& x : z15.elements()) {
    const Coset c = lcoset(x, h, z15);
    CHECK(static_cast<int>(c.size()) == h.order());
    CHECK(c == naive_lcoset(x, h, z15));
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      CHECK(*z15.index_of(c[i]) < *z15.index_of(c[i + 1]));
  }

  CHECK_THROWS_AS(lcoset(Elem(99), h, z15), membership_error);
  CHECK_THROWS_AS(lcoset(Elem(1), zadd(3), zadd(6)), subgroup_error);
}

TEST_CASE("lcosets partition the group") {
  const Group z13 = zmul(13);
  const Group h = cyclic(Elem(3), z13);
  const auto cs = lcosets(h, z13);
  REQUIRE(cs.size() == 4);

  // set of cosets
  const std::set<std::string> got{render_elems(cs[0]), render_elems(cs[1]),
                                  render_elems(cs[2]), render_elems(cs[3])};
  const std::set<std::string> want{"(1 3 9)", "(2 5 6)", "(4 10 12)", "(7 8 11)"};
  CHECK(got == want);

  // pinned traversal order: each class at its last member's position
  CHECK(cs[0] == coset_of_ints({2, 5, 6}));
  CHECK(cs[1] == coset_of_ints({1, 3, 9}));
  CHECK(cs[2] == coset_of_ints({7, 8, 11}));
  CHECK(cs[3] == coset_of_ints({4, 10, 12}));

  CHECK(lcosets(z13, z13).size() == 1);

  const Group trivial = make_subgroup(std::vector<Elem>{z13.identity()}, z13);
  const auto singletons = lcosets(trivial, z13);
  REQUIRE(static_cast<int>(singletons.size()) == z13.order());
  for (int i = 0; i < z13.order(); ++i)
    CHECK(singletons[i] == Coset{z13.element(i)});
}

TEST_CASE("subgroup_index") {
  const Group z15 = zmul(15);
  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);
  CHECK(subgroup_index(h, z15) == 2);
  CHECK(subgroup_index(z15, z15) == 1);
  const Group z13 = zmul(13);
  CHECK(subgroup_index(cyclic(Elem(3), z13), z13) == 4);
}

TEST_CASE("append_cosets") {
  CHECK(append_cosets(std::vector<Coset>{}).empty());

  const Group s4 = sym(4);
  const Group a4 = alt(4);
  const auto cs = lcosets(a4, s4);
  const auto appended = append_cosets(cs);
  CHECK(static_cast<int>(appended.size()) == a4.order() * subgroup_index(a4, s4));

  // duplicate-free and a permutation of the elements (both sublist directions)
  const auto map = scan::element_index_map(appended);
  CHECK(map.size() == appended.size());
  CHECK(appended.size() == static_cast<std::size_t>(s4.order()));
  for (const Elem& x : appended)
    CHECK(s4.contains(x));
  for (const Elem& x : s4.elements())
    CHECK(index_of(x, appended).has_value());
}

TEST_CASE("lagrange") {
  const Group z15 = zmul(15);
  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);
  CHECK(check_lagrange(h, z15)); // 4 * 2 = 8

  CHECK(check_lagrange(make_subgroup(std::vector<Elem>{z15.identity()}, z15), z15));
  CHECK(check_lagrange(alt(4), sym(4))); // 12 * 2 = 24
}

TEST_CASE("coset membership and equality laws") {
  std::vector<Group> corpus{zadd(6), zadd(12), zmul(15), sym(3), alt(4)};
  for (const Group& g : corpus) {
    for (const Elem& a : g.elements()) {
      const Group h = cyclic(a, g);
      std::vector<Coset> coset_of;
      for (const Elem& x : g.elements())
        coset_of.push_back(lcoset(x, h, g));
      for (int xi = 0; xi < g.order(); ++xi)
        for (int yi = 0; yi < g.order(); ++yi) {
          const Elem& x = g.element(xi);
          const Elem& y = g.element(yi);
          const bool member = index_of(y, coset_of[xi]).has_value();
          // member-lcoset-iff
          CHECK(member == h.contains(g.op(g.inv(x), y)));
          // equal-lcoset
          if (member)
            CHECK(coset_of[yi] == coset_of[xi]);
        }
    }
  }
}
