#include <doctest.h>

#include "cayley/checks.hpp"
#include "cayley/cyclic.hpp"
#include "cayley/group.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cayley;
using namespace testhelp;

namespace {

bool report_has(const CheckReport& r, const std::string& predicate) {
  for (const auto& f : r.failures)
    if (f.predicate == predicate)
      return true;
  return false;
}

} // namespace

TEST_CASE("check_closed") {
  CHECK_FALSE(check_closed(build_light(zmul_spec(), 15)).has_value());
  CHECK_FALSE(check_closed(zadd(6).table()).has_value());

  const RawTable bad = int_table({{0, 1}, {1, 2}});
  const auto cex = check_closed(bad);
  REQUIRE(cex.has_value());
  CHECK(cex->first == Elem(1));
  CHECK(cex->second == Elem(1));
  CHECK(oracle::replay_closedp_cex(bad, cex->first, cex->second));
}

TEST_CASE("check_assoc") {
  CHECK_FALSE(check_assoc(build_light(zmul_spec(), 15)).has_value());
  CHECK_FALSE(check_assoc(int_table({{0}})).has_value());

  const RawTable bad = int_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
  // oracle: first violating triple in row-major element order
  std::optional<std::array<Elem, 3>> expected;
  const auto elems = bad.elements();
  for (int i = 0; i < 3 && !expected; ++i)
    for (int j = 0; j < 3 && !expected; ++j)
      for (int k = 0; k < 3 && !expected; ++k)
        if (oracle::replay_assocp_cex(bad, elems[i], elems[j], elems[k]))
          expected = std::array{elems[i], elems[j], elems[k]};
  REQUIRE(expected.has_value());
  CHECK((*expected)[0] == Elem(1));
  CHECK((*expected)[1] == Elem(1));
  CHECK((*expected)[2] == Elem(2));

  const auto cex = check_assoc(bad);
  REQUIRE(cex.has_value());
  CHECK(*cex == *expected);

  CHECK_THROWS_AS(check_assoc(int_table({{0, 1}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("check_inverses") {
  CHECK_FALSE(check_inverses(build_light(zmul_spec(), 15)).has_value());
  CHECK_FALSE(check_inverses(int_table({{0}})).has_value());

  const RawTable bad = int_table({{0, 1}, {1, 1}});
  const auto cex = check_inverses(bad);
  REQUIRE(cex.has_value());
  CHECK(*cex == Elem(1));
  CHECK(oracle::replay_inversesp_cex(bad, *cex));
}

TEST_CASE("check_group") {
  CHECK(check_group(build_light(zmul_spec(), 15)).passed());
  CHECK(check_group(build_light(sym_spec(), 3)).passed());

  const RawTable dup = int_table({{0, 0}, {0, 0}});
  const auto r = check_group(dup);
  CHECK_FALSE(r.passed());
  CHECK(report_has(r, "dlistp"));
  CHECK(oracle::replay_dlistp_cex(dup, r.failures.front().counterexample.front()));
}

TEST_CASE("check_group reports all failures, not just the first") {
  // closed, but 2 has no left inverse and associativity breaks
  const RawTable bad = int_table({{0, 1, 2}, {1, 2, 2}, {2, 1, 1}});
  const auto p = oracle::predicates(bad);
  REQUIRE(p.closedp);
  REQUIRE_FALSE(p.assocp);
  REQUIRE_FALSE(p.inversesp);

  const auto r = check_group(bad);
  CHECK_FALSE(r.passed());
  CHECK(report_has(r, "assocp"));
  CHECK(report_has(r, "inversesp"));
  for (const auto& f : r.failures) {
    if (f.predicate == "assocp")
      CHECK(oracle::replay_assocp_cex(bad, f.counterexample[0], f.counterexample[1],
                                      f.counterexample[2]));
    if (f.predicate == "inversesp")
      CHECK(oracle::replay_inversesp_cex(bad, f.counterexample[0]));
  }
}

TEST_CASE("group accessors and operation") {
  const Group z15 = zmul(15);
  CHECK(z15.order() == 8);
  CHECK(z15.identity() == Elem(1));
  CHECK(z15.op(Elem(7), Elem(8)) == Elem(11));
  CHECK(z15.inv(Elem(7)) == Elem(13));
  CHECK(z15.inv(z15.identity()) == z15.identity());

  const Group s3 = sym(3);
  CHECK(s3.identity() == seq_elem({0, 1, 2}));
  CHECK(s3.op(seq_elem({0, 2, 1}), seq_elem({1, 0, 2})) == seq_elem({2, 0, 1}));
  CHECK(s3.inv(seq_elem({1, 2, 0})) == seq_elem({2, 0, 1}));

  CHECK(zadd(1).identity() == Elem(0));

  CHECK_THROWS_AS(z15.op(Elem(3), Elem(1)), membership_error);
  CHECK_THROWS_AS(z15.op(Elem(1), Elem(3)), membership_error);
  CHECK_THROWS_AS(z15.inv(Elem(5)), membership_error);
  CHECK_THROWS_AS(z15.index_in(Elem(0)), membership_error);
}

TEST_CASE("group axioms hold on groups up to order 24") {
  std::vector<Group> corpus;
  for (int n = 1; n <= 8; ++n)
    corpus.push_back(zadd(n));
  corpus.push_back(zadd(24));
  for (int n : {5, 8, 12, 15, 24})
    corpus.push_back(zmul(n));
  for (int n = 1; n <= 4; ++n)
    corpus.push_back(sym(n));
  corpus.push_back(alt(4));

  for (const Group& g : corpus) {
    const Elem& e = g.identity();
    for (const Elem& x : g.elements()) {
      CHECK(g.op(e, x) == x);
      CHECK(g.op(g.inv(x), x) == e);
      CHECK(g.op(x, g.inv(x)) == e);
      for (const Elem& y : g.elements())
        CHECK(g.contains(g.op(x, y)));
    }
    // cancellation by exhaustion
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j)
        for (int k = j + 1; k < g.order(); ++k)
          CHECK(g.op_idx(i, j) != g.op_idx(i, k));
  }
}

TEST_CASE("check_subgroup") {
  const Group z15 = zmul(15);
  std::vector<Elem> l{Elem(1), Elem(4), Elem(7), Elem(13)};
  const Group h = make_subgroup(l, z15);
  CHECK_FALSE(check_subgroup(h, z15).has_value());
  CHECK_FALSE(check_subgroup(z15, z15).has_value());

  // same elements, different operation: zadd(3) inside zadd(6)
  const auto cex = check_subgroup(zadd(3), zadd(6));
  REQUIRE(cex.has_value());
  CHECK(cex->first == Elem(1));
  CHECK(cex->second == Elem(2));
  CHECK(zadd(3).op(cex->first, cex->second) != zadd(6).op(cex->first, cex->second));

  CHECK_THROWS_AS(check_subgroup(zadd(8), zadd(6)), not_sublist_error);
}

TEST_CASE("subgroup identity and inverses agree with the parent") {
  const Group s4 = sym(4);
  const Group a4 = alt(4);
  CHECK_FALSE(check_subgroup(a4, s4).has_value());
  CHECK(a4.identity() == s4.identity());
  for (const Elem& x : a4.elements())
    CHECK(a4.inv(x) == s4.inv(x));

  const Group z15 = zmul(15);
  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);
  CHECK(h.identity() == z15.identity());
  for (const Elem& x : h.elements())
    CHECK(h.inv(x) == z15.inv(x));
}

TEST_CASE("make_subgroup") {
  const Group z15 = zmul(15);

  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);
  CHECK(tables_match(h.table(), kGoldenSubgroupZmul15));

  const Group trivial = make_subgroup(std::vector<Elem>{z15.identity()}, z15);
  CHECK(trivial.order() == 1);

  CHECK_THROWS_AS(make_subgroup(std::vector<Elem>{Elem(1), Elem(2)}, z15), not_closed_error);
  CHECK_THROWS_AS(make_subgroup(std::vector<Elem>{Elem(4), Elem(1), Elem(7), Elem(13)}, z15),
                  identity_not_first_error);
  CHECK_THROWS_AS(make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(4)}, z15),
                  subgroup_error);
  CHECK_THROWS_AS(make_subgroup(std::vector<Elem>{Elem(1), Elem(3)}, z15), membership_error);
  CHECK_THROWS_AS(make_subgroup(std::vector<Elem>{}, z15), subgroup_error);
}

TEST_CASE("check_abelian") {
  CHECK_FALSE(check_abelian(zadd(6)).has_value());
  CHECK_FALSE(check_abelian(zmul(15)).has_value());

  const auto cex = check_abelian(sym(3));
  REQUIRE(cex.has_value());
  CHECK(cex->first == seq_elem({0, 2, 1}));
  CHECK(cex->second == seq_elem({1, 0, 2}));
  const Group s3 = sym(3);
  CHECK(s3.op(cex->first, cex->second) != s3.op(cex->second, cex->first));
}

TEST_CASE("validation options gate the associativity scan") {
  // a closed, inverse-bearing table that is not associative
  const RawTable bad = int_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
  REQUIRE_FALSE(check_group(bad).passed());
  const Group g = Group::validate(RawTable(bad), {.assoc = false});
  CHECK(g.order() == 3); // admitted when the scan is explicitly waived
}
