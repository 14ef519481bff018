#include <doctest.h>

#include "cayley/cyclic.hpp"
#include "cayley/quotient.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cayley;
using namespace testhelp;

TEST_CASE("conj") {
  const Group s3 = sym(3);
  for (const Elem& x : s3.elements())
    CHECK(conj(x, s3.identity(), s3) == x);

  CHECK(conj(seq_elem({0, 2, 1}), seq_elem({1, 2, 0}), s3) == seq_elem({1, 0, 2}));
  // independent route through the raw table
  const Elem y_inv = s3.inv(seq_elem({1, 2, 0}));
  const auto step = oracle::naive_op(s3.table(), y_inv, seq_elem({0, 2, 1}));
  REQUIRE(step.has_value());
  const auto full = oracle::naive_op(s3.table(), *step, seq_elem({1, 2, 0}));
  REQUIRE(full.has_value());
  CHECK(conj(seq_elem({0, 2, 1}), seq_elem({1, 2, 0}), s3) == *full);

  const Group z8 = zadd(8);
  for (const Elem& a : z8.elements())
    for (const Elem& y : z8.elements())
      CHECK(conj(a, y, z8) == a);

  // x and y commute exactly when the conjugate fixes x
  for (const Elem& x : s3.elements())
    for (const Elem& y : s3.elements())
      CHECK((conj(x, y, s3) == x) == (s3.op(x, y) == s3.op(y, x)));
}

TEST_CASE("check_normal") {
  const Group s3 = sym(3);
  CHECK_FALSE(check_normal(cyclic(seq_elem({1, 2, 0}), s3), s3).has_value());

  const Group h = cyclic(seq_elem({0, 2, 1}), s3);
  const auto cex = check_normal(h, s3);
  REQUIRE(cex.has_value());
  // first violation in (h-index, g-index) order; (1 0 2) precedes (1 2 0)
  CHECK(cex->first == seq_elem({0, 2, 1}));
  CHECK(cex->second == seq_elem({1, 0, 2}));
  CHECK_FALSE(h.contains(conj(cex->first, cex->second, s3)));
  // the spec's illustrative pair is also a genuine violation, just later in scan order
  CHECK_FALSE(h.contains(conj(seq_elem({0, 2, 1}), seq_elem({1, 2, 0}), s3)));

  CHECK(is_normal(alt5(), sym5()));
  CHECK_THROWS_AS(check_normal(zadd(3), zadd(6)), subgroup_error);
}

TEST_CASE("index-2 subgroups are normal") {
  CHECK(is_normal(alt(3), sym(3)));
  CHECK(is_normal(alt(4), sym(4)));
  CHECK(is_normal(cyclic(seq_elem({1, 2, 0}), sym(3)), sym(3)));
  const Group z15 = zmul(15);
  const Group h = make_subgroup(std::vector<Elem>{Elem(1), Elem(4), Elem(7), Elem(13)}, z15);
  CHECK(is_normal(h, z15));
}

TEST_CASE("quotient golden tables") {
  const Group s3 = sym(3);
  const Group q1 = quotient_group(s3, cyclic(seq_elem({1, 2, 0}), s3));
  CHECK(q1.order() == 2);
  CHECK(tables_match(q1.table(), kGoldenQuotientSym3));

  const Group z13 = zmul(13);
  const Group q2 = quotient_group(z13, cyclic(Elem(3), z13));
  CHECK(q2.order() == 4);
  CHECK(tables_match(q2.table(), kGoldenQuotientZmul13));

  // the printed product: (2 5 6) * (2 5 6) = (4 10 12)
  const Elem c256 = q2.element(1);
  REQUIRE(c256.as_seq().front() == Elem(2));
  const Elem sq = q2.op(c256, c256);
  CHECK(render_elems(sq.as_seq()) == "(4 10 12)");

  CHECK(quotient_group(s3, s3).order() == 1);
}

TEST_CASE("quotient errors") {
  const Group s3 = sym(3);
  CHECK_THROWS_AS(quotient_group(s3, cyclic(seq_elem({0, 2, 1}), s3)), not_normal_error);
  CHECK_THROWS_AS(quotient_group(zadd(6), zadd(3)), subgroup_error);
}

TEST_CASE("quotient structure is sound") {
  struct Case {
    Group g;
    Group h;
  };
  const Group s3 = sym(3);
  const Group z13 = zmul(13);
  const Group z12 = zadd(12);
  std::vector<Case> cases;
  cases.push_back({s3, cyclic(seq_elem({1, 2, 0}), s3)});
  cases.push_back({z13, cyclic(Elem(3), z13)});
  cases.push_back({z12, cyclic(Elem(4), z12)});
  cases.push_back({z12, make_subgroup(std::vector<Elem>{Elem(0)}, z12)});

  for (const auto& [g, h] : cases) {
    const Group q = quotient_group(g, h);
    CHECK(check_group(q.table()).passed());
    CHECK(q.order() == subgroup_index(h, g));

    // the identity of the quotient is the coset of the identity
    CHECK(q.identity() == Elem(lcoset(g.identity(), h, g)));

    // op-qop: for any representatives a in X, b in Y, a*b lands in X*Y,
    // and the coset of a*b is exactly X*Y (representative independence)
    for (const Elem& X : q.elements())
      for (const Elem& Y : q.elements()) {
        const Elem XY = q.op(X, Y);
        for (const Elem& a : X.as_seq())
          for (const Elem& b : Y.as_seq()) {
            const Elem ab = g.op(a, b);
            CHECK(index_of(ab, XY.as_seq()).has_value());
            CHECK(Elem(lcoset(ab, h, g)) == XY);
          }
      }

    // qinv: the quotient inverse is the coset of the representative inverse
    for (const Elem& X : q.elements())
      CHECK(q.inv(X) == Elem(lcoset(g.inv(X.as_seq().front()), h, g)));
  }
}

TEST_CASE("quotients of quotients nest") {
  const Group g = zadd(12);
  const Group q = quotient_group(g, cyclic(Elem(6), g)); // order 6, coset elements
  REQUIRE(q.order() == 6);

  const Group h2 = cyclic(q.element(3), q); // order of a coset element divides 6
  const Group q2 = quotient_group(q, h2);
  CHECK(check_group(q2.table()).passed());
  CHECK(q2.order() * h2.order() == q.order());

  // elements of q2 are sequences of sequences of integers
  const Elem& deep = q2.element(0);
  REQUIRE(deep.is_seq());
  REQUIRE(deep.as_seq().front().is_seq());
  CHECK(deep.as_seq().front().as_seq().front() == Elem(0));

  // structure is still fully exercisable at depth
  for (const Elem& X : q2.elements())
    CHECK(power(X, ord(X, q2), q2) == q2.identity());
}

TEST_CASE("quotient_table materializes without the normality gate") {
  const Group s3 = sym(3);
  const Group bad = cyclic(seq_elem({0, 2, 1}), s3);
  const RawTable t = quotient_table(s3, bad);
  CHECK(t.order() == 3);
  CHECK_FALSE(check_group(t).passed());
}
