#pragma once

#include <string>
#include <vector>

#include "cayley/families.hpp"
#include "cayley/render.hpp"

namespace testhelp {

using namespace cayley;

inline RawTable int_table(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Elem>> out;
  for (const auto& r : rows) {
    std::vector<Elem> row;
    for (auto v : r)
      row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return RawTable(std::move(out));
}

inline bool tables_match(const RawTable& t, const std::string& golden) {
  return table_tokens(render_table(t)) == table_tokens(golden);
}

// Shared fixtures for groups that are expensive enough to build once.
inline const Group& sym5() {
  static const Group g = sym(5);
  return g;
}

inline const Group& alt5() {
  static const Group g = alt(5);
  return g;
}

// Z6 listed as (0 2 4 3 1 5): a valid table whose second element has order 3,
// which drives the quotient branch of the abelian descent.
inline Group reordered_z6() {
  const std::vector<std::int64_t> elems = {0, 2, 4, 3, 1, 5};
  std::vector<Elem> l;
  for (auto v : elems)
    l.emplace_back(v);
  return Group::validate(RawTable::from_op(
      l, [](const Elem& x, const Elem& y) { return Elem((x.as_int() + y.as_int()) % 6); }));
}

// golden tables, rendered in the classic nested-list layout

inline const char* kGoldenZmul15 = R"(((1 2 4 7 8 11 13 14)
 (2 4 8 14 1 7 11 13)
 (4 8 1 13 2 14 7 11)
 (7 14 13 4 11 2 1 8)
 (8 1 2 11 4 13 14 7)
 (11 7 14 2 13 1 8 4)
 (13 11 7 1 14 8 4 2)
 (14 13 11 8 7 4 2 1)))";

inline const char* kGoldenSubgroupZmul15 = R"(((1 4 7 13)
 (4 1 13 7)
 (7 13 4 1)
 (13 7 1 4)))";

inline const char* kGoldenSym3 = R"((((0 1 2) (0 2 1) (1 0 2) (1 2 0) (2 0 1) (2 1 0))
 ((0 2 1) (0 1 2) (2 0 1) (2 1 0) (1 0 2) (1 2 0))
 ((1 0 2) (1 2 0) (0 1 2) (0 2 1) (2 1 0) (2 0 1))
 ((1 2 0) (1 0 2) (2 1 0) (2 0 1) (0 1 2) (0 2 1))
 ((2 0 1) (2 1 0) (0 2 1) (0 1 2) (1 2 0) (1 0 2))
 ((2 1 0) (2 0 1) (1 2 0) (1 0 2) (0 2 1) (0 1 2))))";

inline const char* kGoldenAlt3 = R"((((0 1 2) (1 2 0) (2 0 1))
 ((1 2 0) (2 0 1) (0 1 2))
 ((2 0 1) (0 1 2) (1 2 0))))";

inline const char* kGoldenQuotientSym3 = R"(((((0 1 2) (1 2 0) (2 0 1)) ((0 2 1) (1 0 2) (2 1 0)))
 (((0 2 1) (1 0 2) (2 1 0)) ((0 1 2) (1 2 0) (2 0 1)))))";

inline const char* kGoldenQuotientZmul13 = R"((((1 3 9) (2 5 6) (7 8 11) (4 10 12))
 ((2 5 6) (4 10 12) (1 3 9) (7 8 11))
 ((7 8 11) (1 3 9) (4 10 12) (2 5 6))
 ((4 10 12) (7 8 11) (2 5 6) (1 3 9))))";

inline const char* kGoldenCyclicSym5 = R"((((0 1 2 3 4) (1 2 3 4 0) (2 3 4 0 1) (3 4 0 1 2) (4 0 1 2 3))
 ((1 2 3 4 0) (2 3 4 0 1) (3 4 0 1 2) (4 0 1 2 3) (0 1 2 3 4))
 ((2 3 4 0 1) (3 4 0 1 2) (4 0 1 2 3) (0 1 2 3 4) (1 2 3 4 0))
 ((3 4 0 1 2) (4 0 1 2 3) (0 1 2 3 4) (1 2 3 4 0) (2 3 4 0 1))
 ((4 0 1 2 3) (0 1 2 3 4) (1 2 3 4 0) (2 3 4 0 1) (3 4 0 1 2))))";

} // namespace testhelp
