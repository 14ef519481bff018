#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/raw_table.hpp"
#include "cayley/scan.hpp"

namespace cayley {

struct CheckFailure {
  std::string predicate;          // groupp predicate name: dlistp, closedp, assocp, inversesp
  std::vector<Elem> counterexample;
};

/// Outcome of validating a candidate table. All evaluated predicates report
/// their failures, not just the first; a counterexample replayed against the
/// table violates its named predicate.
struct CheckReport {
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

struct ValidationOptions {
  bool closure = true;
  bool assoc = true;
  bool inverses = true;
  Exec exec = Exec::Auto;
};

/// First pair (x, y) in row-major element order whose product lies outside
/// the element list, if any.
std::optional<std::pair<Elem, Elem>> check_closed(const RawTable& t, Exec exec = Exec::Auto);

/// First triple violating associativity. The table must be closed.
std::optional<std::array<Elem, 3>> check_assoc(const RawTable& t, Exec exec = Exec::Auto);

/// First element with no left inverse mapping to elements[0].
std::optional<Elem> check_inverses(const RawTable& t, Exec exec = Exec::Auto);

/// Runs the groupp predicates in order: positive order and squareness are
/// structural to RawTable; duplicate-free elements, closure, associativity,
/// left inverses are searched exhaustively. Associativity and inverses are
/// evaluated only when closure holds.
CheckReport check_group(const RawTable& t, const ValidationOptions& opts = {});

namespace detail {
struct TableChecks {
  CheckReport report;
  scan::ElemIndexMap map;
  scan::IndexTable idx;
  bool closed = false;
};
TableChecks run_table_checks(const RawTable& t, const ValidationOptions& opts);
} // namespace detail

} // namespace cayley
