#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cayley/group.hpp"

namespace cayley {

/// A constructor expression for a group, as accepted on the command line:
///   zadd(n) zmul(n) sym(n) alt(n) file(path)
///   subgroup((e1 e2 ...), inner) cyclic(elem, inner) quotient(inner, innersub)
/// Elements are integers or parenthesized sequences; commas are optional.
struct GroupSpec {
  enum class Kind { Zadd, Zmul, Sym, Alt, File, Subgroup, Cyclic, Quotient };

  Kind kind;
  std::int64_t n = 0;                // zadd/zmul/sym/alt parameter
  std::string path;                  // file
  std::vector<Elem> list;            // subgroup element list
  std::optional<Elem> elem;          // cyclic generator
  std::shared_ptr<GroupSpec> inner;  // parent group
  std::shared_ptr<GroupSpec> inner2; // quotient subgroup

  std::string str() const;
};

GroupSpec parse_groupspec(std::string_view text);

/// A single element in the same syntax: "7" or "(1 2 0)".
Elem parse_elem_text(std::string_view text);

/// A parenthesized list of elements: "(1 4 7 13)" or "((0 1 2) (1 2 0))".
std::vector<Elem> parse_elem_list_text(std::string_view text);

struct EvalOptions {
  std::int64_t max_order = 1000; // refuse constructions larger than this
  bool force = false;            // lift the max_order and family-size gates
  bool full_assoc = false;       // opt into large associativity scans
  Exec exec = Exec::Auto;
};

/// Builds and fully validates the group the spec denotes.
Group eval_group(const GroupSpec& spec, const EvalOptions& opts = {});

/// Materializes the top-level table without validating it (the inner groups
/// of subgroup/cyclic/quotient expressions are still built validated).
RawTable eval_raw(const GroupSpec& spec, const EvalOptions& opts = {});

} // namespace cayley
