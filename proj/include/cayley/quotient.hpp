#pragma once

#include "cayley/cosets.hpp"

namespace cayley {

/// inv(y) * x * y; equals x iff x and y commute.
Elem conj(const Elem& x, const Elem& y, const Group& g);

/// First (x, y) with x in h, y in g whose conjugate leaves h, scanning x by
/// h-index and y by g-index.
std::optional<std::pair<Elem, Elem>> check_normal(const Group& h, const Group& g,
                                                  Exec exec = Exec::Auto);

bool is_normal(const Group& h, const Group& g);

/// The coset table of h in g: identity coset first, entries computed from
/// representatives. Well-formed for any subgroup; a group only when h is
/// normal.
RawTable quotient_table(const Group& g, const Group& h);

/// The group of left cosets of a normal subgroup h, identity coset first,
/// with op([x], [y]) = [op(x, y)]. Throws not_normal_error with the
/// conjugation counterexample otherwise.
Group quotient_group(const Group& g, const Group& h);

} // namespace cayley
