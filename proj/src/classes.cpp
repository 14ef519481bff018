#include "cayley/classes.hpp"

#include <algorithm>

#include "cayley/cyclic.hpp"
#include "cayley/numtheory.hpp"
#include "cayley/quotient.hpp"

namespace cayley {

namespace {

int conj_idx(int xi, int yi, const Group& g) {
  return g.op_idx(g.op_idx(g.inv_idx(yi), xi), yi);
}

bool commutes(int i, int j, const Group& g) { return g.op_idx(i, j) == g.op_idx(j, i); }

std::vector<Elem> commuting_with(int ai, const Group& g) {
  std::vector<Elem> out;
  for (int i = 0; i < g.order(); ++i)
    if (commutes(i, ai, g))
      out.push_back(g.element(i));
  return out;
}

int centralizer_order(int ai, const Group& g) {
  int count = 0;
  for (int i = 0; i < g.order(); ++i)
    if (commutes(i, ai, g))
      ++count;
  return count;
}

std::vector<bool> center_mask(const Group& g) {
  std::vector<bool> central(g.order(), true);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (!commutes(i, j, g)) {
        central[i] = false;
        break;
      }
  return central;
}

std::vector<std::int32_t> conjs_indices(int xi, const Group& g) {
  std::vector<bool> seen(g.order(), false);
  for (int yi = 0; yi < g.order(); ++yi)
    seen[conj_idx(xi, yi, g)] = true;
  std::vector<std::int32_t> out;
  for (int i = 0; i < g.order(); ++i)
    if (seen[i])
      out.push_back(i);
  return out;
}

} // namespace

Group centralizer(const Elem& a, const Group& g) {
  return make_subgroup(commuting_with(g.index_in(a), g), g);
}

Group center(const Group& g) {
  std::vector<Elem> members;
  const auto central = center_mask(g);
  for (int i = 0; i < g.order(); ++i)
    if (central[i])
      members.push_back(g.element(i));
  return make_subgroup(members, g);
}

std::vector<Elem> conjs(const Elem& x, const Group& g) {
  std::vector<Elem> out;
  for (std::int32_t i : conjs_indices(g.index_in(x), g))
    out.push_back(g.element(i));
  return out;
}

Elem conjer(const Elem& y, const Elem& x, const Group& g) {
  const int xi = g.index_in(x);
  const int yi = g.index_in(y);
  for (int ci = 0; ci < g.order(); ++ci)
    if (conj_idx(xi, ci, g) == yi)
      return g.element(ci);
  throw not_conjugate_error("conjer: " + y.str() + " is not a conjugate of " + x.str());
}

Coset conj2coset(const Elem& y, const Elem& x, const Group& g) {
  return lcoset(g.inv(conjer(y, x, g)), centralizer(x, g), g);
}

Elem coset2conj(const Coset& c, const Elem& x, const Group& g) {
  if (c.empty())
    throw std::invalid_argument("coset2conj: empty coset");
  return conj(x, g.inv(c.front()), g);
}

std::vector<std::vector<Elem>> conjs_list(const Group& g) {
  const int n = g.order();
  const auto central = center_mask(g);
  std::vector<bool> classed(n, false);
  std::vector<std::vector<std::int32_t>> found;
  // Right-to-left traversal mirrors the recursive construction: a class is
  // collected at its last member and prepended.
  for (int gi = n - 1; gi >= 0; --gi) {
    if (central[gi] || classed[gi])
      continue;
    auto cls = conjs_indices(gi, g);
    for (std::int32_t m : cls)
      classed[m] = true;
    found.push_back(std::move(cls));
  }
  std::reverse(found.begin(), found.end());

  std::vector<std::vector<Elem>> out;
  out.reserve(found.size());
  for (const auto& cls : found) {
    std::vector<Elem> members;
    members.reserve(cls.size());
    for (std::int32_t i : cls)
      members.push_back(g.element(i));
    out.push_back(std::move(members));
  }
  return out;
}

bool check_class_equation(const Group& g) {
  const int n = g.order();
  std::vector<bool> covered(n, false);
  std::int64_t total = 0;

  const auto central = center_mask(g);
  for (int i = 0; i < n; ++i)
    if (central[i]) {
      covered[i] = true;
      ++total;
    }

  for (const auto& cls : conjs_list(g)) {
    for (const Elem& m : cls) {
      const int i = g.index_in(m);
      if (covered[i])
        return false; // duplicate across center/classes
      covered[i] = true;
      ++total;
    }
  }

  if (total != n)
    return false;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::optional<Elem> find_elt(const Group& g, std::int64_t p) {
  if (!is_prime(p))
    throw non_prime_error("find_elt: p = " + std::to_string(p) + " is not prime");
  const auto central = center_mask(g);
  for (int i = 0; i < g.order(); ++i)
    if (!central[i] && divides(p, centralizer_order(i, g)))
      return g.element(i);
  return std::nullopt;
}

Elem cauchy_witness(const Group& g, std::int64_t p) {
  if (!is_prime(p))
    throw non_prime_error("cauchy: p = " + std::to_string(p) + " is not prime");
  if (!divides(p, g.order()))
    throw divisibility_error("cauchy: " + std::to_string(p) + " does not divide the order " +
                             std::to_string(g.order()));
  auto witness = elt_of_ord(p, g);
  if (!witness)
    throw std::logic_error("cauchy: no element of the required order; input is not a group");
  return *witness;
}

namespace {

void trace_step(CauchyTrace& t, std::string s) { t.steps.push_back(std::move(s)); }

Elem cauchy_descend(const Group& g, std::int64_t p, CauchyTrace& t, int depth) {
  const std::string tag = "[" + std::to_string(depth) + "] ";
  if (is_abelian(g)) {
    const Elem a = g.element(1);
    const std::int64_t k = ord(a, g);
    if (k % p == 0) {
      const Elem w = power(a, k / p, g);
      trace_step(t, tag + "abelian: a = " + a.str() + " has order " + std::to_string(k) +
                        "; p divides it, so a^" + std::to_string(k / p) + " = " + w.str() +
                        " has order exactly p");
      return w;
    }
    const Group h = cyclic(a, g);
    const Group q = quotient_group(g, h);
    trace_step(t, tag + "abelian: a = " + a.str() + " has order " + std::to_string(k) +
                      " coprime to p; p divides the quotient order " +
                      std::to_string(q.order()) + " (Euclid), descend into the quotient by <a>");
    const Elem coset_witness = cauchy_descend(q, p, t, depth + 1);
    const Elem rep = coset_witness.as_seq().front();
    const std::int64_t m = ord(rep, g);
    const Elem w = power(rep, m / p, g);
    trace_step(t, tag + "lift: the coset has order p, so its representative " + rep.str() +
                      " has order " + std::to_string(m) + " divisible by p; " + rep.str() +
                      "^" + std::to_string(m / p) + " = " + w.str() + " has order exactly p");
    return w;
  }

  if (auto x = find_elt(g, p)) {
    const Group c = centralizer(*x, g);
    trace_step(t, tag + "nonabelian: x = " + x->str() +
                      " is non-central with p dividing |centralizer(x)| = " +
                      std::to_string(c.order()) + "; descend into the centralizer");
    return cauchy_descend(c, p, t, depth + 1);
  }

  const Group z = center(g);
  if (z.order() % p != 0)
    throw std::logic_error("cauchy trace: class equation violated");
  trace_step(t, tag + "nonabelian: every non-central centralizer avoids p, so the class "
                      "equation forces p to divide |center| = " +
                    std::to_string(z.order()) + "; descend into the center");
  return cauchy_descend(z, p, t, depth + 1);
}

} // namespace

CauchyTrace cauchy_trace(const Group& g, std::int64_t p) {
  if (!is_prime(p))
    throw non_prime_error("cauchy: p = " + std::to_string(p) + " is not prime");
  if (!divides(p, g.order()))
    throw divisibility_error("cauchy: " + std::to_string(p) + " does not divide the order " +
                             std::to_string(g.order()));
  CauchyTrace t{.steps = {}, .witness = Elem(0)};
  t.steps.push_back("order " + std::to_string(g.order()) + ", p = " + std::to_string(p));
  t.witness = cauchy_descend(g, p, t, 1);
  return t;
}

} // namespace cayley
