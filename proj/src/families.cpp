#include "cayley/families.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/numtheory.hpp"

namespace cayley {

std::vector<std::int64_t> ninit(int n) {
  if (n < 1)
    throw std::invalid_argument("ninit: n must be positive");
  std::vector<std::int64_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Elem> ninit_elems(int n) {
  std::vector<Elem> out;
  out.reserve(n);
  for (std::int64_t v : ninit(n))
    out.emplace_back(v);
  return out;
}

Elem identity_perm(int n) { return Elem(ninit_elems(n)); }

std::vector<Elem> perms(std::span<const Elem> l) {
  const int n = static_cast<int>(l.size());
  if (n == 0)
    throw std::invalid_argument("perms: list is empty");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Elem> out;
  do {
    std::vector<Elem> seq;
    seq.reserve(n);
    for (int i : order)
      seq.push_back(l[i]);
    out.push_back(Elem(std::move(seq)));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {

const std::vector<Elem>& perm_entries(const Elem& p, int n, const char* who) {
  if (!p.is_seq() || static_cast<int>(p.as_seq().size()) != n)
    throw length_mismatch_error(std::string(who) + ": expected a permutation of length " +
                                std::to_string(n) + ", got " + p.str());
  return p.as_seq();
}

} // namespace

Elem comp_perm(const Elem& p, const Elem& r, int n) {
  const auto& pe = perm_entries(p, n, "comp_perm");
  const auto& re = perm_entries(r, n, "comp_perm");
  std::vector<Elem> seq;
  seq.reserve(n);
  for (int i = 0; i < n; ++i)
    seq.push_back(pe.at(re[i].as_int()));
  return Elem(std::move(seq));
}

Elem inv_perm(const Elem& p, int n) {
  const auto& pe = perm_entries(p, n, "inv_perm");
  std::vector<std::int64_t> img(n, -1);
  for (int i = 0; i < n; ++i)
    img.at(pe[i].as_int()) = i;
  std::vector<Elem> seq;
  seq.reserve(n);
  for (int i = 0; i < n; ++i)
    seq.emplace_back(img[i]);
  return Elem(std::move(seq));
}

std::vector<std::vector<std::int64_t>> cyc(const Elem& p) {
  const auto& pe = p.as_seq();
  const int n = static_cast<int>(pe.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::int64_t>> cycles;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || pe[start].as_int() == start)
      continue;
    std::vector<std::int64_t> cycle;
    for (std::int64_t i = start; !seen[i]; i = pe[i].as_int()) {
      seen[i] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_even_perm(const Elem& p) {
  std::size_t transpositions = 0;
  for (const auto& cycle : cyc(p))
    transpositions += cycle.size() - 1;
  return transpositions % 2 == 0;
}

namespace {

struct Materialized {
  std::vector<Elem> elts;
  scan::ElemIndexMap map;
  RawTable table;
};

Materialized materialize(const FamilySpec& spec, std::int64_t param, bool check_list) {
  std::vector<Elem> elts = spec.elements(param);
  if (check_list) {
    if (elts.empty())
      throw obligation_error("consp", spec.name + ": element list is empty");
  } else if (elts.empty()) {
    throw std::invalid_argument(spec.name + ": element list is empty");
  }
  auto map = scan::element_index_map(elts);
  if (check_list && map.size() != elts.size()) {
    for (std::size_t i = 0; i < elts.size(); ++i)
      if (static_cast<std::size_t>(map.at(elts[i])) != i)
        throw obligation_error("dlistp", spec.name + ": duplicate element " + elts[i].str());
  }
  // Non-nil holds structurally: the empty sequence is not representable.
  RawTable t = RawTable::from_op(elts, [&](const Elem& x, const Elem& y) {
    Elem p = spec.op(x, y, param);
    auto it = map.find(p);
    return it == map.end() ? p : elts[it->second]; // intern members
  });
  return {std::move(elts), std::move(map), std::move(t)};
}

} // namespace

Group build_family(const FamilySpec& spec, std::int64_t param, const FamilyOptions& opts) {
  if (!spec.guard(param))
    throw guard_error(spec.name + ": guard rejects parameter " + std::to_string(param));
  auto m = materialize(spec, param, true);
  const int n = m.table.order();

  for (int j = 0; j < n; ++j)
    if (!(m.table.entry(0, j) == m.elts[j]))
      throw obligation_error("identity", spec.name + ": op(" + m.elts[0].str() + ", " +
                                             m.elts[j].str() + ") = " +
                                             m.table.entry(0, j).str() + ", expected " +
                                             m.elts[j].str());

  const auto idx = scan::index_table(m.table, m.map, opts.exec);
  if (auto cex = scan::closure_cex(idx, opts.exec))
    throw obligation_error("closed", spec.name + ": op(" + m.elts[cex->first].str() + ", " +
                                         m.elts[cex->second].str() + ") = " +
                                         m.table.entry(cex->first, cex->second).str() +
                                         " is not an element");

  const bool scan_assoc = opts.full_assoc || n <= kAssocScanMaxOrder;
  if (scan_assoc) {
    if (auto cex = scan::assoc_cex(idx, opts.exec))
      throw obligation_error("assoc", spec.name + ": associativity fails on (" +
                                          m.elts[(*cex)[0]].str() + ", " +
                                          m.elts[(*cex)[1]].str() + ", " +
                                          m.elts[(*cex)[2]].str() + ")");
  }

  if (spec.inv) {
    for (int i = 0; i < n; ++i) {
      const Elem v = spec.inv(m.elts[i], param);
      auto it = m.map.find(v);
      if (it == m.map.end())
        throw obligation_error("inverse", spec.name + ": inv(" + m.elts[i].str() + ") = " +
                                              v.str() + " is not an element");
      if (idx.at(it->second, i) != 0)
        throw obligation_error("inverse", spec.name + ": op(inv(" + m.elts[i].str() + "), " +
                                              m.elts[i].str() + ") is not the identity");
    }
  } else if (auto cex = scan::inverses_cex(idx, opts.exec)) {
    throw obligation_error("inverse",
                           spec.name + ": " + m.elts[*cex].str() + " has no left inverse");
  }

  // All obligations checked above on this very table; validate() only re-runs
  // the duplicate scan.
  return Group::validate(std::move(m.table),
                         {.closure = false, .assoc = false, .inverses = false, .exec = opts.exec});
}

RawTable build_light(const FamilySpec& spec, std::int64_t param) {
  return materialize(spec, param, false).table;
}

FamilySpec zadd_spec() {
  return {
      .name = "z+",
      .guard = [](std::int64_t n) { return n >= 1; },
      .elements = [](std::int64_t n) { return ninit_elems(static_cast<int>(n)); },
      .op = [](const Elem& x, const Elem& y,
               std::int64_t n) { return Elem((x.as_int() + y.as_int()) % n); },
      .inv = [](const Elem& x, std::int64_t n) { return Elem((n - x.as_int()) % n); },
  };
}

FamilySpec zmul_spec() {
  return {
      .name = "z*",
      .guard = [](std::int64_t n) { return n >= 2; },
      .elements =
          [](std::int64_t n) {
            std::vector<Elem> out;
            for (std::int64_t k : rel_primes(n))
              out.emplace_back(k);
            return out;
          },
      .op = [](const Elem& x, const Elem& y,
               std::int64_t n) { return Elem(x.as_int() * y.as_int() % n); },
      .inv =
          [](const Elem& x, std::int64_t n) {
            const auto [g, r, s] = ext_gcd(x.as_int(), n);
            return Elem(((r % n) + n) % n);
          },
  };
}

FamilySpec sym_spec() {
  return {
      .name = "sym",
      .guard = [](std::int64_t n) { return n >= 1; },
      .elements =
          [](std::int64_t n) {
            const auto base = ninit_elems(static_cast<int>(n));
            return perms(base);
          },
      .op = [](const Elem& x, const Elem& y,
               std::int64_t n) { return comp_perm(x, y, static_cast<int>(n)); },
      .inv = [](const Elem& x, std::int64_t n) { return inv_perm(x, static_cast<int>(n)); },
  };
}

FamilySpec alt_spec() {
  FamilySpec spec = sym_spec();
  spec.name = "alt";
  spec.elements = [](std::int64_t n) {
    const auto base = ninit_elems(static_cast<int>(n));
    std::vector<Elem> out;
    for (Elem& p : perms(base))
      if (is_even_perm(p))
        out.push_back(std::move(p));
    return out;
  };
  return spec;
}

namespace {

void check_sym_gate(const char* name, int n, const FamilyOptions& opts) {
  if (n < 1)
    throw guard_error(std::string(name) + ": n must be positive");
  if (n > opts.max_n)
    throw resource_limit_error(std::string(name) + "(" + std::to_string(n) +
                               ") exceeds the configured maximum n = " +
                               std::to_string(opts.max_n));
}

} // namespace

Group zadd(std::int64_t n) { return build_family(zadd_spec(), n); }

Group zmul(std::int64_t n) { return build_family(zmul_spec(), n); }

Group sym(int n, const FamilyOptions& opts) {
  check_sym_gate("sym", n, opts);
  return build_family(sym_spec(), n, opts);
}

Group alt(int n, const FamilyOptions& opts) {
  check_sym_gate("alt", n, opts);
  return build_family(alt_spec(), n, opts);
}

} // namespace cayley
