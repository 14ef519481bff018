#include "cayley/checks.hpp"

#include <stdexcept>

namespace cayley {

std::string CheckReport::summary() const {
  if (passed())
    return "groupp: PASS";
  std::string out = "groupp: FAIL";
  for (const auto& f : failures) {
    out += "\n  " + f.predicate + " counterexample:";
    for (const auto& e : f.counterexample)
      out += ' ' + e.str();
  }
  return out;
}

namespace detail {

TableChecks run_table_checks(const RawTable& t, const ValidationOptions& opts) {
  TableChecks out;
  const auto elements = t.elements();
  out.map = scan::element_index_map(elements);

  // dlistp: first element equal to an earlier one. The value-based searches
  // below presuppose a duplicate-free element list (their counterexamples
  // replay by value), so a dlistp failure ends the report.
  if (out.map.size() != elements.size()) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (static_cast<std::size_t>(out.map.at(elements[i])) != i) {
        out.report.failures.push_back({"dlistp", {elements[i]}});
        break;
      }
    }
    out.idx = scan::index_table(t, out.map, opts.exec);
    out.closed = false;
    return out;
  }

  out.idx = scan::index_table(t, out.map, opts.exec);

  out.closed = true;
  if (opts.closure) {
    if (auto cex = scan::closure_cex(out.idx, opts.exec)) {
      out.closed = false;
      out.report.failures.push_back(
          {"closedp", {elements[cex->first], elements[cex->second]}});
    }
  }

  if (out.closed && opts.assoc) {
    if (auto cex = scan::assoc_cex(out.idx, opts.exec))
      out.report.failures.push_back(
          {"assocp", {elements[(*cex)[0]], elements[(*cex)[1]], elements[(*cex)[2]]}});
  }

  if (out.closed && opts.inverses) {
    if (auto cex = scan::inverses_cex(out.idx, opts.exec))
      out.report.failures.push_back({"inversesp", {elements[*cex]}});
  }

  return out;
}

} // namespace detail

std::optional<std::pair<Elem, Elem>> check_closed(const RawTable& t, Exec exec) {
  const auto map = scan::element_index_map(t.elements());
  const auto idx = scan::index_table(t, map, exec);
  if (auto cex = scan::closure_cex(idx, exec))
    return std::pair{t.elements()[cex->first], t.elements()[cex->second]};
  return std::nullopt;
}

std::optional<std::array<Elem, 3>> check_assoc(const RawTable& t, Exec exec) {
  const auto map = scan::element_index_map(t.elements());
  const auto idx = scan::index_table(t, map, exec);
  if (scan::closure_cex(idx, exec))
    throw std::invalid_argument("check_assoc: table is not closed");
  if (auto cex = scan::assoc_cex(idx, exec))
    return std::array{t.elements()[(*cex)[0]], t.elements()[(*cex)[1]], t.elements()[(*cex)[2]]};
  return std::nullopt;
}

std::optional<Elem> check_inverses(const RawTable& t, Exec exec) {
  const auto map = scan::element_index_map(t.elements());
  const auto idx = scan::index_table(t, map, exec);
  if (auto cex = scan::inverses_cex(idx, exec))
    return t.elements()[*cex];
  return std::nullopt;
}

CheckReport check_group(const RawTable& t, const ValidationOptions& opts) {
  return detail::run_table_checks(t, opts).report;
}

} // namespace cayley
