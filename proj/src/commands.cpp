#include "cayley/commands.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cayley/classes.hpp"
#include "cayley/cyclic.hpp"
#include "cayley/families.hpp"
#include "cayley/groupspec.hpp"
#include "cayley/quotient.hpp"
#include "cayley/render.hpp"
#include "cayley/serialize.hpp"

namespace cayley {

namespace {

struct CliOptions {
  EvalOptions eval;
  std::string format = "text";
  std::string out_path;
  std::string exec = "auto";

  void resolve_exec() {
    if (exec == "serial")
      eval.exec = Exec::Serial;
    else if (exec == "parallel")
      eval.exec = Exec::Parallel;
    else
      eval.exec = Exec::Auto;
  }
};

void add_common(CLI::App* cmd, CliOptions& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write the group document to this path");
  cmd->add_option("--max-order", o.eval.max_order, "refuse constructions above this order");
  cmd->add_flag("--force", o.eval.force, "lift the order and family-size gates");
  cmd->add_flag("--full-assoc", o.eval.full_assoc,
                "run the associativity scan even on large tables");
  cmd->add_option("--exec", o.exec, "scan execution strategy")
      ->check(CLI::IsMember({"serial", "parallel", "auto"}));
}

void emit_group(const RawTable& t, const CliOptions& o, std::ostream& out) {
  if (o.format == "json")
    out << encode_document(t);
  else
    out << render_table(t) << "\n";
  if (!o.out_path.empty())
    save_group(t, o.out_path);
}

int cmd_build(const std::string& spec_text, const CliOptions& o, std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  emit_group(g.table(), o, out);
  return 0;
}

int cmd_verify(const std::string& spec_text, const CliOptions& o, std::ostream& out) {
  const RawTable t = eval_raw(parse_groupspec(spec_text), o.eval);
  const CheckReport report = check_group(t, {.exec = o.eval.exec});
  out << report.summary() << "\n";
  if (report.passed()) {
    out << "order: " << t.order() << "\n";
    return 0;
  }
  return 2;
}

int cmd_analyze(const std::string& spec_text, const CliOptions& o, std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  const int n = g.order();
  out << "order: " << n << "\n";

  const auto ab = check_abelian(g, o.eval.exec);
  out << "abelian: " << (ab ? "no" : "yes");
  if (ab)
    out << "  (" << ab->first.str() << " and " << ab->second.str() << " do not commute)";
  out << "\n";

  std::map<std::int64_t, int> histogram;
  for (const Elem& x : g.elements())
    ++histogram[ord(x, g)];
  out << "element orders:";
  for (const auto& [k, count] : histogram)
    out << "  " << k << " x" << count;
  out << "\n";

  if (histogram.count(n))
    out << "cyclic: yes (generator " << elt_of_ord(n, g)->str() << ")\n";
  else
    out << "cyclic: no (no element of order " << n << ")\n";

  const Group z = center(g);
  out << "center: order " << z.order() << " " << render_elems(z.elements()) << "\n";

  const auto classes = conjs_list(g);
  out << "nontrivial class sizes:";
  if (classes.empty())
    out << " none";
  for (const auto& cls : classes)
    out << " " << cls.size();
  out << "\n";

  out << "class equation: " << z.order();
  for (const auto& cls : classes)
    out << " + " << cls.size();
  out << " = " << n << "  [" << (check_class_equation(g) ? "verified" : "VIOLATED") << "]\n";
  return 0;
}

int cmd_quotient(const std::string& spec_text, const std::string& sub_text, const CliOptions& o,
                 std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  const Group h = eval_group(parse_groupspec(sub_text), o.eval);
  const Group q = quotient_group(g, h);
  emit_group(q.table(), o, out);
  return 0;
}

int cmd_cauchy(const std::string& spec_text, std::int64_t p, bool trace, const CliOptions& o,
               std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  if (trace) {
    const CauchyTrace t = cauchy_trace(g, p);
    for (const auto& step : t.steps)
      out << step << "\n";
    out << "witness: " << t.witness.str() << "\n";
    out << "ord: " << ord(t.witness, g) << "\n";
    return 0;
  }
  const Elem w = cauchy_witness(g, p);
  out << "witness: " << w.str() << "\n";
  out << "ord: " << ord(w, g) << "\n";
  return 0;
}

int cmd_subgroup(const std::string& list_text, const std::string& spec_text,
                 const CliOptions& o, std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  const Group h = make_subgroup(parse_elem_list_text(list_text), g);
  emit_group(h.table(), o, out);
  return 0;
}

int cmd_cyclic(const std::string& elem_text, const std::string& spec_text, const CliOptions& o,
               std::ostream& out) {
  const Group g = eval_group(parse_groupspec(spec_text), o.eval);
  const Group h = cyclic(parse_elem_text(elem_text), g);
  emit_group(h.table(), o, out);
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite group engine: operation tables, validation, structure"};
  app.name("cayley");
  app.require_subcommand(1);

  CliOptions o;
  std::string spec_text, sub_text, list_text, elem_text;
  std::int64_t prime = 0;
  bool trace = false;

  auto* build = app.add_subcommand("build", "construct a group and print its table");
  build->add_option("spec", spec_text, "group expression")->required();
  add_common(build, o);

  auto* verify = app.add_subcommand("verify", "run the group predicates on a table");
  verify->add_option("spec", spec_text, "group expression")->required();
  add_common(verify, o);

  auto* analyze = app.add_subcommand("analyze", "order, center, classes, class equation");
  analyze->add_option("spec", spec_text, "group expression")->required();
  add_common(analyze, o);

  auto* quotient = app.add_subcommand("quotient", "quotient by a normal subgroup");
  quotient->add_option("spec", spec_text, "group expression")->required();
  quotient->add_option("subgroup", sub_text, "normal subgroup expression")->required();
  add_common(quotient, o);

  auto* cauchy = app.add_subcommand("cauchy", "element of prime order p");
  cauchy->add_option("spec", spec_text, "group expression")->required();
  cauchy->add_option("-p", prime, "prime dividing the group order")->required();
  cauchy->add_flag("--trace", trace, "print the inductive descent");
  add_common(cauchy, o);

  auto* subgroup = app.add_subcommand("subgroup", "subgroup on the given element list");
  subgroup->add_option("elements", list_text, "element list, e.g. \"(1 4 7 13)\"")->required();
  subgroup->add_option("spec", spec_text, "parent group expression")->required();
  add_common(subgroup, o);

  auto* cyclic_cmd = app.add_subcommand("cyclic", "cyclic subgroup generated by an element");
  cyclic_cmd->add_option("element", elem_text, "generator, e.g. \"(1 2 0)\"")->required();
  cyclic_cmd->add_option("spec", spec_text, "parent group expression")->required();
  add_common(cyclic_cmd, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  o.resolve_exec();

  try {
    if (build->parsed())
      return cmd_build(spec_text, o, out);
    if (verify->parsed())
      return cmd_verify(spec_text, o, out);
    if (analyze->parsed())
      return cmd_analyze(spec_text, o, out);
    if (quotient->parsed())
      return cmd_quotient(spec_text, sub_text, o, out);
    if (cauchy->parsed())
      return cmd_cauchy(spec_text, prime, trace, o, out);
    if (subgroup->parsed())
      return cmd_subgroup(list_text, spec_text, o, out);
    if (cyclic_cmd->parsed())
      return cmd_cyclic(elem_text, spec_text, o, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const math_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) { // i/o and other input-level failures
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

} // namespace cayley
