#include "cayley/groupspec.hpp"

#include <cctype>

#include "cayley/cyclic.hpp"
#include "cayley/families.hpp"
#include "cayley/numtheory.hpp"
#include "cayley/quotient.hpp"
#include "cayley/serialize.hpp"

namespace cayley {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    if (pos >= text.size())
      throw parse_error("group spec: unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("group spec: expected '") + c + "' at position " +
                        std::to_string(pos) + ", got '" + text[pos] + "'");
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '+' || text[pos] == '*'))
      out += text[pos++];
    if (out.empty())
      throw parse_error("group spec: expected a name at position " + std::to_string(pos));
    return out;
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("group spec: expected an integer at position " + std::to_string(pos));
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (std::int64_t{1} << 60))
        throw parse_error("group spec: integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string until_close() {
    // raw payload for file(...): everything up to the matching ')'
    skip_ws();
    std::string out;
    while (pos < text.size() && text[pos] != ')')
      out += text[pos++];
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
      out.pop_back();
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"')
      out = out.substr(1, out.size() - 2);
    return out;
  }
};

Elem parse_elem(Cursor& c) {
  if (c.peek() == '(') {
    c.expect('(');
    std::vector<Elem> seq;
    while (c.peek() != ')')
      seq.push_back(parse_elem(c));
    c.expect(')');
    if (seq.empty())
      throw parse_error("group spec: () is not an element");
    return Elem(std::move(seq));
  }
  const std::int64_t v = c.integer();
  if (v < 0)
    throw parse_error("group spec: elements are non-negative");
  return Elem(v);
}

std::vector<Elem> parse_elem_list(Cursor& c) {
  c.expect('(');
  std::vector<Elem> out;
  while (c.peek() != ')')
    out.push_back(parse_elem(c));
  c.expect(')');
  return out;
}

GroupSpec parse_spec(Cursor& c) {
  const std::string name = c.ident();
  GroupSpec spec;
  c.expect('(');
  if (name == "zadd" || name == "z+") {
    spec.kind = GroupSpec::Kind::Zadd;
    spec.n = c.integer();
  } else if (name == "zmul" || name == "z*") {
    spec.kind = GroupSpec::Kind::Zmul;
    spec.n = c.integer();
  } else if (name == "sym") {
    spec.kind = GroupSpec::Kind::Sym;
    spec.n = c.integer();
  } else if (name == "alt") {
    spec.kind = GroupSpec::Kind::Alt;
    spec.n = c.integer();
  } else if (name == "file") {
    spec.kind = GroupSpec::Kind::File;
    spec.path = c.until_close();
    if (spec.path.empty())
      throw parse_error("group spec: file() needs a path");
  } else if (name == "subgroup") {
    spec.kind = GroupSpec::Kind::Subgroup;
    spec.list = parse_elem_list(c);
    spec.inner = std::make_shared<GroupSpec>(parse_spec(c));
  } else if (name == "cyclic") {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.elem = parse_elem(c);
    spec.inner = std::make_shared<GroupSpec>(parse_spec(c));
  } else if (name == "quotient") {
    spec.kind = GroupSpec::Kind::Quotient;
    spec.inner = std::make_shared<GroupSpec>(parse_spec(c));
    spec.inner2 = std::make_shared<GroupSpec>(parse_spec(c));
  } else {
    throw parse_error("group spec: unknown constructor '" + name + "'");
  }
  c.expect(')');
  return spec;
}

} // namespace

GroupSpec parse_groupspec(std::string_view text) {
  Cursor c{text};
  GroupSpec spec = parse_spec(c);
  if (!c.eof())
    throw parse_error("group spec: trailing input at position " + std::to_string(c.pos));
  return spec;
}

Elem parse_elem_text(std::string_view text) {
  Cursor c{text};
  Elem e = parse_elem(c);
  if (!c.eof())
    throw parse_error("element: trailing input at position " + std::to_string(c.pos));
  return e;
}

std::vector<Elem> parse_elem_list_text(std::string_view text) {
  Cursor c{text};
  auto l = parse_elem_list(c);
  if (!c.eof())
    throw parse_error("element list: trailing input at position " + std::to_string(c.pos));
  return l;
}

std::string GroupSpec::str() const {
  switch (kind) {
  case Kind::Zadd:
    return "zadd(" + std::to_string(n) + ")";
  case Kind::Zmul:
    return "zmul(" + std::to_string(n) + ")";
  case Kind::Sym:
    return "sym(" + std::to_string(n) + ")";
  case Kind::Alt:
    return "alt(" + std::to_string(n) + ")";
  case Kind::File:
    return "file(" + path + ")";
  case Kind::Subgroup:
    return "subgroup(" + render_elems(list) + ", " + inner->str() + ")";
  case Kind::Cyclic:
    return "cyclic(" + elem->str() + ", " + inner->str() + ")";
  case Kind::Quotient:
    return "quotient(" + inner->str() + ", " + inner2->str() + ")";
  }
  return "?";
}

namespace {

void gate_order(std::int64_t order, const std::string& what, const EvalOptions& opts) {
  if (!opts.force && order > opts.max_order)
    throw resource_limit_error(what + " has order " + std::to_string(order) +
                               ", above the limit " + std::to_string(opts.max_order) +
                               " (use --force or raise --max-order)");
}

std::int64_t sym_order(std::int64_t n, bool half) {
  if (n > 20)
    throw resource_limit_error("sym/alt: n > 20 is out of range");
  std::int64_t f = 1;
  for (std::int64_t k = 2; k <= n; ++k)
    f *= k;
  return half && n >= 2 ? f / 2 : f;
}

FamilyOptions family_options(std::int64_t n, const EvalOptions& opts) {
  FamilyOptions fo;
  fo.full_assoc = opts.full_assoc;
  fo.exec = opts.exec;
  if (opts.force)
    fo.max_n = std::max<std::int64_t>(fo.max_n, n);
  return fo;
}

void gate_family(const GroupSpec& spec, const EvalOptions& opts) {
  switch (spec.kind) {
  case GroupSpec::Kind::Zadd:
    if (spec.n >= 1)
      gate_order(spec.n, spec.str(), opts);
    break;
  case GroupSpec::Kind::Zmul:
    if (spec.n >= 2) {
      if (!opts.force && spec.n > 6 && spec.n > opts.max_order * opts.max_order)
        throw resource_limit_error(spec.str() + " is far above the order limit");
      if (spec.n <= 4000000)
        gate_order(static_cast<std::int64_t>(rel_primes(spec.n).size()), spec.str(), opts);
    }
    break;
  case GroupSpec::Kind::Sym:
    if (spec.n >= 1)
      gate_order(sym_order(spec.n, false), spec.str(), opts);
    break;
  case GroupSpec::Kind::Alt:
    if (spec.n >= 1)
      gate_order(sym_order(spec.n, true), spec.str(), opts);
    break;
  default:
    break;
  }
}

} // namespace

Group eval_group(const GroupSpec& spec, const EvalOptions& opts) {
  gate_family(spec, opts);
  switch (spec.kind) {
  case GroupSpec::Kind::Zadd:
    return zadd(spec.n);
  case GroupSpec::Kind::Zmul:
    return zmul(spec.n);
  case GroupSpec::Kind::Sym:
    return sym(static_cast<int>(spec.n), family_options(spec.n, opts));
  case GroupSpec::Kind::Alt:
    return alt(static_cast<int>(spec.n), family_options(spec.n, opts));
  case GroupSpec::Kind::File: {
    RawTable t = load_group(spec.path);
    gate_order(t.order(), spec.str(), opts);
    return Group::validate(std::move(t), {.exec = opts.exec});
  }
  case GroupSpec::Kind::Subgroup:
    return make_subgroup(spec.list, eval_group(*spec.inner, opts));
  case GroupSpec::Kind::Cyclic:
    return cyclic(*spec.elem, eval_group(*spec.inner, opts));
  case GroupSpec::Kind::Quotient:
    return quotient_group(eval_group(*spec.inner, opts), eval_group(*spec.inner2, opts));
  }
  throw std::logic_error("eval_group: unreachable");
}

RawTable eval_raw(const GroupSpec& spec, const EvalOptions& opts) {
  gate_family(spec, opts);
  switch (spec.kind) {
  case GroupSpec::Kind::Zadd:
    return build_light(zadd_spec(), spec.n);
  case GroupSpec::Kind::Zmul:
    return build_light(zmul_spec(), spec.n);
  case GroupSpec::Kind::Sym:
    return build_light(sym_spec(), spec.n);
  case GroupSpec::Kind::Alt:
    return build_light(alt_spec(), spec.n);
  case GroupSpec::Kind::File: {
    RawTable t = load_group(spec.path);
    gate_order(t.order(), spec.str(), opts);
    return t;
  }
  case GroupSpec::Kind::Subgroup: {
    if (spec.list.empty())
      throw subgroup_error("subgroup: element list is empty");
    const Group g = eval_group(*spec.inner, opts);
    return RawTable::from_op(spec.list,
                             [&](const Elem& x, const Elem& y) { return g.op(x, y); });
  }
  case GroupSpec::Kind::Cyclic: {
    const Group g = eval_group(*spec.inner, opts);
    const auto pw = powers(*spec.elem, g);
    return RawTable::from_op(pw, [&](const Elem& x, const Elem& y) { return g.op(x, y); });
  }
  case GroupSpec::Kind::Quotient: {
    const Group g = eval_group(*spec.inner, opts);
    const Group h = eval_group(*spec.inner2, opts);
    return quotient_table(g, h);
  }
  }
  throw std::logic_error("eval_raw: unreachable");
}

} // namespace cayley
