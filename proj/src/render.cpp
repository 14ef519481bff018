#include "cayley/render.hpp"

#include <cctype>

namespace cayley {

std::string render_table(const RawTable& t) {
  std::string out = "(";
  for (int i = 0; i < t.order(); ++i) {
    if (i)
      out += "\n ";
    out += render_elems(t.row(i));
  }
  out += ')';
  return out;
}

std::vector<std::string> table_tokens(const std::string& rendered) {
  std::vector<std::string> tokens;
  std::string atom;
  const auto flush = [&] {
    if (!atom.empty()) {
      tokens.push_back(atom);
      atom.clear();
    }
  };
  for (char c : rendered) {
    if (c == '(' || c == ')') {
      flush();
      tokens.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      atom += c;
    }
  }
  flush();
  return tokens;
}

} // namespace cayley
