#include "cayley/elem.hpp"

#include <ostream>
#include <stdexcept>

namespace cayley {

namespace {

std::size_t hash_int(std::int64_t v) {
  // splitmix64 finalizer
  std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(x ^ (x >> 31));
}

std::size_t hash_seq(const std::vector<Elem>& seq) {
  std::size_t h = 0x2545f4914f6cdd1dULL;
  for (const Elem& e : seq)
    h = h * 0x100000001b3ULL ^ e.hash();
  return h;
}

} // namespace

Elem::Elem(std::int64_t v) : value_(v), hash_(hash_int(v)) {
  if (v < 0)
    throw std::invalid_argument("Elem: integer elements must be non-negative");
}

Elem::Elem(std::vector<Elem> seq)
    : seq_(std::make_shared<const std::vector<Elem>>(std::move(seq))) {
  if (seq_->empty())
    throw std::invalid_argument("Elem: the empty sequence is not an element");
  hash_ = hash_seq(*seq_);
}

std::int64_t Elem::as_int() const {
  if (!is_int())
    throw std::logic_error("Elem: as_int on a sequence element");
  return value_;
}

const std::vector<Elem>& Elem::as_seq() const {
  if (!is_seq())
    throw std::logic_error("Elem: as_seq on an integer element");
  return *seq_;
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.hash_ != b.hash_)
    return false;
  if (a.is_int())
    return b.is_int() && a.value_ == b.value_;
  if (!b.is_seq())
    return false;
  if (a.seq_ == b.seq_)
    return true;
  return *a.seq_ == *b.seq_;
}

std::string Elem::str() const {
  if (is_int())
    return std::to_string(value_);
  std::string out = "(";
  for (std::size_t i = 0; i < seq_->size(); ++i) {
    if (i)
      out += ' ';
    out += (*seq_)[i].str();
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Elem& e) { return os << e.str(); }

Elem seq_elem(std::span<const std::int64_t> entries) {
  std::vector<Elem> seq;
  seq.reserve(entries.size());
  for (std::int64_t v : entries)
    seq.emplace_back(v);
  return Elem(std::move(seq));
}

Elem seq_elem(std::initializer_list<std::int64_t> entries) {
  return seq_elem(std::span<const std::int64_t>(entries.begin(), entries.size()));
}

std::optional<std::size_t> index_of(const Elem& x, std::span<const Elem> l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] == x)
      return i;
  return std::nullopt;
}

std::string render_elems(std::span<const Elem> l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i)
      out += ' ';
    out += l[i].str();
  }
  out += ')';
  return out;
}

} // namespace cayley
