#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cayley {

/// A group element value: a non-negative integer or a non-empty sequence of
/// elements. Sequences cover permutations, cosets, and cosets of cosets.
/// Immutable; sequence payloads are shared, so copies are cheap.
class Elem {
public:
  Elem() : value_(0) {}
  Elem(std::int64_t v);
  explicit Elem(std::vector<Elem> seq);

  bool is_int() const { return seq_ == nullptr; }
  bool is_seq() const { return seq_ != nullptr; }

  std::int64_t as_int() const;
  const std::vector<Elem>& as_seq() const;

  std::size_t hash() const { return hash_; }

  /// Paper-style rendering: integers bare, sequences parenthesized, e.g. "(1 2 0)".
  std::string str() const;

  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
  std::int64_t value_ = 0;
  std::shared_ptr<const std::vector<Elem>> seq_;
  std::size_t hash_ = 0;
};

struct ElemHash {
  std::size_t operator()(const Elem& e) const { return e.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Elem& e);

/// Convenience for building permutation-like elements from integer entries.
Elem seq_elem(std::span<const std::int64_t> entries);
Elem seq_elem(std::initializer_list<std::int64_t> entries);

/// 0-based position of the first occurrence of x in l, if any.
std::optional<std::size_t> index_of(const Elem& x, std::span<const Elem> l);

std::string render_elems(std::span<const Elem> l);

} // namespace cayley
