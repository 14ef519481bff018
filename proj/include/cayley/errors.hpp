#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input could not be parsed: group spec expressions, group documents.
/// CLI maps these to exit code 1.
struct parse_error : error {
  using error::error;
};

struct malformed_document_error : parse_error {
  using parse_error::parse_error;
};

/// A mathematical precondition or obligation failed.
/// CLI maps these to exit code 2.
struct math_error : error {
  using error::error;
};

struct membership_error : math_error {
  using math_error::math_error;
};

struct not_sublist_error : math_error {
  using math_error::math_error;
};

struct subgroup_error : math_error {
  using math_error::math_error;
};

struct identity_not_first_error : math_error {
  using math_error::math_error;
};

struct not_closed_error : math_error {
  using math_error::math_error;
};

struct guard_error : math_error {
  using math_error::math_error;
};

struct obligation_error : math_error {
  obligation_error(const std::string& obligation, const std::string& what)
      : math_error(what), obligation(obligation) {}
  std::string obligation;
};

struct not_normal_error : math_error {
  using math_error::math_error;
};

struct not_conjugate_error : math_error {
  using math_error::math_error;
};

struct non_prime_error : math_error {
  using math_error::math_error;
};

struct divisibility_error : math_error {
  using math_error::math_error;
};

struct division_by_zero_error : math_error {
  using math_error::math_error;
};

struct length_mismatch_error : math_error {
  using math_error::math_error;
};

struct resource_limit_error : math_error {
  using math_error::math_error;
};

} // namespace cayley
