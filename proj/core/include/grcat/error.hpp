#pragma once

#include <stdexcept>
#include <string>

namespace grcat {

enum class errc {
  not_associative,
  no_identity,
  no_inverse,
  not_latin_square,
  group_too_large,
  not_an_action,
  not_additive,
  source_mismatch,
  degree_too_high,
  not_a_cocycle,
  brute_force_too_large,
  invalid_pair,
  signature_mismatch,
  centrality_violation,
  obstruction_nonzero,
  not_a_groupoid,
  unit_endos_not_abelian,
  non_invertible_object,
  parse_error,
  bad_reference,
  bad_argument,
};

const char* errc_name(errc c);

/// All library failures are reported through this exception. code() lets
/// callers (and tests) dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace grcat
