#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grcat/cochain.hpp"

namespace grcat {

/// Skeletal categorical-group datum: a group, a module over it and a
/// normalized 3-cocycle giving the associativity constraint. Arrows of the
/// underlying category are pairs (group element, carrier element).
struct GrType {
  ModulePtr module;
  Cochain xi;

  /// Validates that xi is a normalized degree-3 cocycle over the module.
  static GrType make(ModulePtr module, Cochain xi);
  static GrType strict(ModulePtr module);  // xi = 0

  const FiniteGroup& group() const { return module->group(); }
  const AbelianGroup& carrier() const { return module->carrier(); }
};

/// Outcome of checking the pentagon (coboundary of xi vanishes) and the
/// unit/triangle constraint (xi vanishes when the middle argument is the
/// identity) on candidate type data.
struct GrTypeReport {
  std::vector<std::vector<int>> pentagon_failures;       // offending quadruples
  std::vector<std::vector<int>> normalization_failures;  // offending triples
  bool ok() const { return pentagon_failures.empty() && normalization_failures.empty(); }
  std::string summary() const;
};

/// Checks a candidate associativity table given on all |G|^3 tuples as
/// carrier element indices (row-major by tuple).
GrTypeReport validate_gr_type(const ModulePtr& module, const std::vector<uint32_t>& xi_table);
GrTypeReport validate_gr_type(const GrType& t);

/// Arrow tensor in the skeletal category: (s,u) ot (t,v) = (st, u + s v).
std::pair<int, uint32_t> tensor_arrows(const GrType& t, std::pair<int, uint32_t> a,
                                       std::pair<int, uint32_t> b);

}  // namespace grcat
