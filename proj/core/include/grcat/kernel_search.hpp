#pragma once

#include "grcat/catalog.hpp"
#include "grcat/kernel.hpp"

namespace grcat {

struct KernelMatch {
  std::string group_name;
  int catalog_index = -1;
  std::vector<int> psi_image;  // images of pi elements in Out(G)
  std::vector<int> theta;      // carrier index of T -> center carrier index of G
};

struct KernelSearchResult {
  std::vector<KernelMatch> matches;        // sorted by (catalog_index, psi)
  std::vector<std::string> skipped;        // entries the guard refused (with reason)
};

/// Exhaustive search over the catalog for abstract kernels realizing the
/// given type: center isomorphic to the coefficients as a module (under some
/// identification theta compatible with psi) and kernel obstruction class
/// equal to the class of xi under theta. An empty match list is a result,
/// not an error.
KernelSearchResult kernel_search(const GrType& t, const std::vector<NamedGroup>& catalog);

}  // namespace grcat
