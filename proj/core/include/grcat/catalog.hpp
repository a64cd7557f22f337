#pragma once

#include <string>
#include <vector>

#include "grcat/fingroup.hpp"

namespace grcat {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Every group of order <= 16 up to isomorphism (42 entries), built from
/// cyclic, dihedral, dicyclic, direct/semidirect products and one central
/// product, ordered by (order, name).
const std::vector<NamedGroup>& small_group_catalog();

}  // namespace grcat
