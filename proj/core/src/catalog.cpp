#include "grcat/catalog.hpp"

#include <algorithm>

namespace grcat {

namespace {

std::vector<NamedGroup> build_catalog() {
  std::vector<NamedGroup> cat;
  auto add = [&](std::string name, FiniteGroup g) { cat.push_back({std::move(name), std::move(g)}); };

  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup c8 = cyclic_group(8);

  add("C1", trivial_group());
  add("C2", c2);
  add("C3", cyclic_group(3));
  add("C4", c4);
  add("C2xC2", direct_product(c2, c2));
  add("C5", cyclic_group(5));
  add("C6", cyclic_group(6));
  add("S3", dihedral_group(3));
  add("C7", cyclic_group(7));
  add("C8", c8);
  add("C4xC2", direct_product(c4, c2));
  add("C2xC2xC2", direct_product(direct_product(c2, c2), c2));
  add("D8", dihedral_group(4));
  add("Q8", dicyclic_group(2));
  add("C9", cyclic_group(9));
  add("C3xC3", direct_product(cyclic_group(3), cyclic_group(3)));
  add("C10", cyclic_group(10));
  add("D10", dihedral_group(5));
  add("C11", cyclic_group(11));
  add("C12", cyclic_group(12));
  add("C6xC2", direct_product(cyclic_group(6), c2));
  add("D12", dihedral_group(6));
  // Alternating group on 4 letters, generated by (0 1 2) and (0 1)(2 3).
  add("A4", FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4));
  add("Dic12", dicyclic_group(3));
  add("C13", cyclic_group(13));
  add("C14", cyclic_group(14));
  add("D14", dihedral_group(7));
  add("C15", cyclic_group(15));

  // Order 16: five abelian groups.
  add("C16", cyclic_group(16));
  add("C8xC2", direct_product(c8, c2));
  add("C4xC4", direct_product(c4, c4));
  add("C4xC2xC2", direct_product(direct_product(c4, c2), c2));
  add("C2xC2xC2xC2", direct_product(direct_product(c2, c2), direct_product(c2, c2)));

  // Order 16: nine nonabelian groups.
  add("D16", dihedral_group(8));
  add("Q16", dicyclic_group(4));
  {
    // Semidihedral: C8 x| C2 with x -> x^3.
    std::vector<int> id8 = {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<int> pow3 = {0, 3, 6, 1, 4, 7, 2, 5};
    add("SD16", semidirect_product(c8, c2, {id8, pow3}));
    // Modular: C8 x| C2 with x -> x^5.
    std::vector<int> pow5 = {0, 5, 2, 7, 4, 1, 6, 3};
    add("M16", semidirect_product(c8, c2, {id8, pow5}));
  }
  add("D8xC2", direct_product(dihedral_group(4), c2));
  add("Q8xC2", direct_product(dicyclic_group(2), c2));
  {
    // C4 x| C4, the generator of the right factor acting by inversion.
    std::vector<int> id4 = {0, 1, 2, 3};
    std::vector<int> inv4 = {0, 3, 2, 1};
    add("C4byC4", semidirect_product(c4, c4, {id4, inv4, id4, inv4}));
    // (C4 x C2) x| C2 with a -> ab, b -> b  (elements (x,y) encoded x*2+y).
    std::vector<int> id42 = {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<int> tau = {0, 1, 3, 2, 4, 5, 7, 6};
    add("C4xC2byC2", semidirect_product(direct_product(c4, c2), c2, {id42, tau}));
  }
  {
    // Central product Q8 o C4 = (Q8 x C4) / <(a^2, 2)>.
    FiniteGroup prod = direct_product(dicyclic_group(2), c4);
    // a^2 is element 2 of Q8; the diagonal central involution is (2, 2).
    int z = 2 * 4 + 2;
    add("Pauli16", quotient_group(prod, {0, z}));
  }

  std::sort(cat.begin(), cat.end(), [](const NamedGroup& a, const NamedGroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.name < b.name;
  });
  return cat;
}

}  // namespace

const std::vector<NamedGroup>& small_group_catalog() {
  static const std::vector<NamedGroup> cat = build_catalog();
  return cat;
}

}  // namespace grcat
