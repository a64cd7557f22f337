#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "grcat/abelian.hpp"
#include "grcat/aut.hpp"
#include "grcat/catalog.hpp"
#include "grcat/error.hpp"
#include "grcat/fingroup.hpp"
#include "grcat/module.hpp"

using namespace grcat;

namespace {

// Composition table of S3 built independently from permutation composition.
std::vector<std::vector<int>> s3_table_oracle(std::vector<std::vector<int>>& perms) {
  perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> prod(3);
      for (int i = 0; i < 3; ++i) prod[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  return table;
}

}  // namespace

TEST_CASE("make_group validates the axioms") {
  CHECK(trivial_group().order() == 1);
  FiniteGroup z2 = FiniteGroup::from_table({"0", "1"}, {{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inv(1) == 1);

  std::vector<std::vector<int>> perms;
  FiniteGroup s3 = FiniteGroup::from_table({"e", "r", "rr", "a", "b", "c"},
                                           s3_table_oracle(perms));
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({"a", "b"}, {{0, 0}, {1, 1}}),
                       doctest::Contains("NotLatinSquare"), Error);
  // A loop (identity + Latin square) that is not associative.
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({"0", "1", "2", "3", "4"}, loop),
                       doctest::Contains("NotAssociative"), Error);
  // Subtraction mod 3: a Latin square with no identity row.
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({"0", "1", "2"},
                                               {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}),
                       doctest::Contains("NoIdentity"), Error);
}

TEST_CASE("permutation closure enumerates the generated group") {
  FiniteGroup s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, 3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  FiniteGroup a4 = FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4);
  CHECK(a4.order() == 12);
}

TEST_CASE("constructors give the expected groups") {
  CHECK(cyclic_group(6).element_order(1) == 6);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dicyclic_group(2).order() == 8);
  // The quaternion group has a unique involution.
  FiniteGroup q8 = dicyclic_group(2);
  int involutions = 0;
  for (int i = 0; i < 8; ++i) involutions += q8.element_order(i) == 2;
  CHECK(involutions == 1);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);

  std::vector<int> coset;
  FiniteGroup q = quotient_group(cyclic_group(4), {0, 2}, &coset);
  CHECK(q.order() == 2);
  CHECK(coset[0] == coset[2]);
  CHECK(coset[1] == coset[3]);
}

TEST_CASE("generating sets are small and generate") {
  for (const auto& entry : small_group_catalog()) {
    if (entry.group.order() > 12) continue;
    auto gens = entry.group.generating_set();
    CHECK(static_cast<int>(entry.group.closure(gens).size()) == entry.group.order());
  }
  CHECK(cyclic_group(6).generating_set().size() == 1);
}

TEST_CASE("automorphism groups match the brute-force oracle up to order 8") {
  for (const auto& entry : small_group_catalog()) {
    if (entry.group.order() > 8) continue;
    AutData aut = automorphism_data(entry.group);
    auto oracle = brute_force_automorphisms(entry.group);
    CHECK_MESSAGE(aut.aut.order() == static_cast<int>(oracle.size()), entry.name);
    // Closure: composing any two listed automorphisms lands on the table.
    for (int i = 0; i < aut.aut.order(); ++i)
      for (int j = 0; j < aut.aut.order(); ++j) {
        std::vector<int> comp(entry.group.order());
        for (int x = 0; x < entry.group.order(); ++x) comp[x] = aut.maps[i][aut.maps[j][x]];
        CHECK(comp == aut.maps[aut.aut.mul(i, j)]);
      }
  }
}

TEST_CASE("specific automorphism groups") {
  CHECK(automorphism_data(trivial_group()).aut.order() == 1);

  AutData z4 = automorphism_data(cyclic_group(4));
  CHECK(z4.aut.order() == 2);
  CHECK(z4.maps[1] == std::vector<int>{0, 3, 2, 1});  // inversion

  AutData s3 = automorphism_data(dihedral_group(3));
  CHECK(s3.aut.order() == 6);
  CHECK(s3.inner.size() == 6);  // complete group
  CHECK(s3.out.order() == 1);
}

TEST_CASE("inner automorphisms and the conjugation map") {
  AutData s3 = automorphism_data(dihedral_group(3));
  const FiniteGroup& g = s3.base;
  // mu is a homomorphism with kernel the center (trivial here).
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      CHECK(s3.aut.mul(s3.mu[a], s3.mu[b]) == s3.mu[g.mul(a, b)]);
  int mu_trivial = 0;
  for (int a = 0; a < g.order(); ++a) mu_trivial += s3.mu[a] == 0;
  CHECK(mu_trivial == 1);

  AutData z4 = automorphism_data(cyclic_group(4));
  for (int a = 0; a < 4; ++a) CHECK(z4.mu[a] == 0);
  CHECK(z4.inner.size() == 1);
  CHECK(z4.out.order() == 2);

  AutData q8 = automorphism_data(dicyclic_group(2));
  CHECK(q8.aut.order() == 24);
  CHECK(q8.inner.size() == 4);
  CHECK(q8.out.order() == 6);
  // Kernel of mu = center.
  AbelianStructure z = center(q8.base);
  for (int a = 0; a < 8; ++a)
    CHECK((q8.mu[a] == 0) == (z.index_of_ambient[a] >= 0));
}

TEST_CASE("outer quotient section") {
  for (const auto& entry : small_group_catalog()) {
    if (entry.group.order() > 8) continue;
    AutData aut = automorphism_data(entry.group);
    CHECK(aut.section[aut.out.identity()] == 0);
    // section(s) section(t) and section(st) lie in the same coset.
    for (int s = 0; s < aut.out.order(); ++s)
      for (int t = 0; t < aut.out.order(); ++t) {
        int prod = aut.compose(aut.section[s], aut.section[t]);
        CHECK(aut.coset_of[prod] == aut.out.mul(s, t));
      }
  }
}

TEST_CASE("centers") {
  AbelianStructure zq8 = center(dicyclic_group(2));
  CHECK(zq8.group.invariant_factors() == std::vector<int64_t>{2});
  CHECK(center(dihedral_group(3)).group.order() == 1);
  AbelianStructure zc6 = center(cyclic_group(6));
  CHECK(zc6.group.invariant_factors() == std::vector<int64_t>{6});
  // Embedding really is a homomorphism onto the subgroup.
  FiniteGroup c6 = cyclic_group(6);
  for (uint32_t a = 0; a < 6; ++a)
    for (uint32_t b = 0; b < 6; ++b) {
      int prod = c6.mul(zc6.ambient_of_index[a], zc6.ambient_of_index[b]);
      CHECK(prod == zc6.ambient_of_index[zc6.group.add_idx(a, b)]);
    }
}

TEST_CASE("abelian groups in invariant-factor form") {
  AbelianGroup a({2, 4});
  CHECK(a.order() == 8);
  CHECK(a.index_of(a.add({1, 3}, {1, 2})) == a.index_of({0, 1}));
  CHECK(a.neg({1, 1}) == AbelianGroup::Elem{1, 3});
  CHECK(a.element_order({0, 2}) == 2);
  CHECK(a.describe() == "Z/2 x Z/4");
  CHECK(AbelianGroup({}).order() == 1);
  CHECK_THROWS_AS(AbelianGroup({4, 2}), Error);  // not a divisibility chain
  CHECK_THROWS_AS(AbelianGroup({1, 2}), Error);  // factors must be >= 2
  // Index order is lexicographic on residue vectors.
  CHECK(a.index_of({0, 3}) < a.index_of({1, 0}));

  // Structure recovery from a table: Z/2 x Z/4 as a finite group.
  FiniteGroup t = a.as_finite_group();
  std::vector<int> all(t.order());
  std::iota(all.begin(), all.end(), 0);
  AbelianStructure st = abelian_structure(t, all);
  CHECK(st.group.invariant_factors() == std::vector<int64_t>{2, 4});
}

TEST_CASE("module validation") {
  FiniteGroup z2 = cyclic_group(2);
  AbelianGroup z4({4});

  PiModule neg = PiModule::make(z2, z4, {{{1}}, {{3}}});
  CHECK(neg.act(1, z4.index_of({1})) == z4.index_of({3}));
  CHECK_FALSE(neg.is_trivial_action());
  CHECK(PiModule::trivial(z2, z4).is_trivial_action());

  // Identity must act trivially.
  CHECK_THROWS_WITH_AS(PiModule::make(z2, z4, {{{3}}, {{1}}}),
                       doctest::Contains("NotAnAction"), Error);
  // Non-multiplicative assignments are rejected.
  CHECK_THROWS_AS(PiModule::make(cyclic_group(4), z4, {{{1}}, {{3}}, {{1}}, {{1}}}), Error);
}

TEST_CASE("pullback modules") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z4 = cyclic_group(4);
  AbelianGroup a4({4});
  PiModule neg = PiModule::make(z2, a4, {{{1}}, {{3}}});

  PiModule same = pullback_module(GroupHom::identity(z2), neg);
  CHECK(same == neg);

  PiModule triv = pullback_module(GroupHom::trivial(z2, z2), neg);
  CHECK(triv.is_trivial_action());

  // Z/4 -> Z/2 surjection: odd residues act by negation.
  GroupHom surj(z4, z2, {0, 1, 0, 1});
  PiModule pulled = pullback_module(surj, neg);
  for (int x : {1, 3}) CHECK(pulled.act(x, a4.index_of({1})) == a4.index_of({3}));
  for (int x : {0, 2}) CHECK(pulled.act(x, a4.index_of({1})) == a4.index_of({1}));

  CHECK_THROWS_AS(pullback_module(GroupHom::identity(z4), neg), Error);
}

TEST_CASE("all_modules enumerates the action homomorphisms") {
  CHECK(all_modules(cyclic_group(2), AbelianGroup({2})).size() == 1);
  CHECK(all_modules(cyclic_group(2), AbelianGroup({3})).size() == 2);
  CHECK(all_modules(cyclic_group(3), AbelianGroup({4})).size() == 1);
  CHECK(all_modules(direct_product(cyclic_group(2), cyclic_group(2)), AbelianGroup({4})).size() ==
        4);
}

TEST_CASE("catalog: 42 groups, pairwise non-isomorphic") {
  const auto& cat = small_group_catalog();
  CHECK(cat.size() == 42);
  std::map<int, int> by_order;
  for (const auto& e : cat) by_order[e.group.order()]++;
  CHECK(by_order[8] == 5);
  CHECK(by_order[12] == 5);
  CHECK(by_order[16] == 14);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].group.order() != cat[j].group.order()) continue;
      CHECK_MESSAGE(!find_isomorphism(cat[i].group, cat[j].group).has_value(),
                    cat[i].name << " vs " << cat[j].name);
    }
}

TEST_CASE("isomorphism search") {
  CHECK(!find_isomorphism(dihedral_group(4), dicyclic_group(2)).has_value());
  CHECK(find_isomorphism(dihedral_group(4), dihedral_group(4)).has_value());
  // Hom counting: |Hom(Z2, S3)| = 1 + #involutions = 4.
  CHECK(all_homomorphisms(cyclic_group(2), dihedral_group(3)).size() == 4);
}

TEST_CASE("group homomorphisms") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  GroupHom surj = GroupHom::from_generator_images(z4, z2, {1}, {1});
  CHECK(surj.image() == std::vector<int>{0, 1, 0, 1});
  CHECK_FALSE(surj.is_bijective());
  CHECK(GroupHom::identity(z4).is_bijective());
  CHECK_THROWS_WITH_AS(GroupHom(z2, z2, {0, 0, 0}), doctest::Contains("InvalidPair"), Error);
  CHECK_THROWS_AS(GroupHom(z4, z2, {0, 1, 1, 0}), Error);  // not multiplicative
}
