#pragma once

#include <vector>

#include "grcat/abelian.hpp"
#include "grcat/fingroup.hpp"

namespace grcat {

/// Aut(G), Inn(G), Out(G) = Aut/Inn and the conjugation map, computed once
/// and bundled. The automorphism list has the identity automorphism at
/// index 0 and is otherwise sorted by image vector; `section` maps each
/// Out element to a coset-representative automorphism with
/// section(identity) = identity.
struct AutData {
  FiniteGroup base;
  FiniteGroup aut;                      // composition table: aut.mul(i,j) = maps[i] after maps[j]
  std::vector<std::vector<int>> maps;   // maps[i][x] = image of x under automorphism i
  std::vector<int> mu;                  // mu[c] = index of x -> c x c^-1
  std::vector<int> inner;               // sorted aut indices of Inn(G)
  FiniteGroup out;                      // Aut/Inn
  std::vector<int> coset_of;            // aut index -> out element
  std::vector<int> section;             // out element -> aut index (least in coset)

  int apply(int aut_index, int x) const { return maps[aut_index][x]; }
  /// Index of maps[i] after maps[j] (i.e. x -> maps[i][maps[j][x]]).
  int compose(int i, int j) const { return aut.mul(i, j); }
  int inverse(int i) const { return aut.inv(i); }
};

/// Automorphism group by generator-image backtracking. Guarded: throws
/// errc::group_too_large when |G| > 64 or when the automorphism count
/// exceeds `aut_order_limit` (the composition table would not be desk-scale).
AutData automorphism_data(const FiniteGroup& g, int aut_order_limit = 5000);

/// Oracle: all automorphisms by filtering every bijection; |G| <= 8 only.
std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroup& g);

}  // namespace grcat
