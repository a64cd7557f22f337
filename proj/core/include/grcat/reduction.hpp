#pragma once

#include <cstdint>

#include "grcat/aut.hpp"
#include "grcat/gr_type.hpp"
#include "grcat/strict_cat.hpp"

namespace grcat {

/// How stick representatives and isomorphisms are chosen. The deterministic
/// policy takes the first object of each class in label order (the unit
/// class is always represented by the unit object, which keeps the resulting
/// cocycle normalized) and the first arrow from the representative. The
/// randomized policy exists to test that the cohomology class does not
/// depend on these choices.
enum class StickPolicy { deterministic, randomized };

struct Reduction {
  GrType type;
  std::vector<int> class_of_object;    // object -> group element of the base
  std::vector<int> rep_object;         // group element -> representative object
  std::vector<int> iso_from_rep;       // object X -> arrow rep(class X) -> X
  std::vector<int> pi1_arrow_of_index; // carrier index -> unit endo arrow
};

/// Reduces a finite strict Gr-category to its skeletal type. Throws
/// errc::unit_endos_not_abelian / errc::not_a_groupoid /
/// errc::non_invertible_object on malformed input.
Reduction reduce_strict(const StrictGrCat& c, StickPolicy policy = StickPolicy::deterministic,
                        uint64_t seed = 0);

/// The reduced type of the automorphism category of a group, computed
/// directly: base = Out(G), carrier = Z(G), action through the section, and
/// the associativity cocycle assembled from the section's failure to be
/// multiplicative. Throws errc::centrality_violation if an assembled value
/// leaves the center.
GrType reduced_type_of_group(const AutData& aut);

}  // namespace grcat
