#pragma once

#include "grcat/aut.hpp"
#include "grcat/strict_cat.hpp"

namespace grcat {

/// The strict Gr-category of a group: objects are automorphisms, an arrow
/// c: alpha -> beta is a group element with alpha = (conjugation by c) after
/// beta, composition of c then d is the product cd, tensor is composition on
/// objects and c ot d = c * alpha'(d) on arrows (alpha' the target of c).
/// Arrows are indexed as (c, beta) pairs: arrow id = c * |Aut| + beta.
struct AutCategory {
  StrictGrCat cat;
  /// arrow id for the pair (group element c, target object beta)
  int arrow_of(int c, int beta) const { return c * n_aut + beta; }
  int elem_of_arrow(int f) const { return f / n_aut; }
  int target_of_arrow(int f) const { return f % n_aut; }
  int n_aut = 0;
};

/// Builds and validates the category.
AutCategory aut_gr_category(const AutData& aut);

}  // namespace grcat
