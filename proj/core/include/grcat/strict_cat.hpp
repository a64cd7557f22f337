#pragma once

#include <string>
#include <vector>

#include "grcat/fingroup.hpp"

namespace grcat {

/// A finite strict Gr-category as explicit tables: labeled objects and
/// arrows, a partial composition table, a strictly associative and unital
/// tensor on both levels, and invertible objects. `validate()` checks every
/// structural invariant exhaustively.
class StrictGrCat {
 public:
  struct Arrow {
    int src;
    int dst;
    std::string name;
  };

  int unit = 0;
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> obj_tensor;   // objects x objects, row-major
  std::vector<int> arr_tensor;   // arrows x arrows, row-major
  std::vector<int> compose_tab;  // compose_tab[f*A+g] = g.f (f first), -1 if not composable
  std::vector<int> id_arrow;     // per object

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_arr() const { return static_cast<int>(arrows.size()); }

  int tensor_obj(int x, int y) const { return obj_tensor[static_cast<size_t>(x) * n_obj() + y]; }
  int tensor_arr(int f, int g) const { return arr_tensor[static_cast<size_t>(f) * n_arr() + g]; }
  /// Composite "f then g" (g.f); -1 when dst(f) != src(g).
  int compose(int f, int g) const { return compose_tab[static_cast<size_t>(f) * n_arr() + g]; }

  /// Arrows from x to y.
  std::vector<int> hom(int x, int y) const;
  /// Two-sided inverse of an arrow (validated categories only).
  int arrow_inverse(int f) const;

  /// Exhaustive structural validation; throws on the first violated
  /// invariant (errc::not_a_groupoid, errc::non_invertible_object, ...).
  void validate() const;

  /// Human-readable diagnostic listing (objects, hom table, tensor table).
  std::string dump() const;
};

}  // namespace grcat
