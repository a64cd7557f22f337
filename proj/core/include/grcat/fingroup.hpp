#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grcat/error.hpp"

namespace grcat {

/// A finite group stored by its full multiplication table. Elements are
/// indices 0..order-1; table(i,j) is the index of i*j. Immutable after
/// construction; every constructor validates the group axioms.
class FiniteGroup {
 public:
  /// Empty placeholder; assign a real group before use.
  FiniteGroup() = default;

  static FiniteGroup from_table(std::vector<std::string> names,
                                const std::vector<std::vector<int>>& table);

  /// Group generated by permutations inside Sym(degree); elements are
  /// enumerated by closure in lexicographic discovery order starting from
  /// the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       int degree);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table_flat() const { return table_; }

  int element_order(int a) const;
  bool is_abelian() const;
  /// x * a * x^-1
  int conj(int x, int a) const { return mul(mul(x, a), inv(x)); }

  /// Small generating set found greedily (each step adds the element whose
  /// closure with the current set is largest, ties by least index).
  std::vector<int> generating_set() const;

  /// Elements of the subgroup generated by `gens`, sorted.
  std::vector<int> closure(const std::vector<int>& gens) const;

  /// Structural equality (tables and identity; names ignored).
  bool same_table(const FiniteGroup& other) const;

  /// Sorted multiset of element orders; cheap isomorphism invariant.
  std::vector<int> order_statistics() const;

  std::vector<std::vector<int>> table_rows() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inv_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
/// Dihedral group with 2n elements (n >= 1).
FiniteGroup dihedral_group(int n);
/// Dicyclic group with 4n elements (n >= 1); n = 2 gives the quaternion group.
FiniteGroup dicyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Semidirect product N x| H. `action[h]` is the automorphism of N (image
/// vector) by which h acts; must be a homomorphism H -> Aut(N).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action);
/// Quotient by a normal subgroup given by its sorted element list.
/// coset_of, when non-null, receives the coset index of every element.
FiniteGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal_elements,
                           std::vector<int>* coset_of = nullptr);

/// A homomorphism between finite groups, stored as the image of every source
/// element. Validated on construction.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<int> image);

  static GroupHom identity(const FiniteGroup& g);
  static GroupHom trivial(const FiniteGroup& source, const FiniteGroup& target);
  /// Extends generator images; throws errc::invalid_pair if no homomorphism
  /// has those images.
  static GroupHom from_generator_images(const FiniteGroup& source, const FiniteGroup& target,
                                        const std::vector<int>& gens,
                                        const std::vector<int>& images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  int apply(int a) const { return image_[a]; }
  const std::vector<int>& image() const { return image_; }
  bool is_bijective() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<int> image_;
};

/// First isomorphism found by generator-image backtracking, as an image
/// vector, or nullopt. Uses order statistics as a fast negative filter.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Every homomorphism a -> b, each as an image vector, sorted.
std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace grcat
