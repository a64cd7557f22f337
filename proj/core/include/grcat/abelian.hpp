#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grcat/fingroup.hpp"

namespace grcat {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k,
/// each >= 2 (empty list = trivial group). Elements are residue vectors;
/// they also carry a dense index (mixed radix, first coordinate most
/// significant, so index order equals lexicographic order on vectors).
class AbelianGroup {
 public:
  using Elem = std::vector<int64_t>;

  explicit AbelianGroup(std::vector<int64_t> invariant_factors);

  const std::vector<int64_t>& invariant_factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int64_t order() const { return order_; }

  Elem zero() const { return Elem(factors_.size(), 0); }
  Elem reduce(Elem v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scalar_mul(int64_t c, const Elem& a) const;

  uint32_t index_of(const Elem& v) const;
  Elem element_at(uint32_t idx) const;

  uint32_t add_idx(uint32_t a, uint32_t b) const;
  uint32_t neg_idx(uint32_t a) const;
  uint32_t sub_idx(uint32_t a, uint32_t b) const { return add_idx(a, neg_idx(b)); }

  int64_t element_order(const Elem& v) const;

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  std::string describe() const;  // e.g. "Z/2 x Z/4", "0" when trivial

  /// The same group as a FiniteGroup (addition table), element i = element_at(i).
  FiniteGroup as_finite_group() const;

 private:
  std::vector<int64_t> factors_;
  std::vector<int64_t> strides_;
  int64_t order_ = 1;
};

/// Structure of a finite abelian group presented as a sub-multiplication-table
/// of an ambient group: canonical invariant-factor group plus the translation
/// maps in both directions.
struct AbelianStructure {
  AbelianGroup group;
  std::vector<int> ambient_of_index;  // carrier index -> ambient element
  std::vector<int> index_of_ambient;  // ambient element -> carrier index, -1 outside
};

/// Decomposes the subgroup spanned by `elements` (which must be closed,
/// contain the identity and be commutative) of `ambient`.
AbelianStructure abelian_structure(const FiniteGroup& ambient, const std::vector<int>& elements);

/// Center of g with its decomposition and embedding.
AbelianStructure center(const FiniteGroup& g);

std::string describe_invariant_factors(const std::vector<int64_t>& factors);

}  // namespace grcat
