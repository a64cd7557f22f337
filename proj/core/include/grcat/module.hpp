#pragma once

#include <memory>
#include <vector>

#include "grcat/abelian.hpp"
#include "grcat/fingroup.hpp"

namespace grcat {

/// A finite abelian group with a validated left action of a finite group.
/// Actions are stored as generator images and densified into per-element
/// permutation tables of the carrier. Immutable.
class PiModule {
 public:
  /// gen_images[x][j] = image of the j-th carrier generator under x.
  static PiModule make(FiniteGroup group, AbelianGroup carrier,
                       std::vector<std::vector<AbelianGroup::Elem>> gen_images);
  static PiModule trivial(FiniteGroup group, AbelianGroup carrier);

  const FiniteGroup& group() const { return group_; }
  const AbelianGroup& carrier() const { return carrier_; }

  uint32_t act(int x, uint32_t elem_index) const { return act_[x][elem_index]; }
  AbelianGroup::Elem act_elem(int x, const AbelianGroup::Elem& a) const {
    return carrier_.element_at(act(x, carrier_.index_of(a)));
  }
  const std::vector<std::vector<AbelianGroup::Elem>>& generator_images() const {
    return gen_images_;
  }
  bool is_trivial_action() const;

  bool operator==(const PiModule& o) const;
  bool operator!=(const PiModule& o) const { return !(*this == o); }

 private:
  PiModule() = default;
  FiniteGroup group_;
  AbelianGroup carrier_{std::vector<int64_t>{}};
  std::vector<std::vector<AbelianGroup::Elem>> gen_images_;
  std::vector<std::vector<uint32_t>> act_;
};

using ModulePtr = std::shared_ptr<const PiModule>;

/// The target module seen through phi: action (x, a) -> (phi x) a.
PiModule pullback_module(const GroupHom& phi, const PiModule& m);

/// Every module structure of `pi` on `carrier` (one per homomorphism
/// pi -> Aut(carrier)), in a deterministic order.
std::vector<PiModule> all_modules(const FiniteGroup& pi, const AbelianGroup& carrier);

}  // namespace grcat
