#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grcat/aut.hpp"
#include "grcat/aut_category.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/gr_type.hpp"
#include "grcat/reduction.hpp"

namespace grcat {

/// Everything about one group that kernel computations reuse: automorphism
/// data, center, and (lazily) the automorphism category and the reduced
/// type. Kernels over the same group share one instance.
class GroupData {
 public:
  explicit GroupData(FiniteGroup g);

  const FiniteGroup& group() const { return group_; }
  const AutData& aut() const { return aut_; }
  const AbelianStructure& center() const { return center_; }
  const AutCategory& aut_category() const;
  const GrType& reduced_type() const;

 private:
  FiniteGroup group_;
  AutData aut_;
  AbelianStructure center_;
  mutable std::once_flag cat_once_, type_once_;
  mutable std::optional<AutCategory> cat_;
  mutable std::optional<GrType> type_;
};

using GroupDataPtr = std::shared_ptr<const GroupData>;

/// An abstract kernel (Pi, G, psi) with psi landing in Out(G).
struct AbstractKernel {
  FiniteGroup pi;
  GroupDataPtr gd;
  GroupHom psi;  // pi -> gd->aut().out

  static AbstractKernel make(FiniteGroup pi, GroupDataPtr gd, const std::vector<int>& psi_image);
};

/// A lift (phi, f) of an abstract kernel: phi = section after psi, and f
/// chooses a conjugator realizing phi(x) phi(y) = mu_{f(x,y)} phi(xy).
struct FactorSet {
  std::vector<int> phi;             // pi element -> Aut(G) index
  std::vector<std::vector<int>> f;  // pi x pi -> G element
};

enum class TieBreak { lexicographic, randomized };

/// Builds a normalized factor set; TieBreak::randomized picks uniformly
/// among the valid conjugators (used to test class invariance).
FactorSet factor_set(const AbstractKernel& k, TieBreak tie = TieBreak::lexicographic,
                     uint64_t seed = 0);
/// Checks the FactorSet invariants, throwing errc::invalid_pair on failure.
void validate_factor_set(const AbstractKernel& k, const FactorSet& fs);

/// The center of G as a Pi-module through the factor-set lift.
ModulePtr center_module(const AbstractKernel& k);

/// The obstruction 3-cocycle over Z(G): the central defect of
/// phi(x)[f(y,z)] f(x,yz) = k(x,y,z) f(x,y) f(xy,z).
Cochain kernel_obstruction(const AbstractKernel& k, const FactorSet& fs);
Cochain kernel_obstruction(const AbstractKernel& k);

/// Crossed product G x Pi with multiplication
/// (a,x)(b,y) = (a phi(x)(b) f(x,y), xy). The factor set is first adjusted
/// by a coboundary witness so the obstruction cochain vanishes identically;
/// throws errc::obstruction_nonzero when the class is nonzero.
FiniteGroup build_extension(const AbstractKernel& k, FactorSet fs);

}  // namespace grcat
