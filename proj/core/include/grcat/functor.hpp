#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grcat/cohomology.hpp"
#include "grcat/gr_type.hpp"

namespace grcat {

/// A functor between skeletal types given by a homomorphism on objects and
/// an equivariant additive map on coefficients, optionally with a monoidal
/// structure (a normalized 2-cochain over the pulled-back module).
struct FunctorData {
  GrType source;
  GrType target;
  GroupHom phi;
  std::vector<AbelianGroup::Elem> f_gen_images;  // image of each source carrier generator
  ModulePtr pulled_back;                         // target coefficients as a source-group module
  std::optional<Cochain> g;                      // monoidal structure over pulled_back

  uint32_t apply_f(uint32_t source_carrier_index) const;
  AbelianGroup::Elem apply_f_elem(const AbelianGroup::Elem& a) const;
};

struct PairReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that phi_image defines a homomorphism, f_gen_images an additive
/// map, and that f is equivariant: f(x a) = phi(x) f(a).
PairReport validate_pair(const GrType& source, const GrType& target,
                         const std::vector<int>& phi_image,
                         const std::vector<AbelianGroup::Elem>& f_gen_images);

/// Builds a validated functor; throws errc::invalid_pair on any violation.
/// When g is given it must satisfy the monoidal equation (checked).
FunctorData make_functor(const GrType& source, const GrType& target,
                         const std::vector<int>& phi_image,
                         const std::vector<AbelianGroup::Elem>& f_gen_images,
                         std::optional<Cochain> g = std::nullopt);

/// k(x,y,z) = xi'(phi x, phi y, phi z) - f(xi(x,y,z)); always a normalized
/// 3-cocycle over the pulled-back module (asserted).
Cochain obstruction(const FunctorData& f);

/// A monoidal structure g with dg = obstruction when the class vanishes.
std::optional<Cochain> realizable(const FunctorData& f);

struct MonoidalReport {
  std::vector<std::vector<int>> equation_failures;  // offending triples
  std::vector<std::vector<int>> unit_failures;      // offending pairs
  bool ok() const { return equation_failures.empty() && unit_failures.empty(); }
};

/// Verifies phi(x) g(y,z) + g(x,yz) + f(xi(x,y,z)) =
/// xi'(phi x,phi y,phi z) + g(x,y) + g(xy,z) on all triples, plus unit
/// compatibility g(1,y) = g(x,1) = 0.
MonoidalReport check_monoidal(const FunctorData& f);

/// One functor per congruence class of monoidal structures on (phi, f);
/// empty when the obstruction class does not vanish.
std::vector<FunctorData> classify(const GrType& source, const GrType& target,
                                  const std::vector<int>& phi_image,
                                  const std::vector<AbelianGroup::Elem>& f_gen_images);

/// A natural-transformation witness alpha with g - g' = d(alpha), or nullopt.
/// Both functors must share (phi, f) and the types.
std::optional<Cochain> congruent(const FunctorData& f, const FunctorData& fprime);

/// All monoidal automorphisms of a monoidal functor: the normalized
/// 1-cocycles over the pulled-back module.
std::vector<Cochain> functor_automorphisms(const FunctorData& f);

}  // namespace grcat
