#pragma once

#include <map>
#include <optional>
#include <vector>

#include "grcat/cochain.hpp"
#include "grcat/snf.hpp"

namespace grcat {

struct CohomologyGroup {
  int degree = 0;
  std::vector<int64_t> invariant_factors;  // ascending divisibility chain, no 1s
  std::vector<Cochain> representatives;    // one cocycle per cyclic factor
  int64_t order() const {
    int64_t n = 1;
    for (int64_t d : invariant_factors) n *= d;
    return n;
  }
  std::string describe() const;
};

enum class CohomologyMethod { snf, brute_force };

/// Shared per-module state for cohomology computations: integer coboundary
/// matrices, their factorizations and enumerated coboundary subgroups are
/// built once and reused.
class CohomologyContext {
 public:
  explicit CohomologyContext(ModulePtr module);

  const ModulePtr& module() const { return module_; }

  /// A normalized alpha with d(alpha) = z, or nullopt when z is not a
  /// coboundary. z must be a cocycle of degree 1..3 (errc::not_a_cocycle).
  std::optional<Cochain> solve_coboundary(const Cochain& z);

  /// H^degree (degree 0..3). brute_force requires |A|^(|G|^degree) <= bound.
  CohomologyGroup group(int degree, CohomologyMethod method,
                        int64_t brute_bound = kDefaultBruteBound);

  /// One cocycle per cohomology class (lexicographically least within the
  /// class whenever the coboundary subgroup is small enough to enumerate).
  std::vector<Cochain> classes(int degree, CohomologyMethod method = CohomologyMethod::snf,
                               int64_t brute_bound = kDefaultBruteBound);

  /// All normalized cocycles of the given degree, enumerated through the
  /// cocycle lattice (no brute-force bound).
  std::vector<Cochain> all_cocycles(int degree);

  static constexpr int64_t kDefaultBruteBound = int64_t{1} << 20;
  static constexpr size_t kLexEnumerationBound = size_t{1} << 16;

 private:
  ModulePtr module_;

  size_t coords(int degree) const;      // (|G|-1)^degree * rank
  std::vector<int64_t> moduli(int degree) const;
  const IMat& delta_matrix(int degree);          // degree -> degree+1
  const SmithForm& solver(int degree);           // factorization of [delta_{n-1} | diag M_n]
  const std::vector<std::vector<uint32_t>>& coboundary_subgroup(int degree, bool& enumerable);

  Cochain from_integer_vector(int degree, const std::vector<bigint>& v) const;
  std::vector<bigint> to_integer_vector(const Cochain& c) const;
  Cochain lex_minimize(const Cochain& z);

  CohomologyGroup group_snf(int degree);
  CohomologyGroup group_brute(int degree, int64_t bound);

  std::map<int, IMat> delta_;
  std::map<int, SmithForm> solver_;
  std::map<int, std::vector<std::vector<uint32_t>>> cobound_;
  std::map<int, bool> cobound_enumerable_;
};

/// One-shot wrappers.
std::optional<Cochain> solve_coboundary(const Cochain& z);
CohomologyGroup cohomology_group(const ModulePtr& module, int degree, CohomologyMethod method,
                                 int64_t brute_bound = CohomologyContext::kDefaultBruteBound);
std::vector<Cochain> classes_of(const ModulePtr& module, int degree);

}  // namespace grcat
