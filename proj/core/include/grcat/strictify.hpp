#pragma once

#include "grcat/kernel.hpp"

namespace grcat {

/// The strict Gr-category of an abstract kernel: objects are pairs (x, alpha)
/// with alpha an automorphism in the coset psi(x), arrows are (x, c) with c
/// an arrow of the automorphism category, tensor componentwise. Validated.
StrictGrCat strictify(const AbstractKernel& k);

/// strictify() plus the pair decomposition of objects and arrows.
struct StrictifiedKernel {
  StrictGrCat cat;
  std::vector<std::pair<int, int>> object_pairs;  // (pi element, aut index)
  std::vector<std::pair<int, int>> arrow_pairs;   // (pi element, aut-category arrow)
};
StrictifiedKernel strictify_with_maps(const AbstractKernel& k);

/// One named check of the strictification report, with the witnessing data.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// End-to-end verification that the strictified kernel reduces back to the
/// expected type: the object classes give Pi, the unit endomorphisms give
/// Z(G), the reduced cocycle agrees with the pulled-back group cocycle up to
/// a coboundary, and the kernel obstruction class matches the pulled-back
/// class.
struct StrictificationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  int passed_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed;
    return n;
  }
};

StrictificationReport verify_strictification(const AbstractKernel& k);

/// Pullback of the reduced-type cocycle of G along psi, over the same module
/// as kernel_obstruction.
Cochain pulled_back_group_cocycle(const AbstractKernel& k);

}  // namespace grcat
