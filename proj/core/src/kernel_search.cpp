#include "grcat/kernel_search.hpp"

#include <algorithm>

#include "grcat/error.hpp"

namespace grcat {

namespace {

// All additive isomorphisms between two abelian groups, as dense index maps.
std::vector<std::vector<int>> abelian_isomorphisms(const AbelianGroup& a, const AbelianGroup& b) {
  if (a.invariant_factors() != b.invariant_factors()) return {};
  FiniteGroup fa = a.as_finite_group();
  FiniteGroup fb = b.as_finite_group();
  std::vector<std::vector<int>> out;
  for (auto& hom : all_homomorphisms(fa, fb)) {
    std::vector<char> seen(hom.size(), 0);
    bool bij = true;
    for (int v : hom) bij = bij && !seen[v]++;
    if (bij) out.push_back(hom);
  }
  return out;
}

}  // namespace

KernelSearchResult kernel_search(const GrType& t, const std::vector<NamedGroup>& catalog) {
  KernelSearchResult result;
  const FiniteGroup& pi = t.group();
  const AbelianGroup& a = t.carrier();

  for (size_t gi = 0; gi < catalog.size(); ++gi) {
    const NamedGroup& entry = catalog[gi];

    // Cheap prefilter before any automorphism work: the center must be
    // isomorphic to the coefficients as an abelian group.
    AbelianStructure z = center(entry.group);
    if (z.group.invariant_factors() != a.invariant_factors()) continue;

    GroupDataPtr gd;
    try {
      gd = std::make_shared<const GroupData>(entry.group);
    } catch (const Error& e) {
      result.skipped.push_back(entry.name + ": " + e.what());
      continue;
    }

    std::vector<std::vector<int>> isos = abelian_isomorphisms(a, gd->center().group);

    for (const std::vector<int>& psi_image : all_homomorphisms(pi, gd->aut().out)) {
      AbstractKernel k = AbstractKernel::make(pi, gd, psi_image);
      ModulePtr km = center_module(k);
      Cochain kobs = kernel_obstruction(k);
      CohomologyContext ctx(km);

      for (const std::vector<int>& theta : isos) {
        // theta must intertwine the actions.
        bool equivariant = true;
        for (int x = 0; x < pi.order() && equivariant; ++x)
          for (int64_t u = 0; u < a.order() && equivariant; ++u)
            equivariant = theta[t.module->act(x, static_cast<uint32_t>(u))] ==
                          static_cast<int>(km->act(x, static_cast<uint32_t>(theta[u])));
        if (!equivariant) continue;

        // Transport xi through theta and compare classes.
        Cochain xi_theta = Cochain::zero(km, 3);
        for (size_t slot = 0; slot < xi_theta.tuples(); ++slot)
          xi_theta.set_by_slot(slot, static_cast<uint32_t>(theta[t.xi.value_by_slot(slot)]));
        if (ctx.solve_coboundary(kobs.sub(xi_theta))) {
          result.matches.push_back(
              {entry.name, static_cast<int>(gi), psi_image, theta});
          break;
        }
      }
    }
  }

  std::sort(result.matches.begin(), result.matches.end(),
            [](const KernelMatch& x, const KernelMatch& y) {
              if (x.catalog_index != y.catalog_index) return x.catalog_index < y.catalog_index;
              return x.psi_image < y.psi_image;
            });
  return result;
}

}  // namespace grcat
