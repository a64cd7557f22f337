#include "grcat/strictify.hpp"

#include <algorithm>
#include <map>

#include "grcat/error.hpp"

namespace grcat {

StrictifiedKernel strictify_with_maps(const AbstractKernel& k) {
  const AutCategory& ac = k.gd->aut_category();
  const AutData& aut = k.gd->aut();
  const FiniteGroup& pi = k.pi;

  StrictifiedKernel out;

  // Objects: (x, alpha) with alpha in the coset psi(x), ordered by (x, alpha).
  std::map<std::pair<int, int>, int> obj_id;
  for (int x = 0; x < pi.order(); ++x)
    for (int a = 0; a < aut.aut.order(); ++a)
      if (aut.coset_of[a] == k.psi.apply(x)) {
        obj_id[{x, a}] = static_cast<int>(out.object_pairs.size());
        out.object_pairs.emplace_back(x, a);
      }

  StrictGrCat& c = out.cat;
  const int no = static_cast<int>(out.object_pairs.size());
  c.objects.resize(no);
  for (int i = 0; i < no; ++i)
    c.objects[i] =
        "(" + pi.name(out.object_pairs[i].first) + "," + aut.aut.name(out.object_pairs[i].second) + ")";
  c.unit = obj_id.at({pi.identity(), 0});

  // Arrows: (x, f) with f an automorphism-category arrow inside the fiber of x.
  std::map<std::pair<int, int>, int> arr_id;
  for (int x = 0; x < pi.order(); ++x)
    for (int f = 0; f < ac.cat.n_arr(); ++f)
      if (aut.coset_of[ac.cat.arrows[f].dst] == k.psi.apply(x)) {
        arr_id[{x, f}] = static_cast<int>(out.arrow_pairs.size());
        out.arrow_pairs.emplace_back(x, f);
      }

  const int na = static_cast<int>(out.arrow_pairs.size());
  c.arrows.resize(na);
  for (int i = 0; i < na; ++i) {
    auto [x, f] = out.arrow_pairs[i];
    c.arrows[i].src = obj_id.at({x, ac.cat.arrows[f].src});
    c.arrows[i].dst = obj_id.at({x, ac.cat.arrows[f].dst});
    c.arrows[i].name = "(" + pi.name(x) + "," + ac.cat.arrows[f].name + ")";
  }

  c.id_arrow.resize(no);
  for (int i = 0; i < no; ++i)
    c.id_arrow[i] =
        arr_id.at({out.object_pairs[i].first, ac.cat.id_arrow[out.object_pairs[i].second]});

  c.compose_tab.assign(static_cast<size_t>(na) * na, -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (out.arrow_pairs[i].first != out.arrow_pairs[j].first) continue;
      int comp = ac.cat.compose(out.arrow_pairs[i].second, out.arrow_pairs[j].second);
      if (comp < 0) continue;
      c.compose_tab[static_cast<size_t>(i) * na + j] =
          arr_id.at({out.arrow_pairs[i].first, comp});
    }

  c.obj_tensor.resize(static_cast<size_t>(no) * no);
  for (int i = 0; i < no; ++i)
    for (int j = 0; j < no; ++j)
      c.obj_tensor[static_cast<size_t>(i) * no + j] =
          obj_id.at({pi.mul(out.object_pairs[i].first, out.object_pairs[j].first),
                     aut.compose(out.object_pairs[i].second, out.object_pairs[j].second)});

  c.arr_tensor.resize(static_cast<size_t>(na) * na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      c.arr_tensor[static_cast<size_t>(i) * na + j] =
          arr_id.at({pi.mul(out.arrow_pairs[i].first, out.arrow_pairs[j].first),
                     ac.cat.tensor_arr(out.arrow_pairs[i].second, out.arrow_pairs[j].second)});

  c.validate();
  return out;
}

StrictGrCat strictify(const AbstractKernel& k) { return strictify_with_maps(k).cat; }

Cochain pulled_back_group_cocycle(const AbstractKernel& k) {
  const GrType& t = k.gd->reduced_type();
  ModulePtr mod = center_module(k);
  Cochain out = Cochain::zero(mod, 3);
  std::vector<int> tuple(3), img(3);
  for (size_t slot = 0; slot < out.tuples(); ++slot) {
    tuple = out.tuple_of_slot(slot);
    for (int i = 0; i < 3; ++i) img[i] = k.psi.apply(tuple[i]);
    out.set_by_slot(slot, t.xi.value_at(img));
  }
  if (!is_cocycle(out))
    throw Error(errc::not_a_cocycle, "internal: pulled-back cocycle check failed");
  return out;
}

StrictificationReport verify_strictification(const AbstractKernel& k) {
  StrictificationReport report;
  const FiniteGroup& pi = k.pi;
  const AbelianStructure& z = k.gd->center();
  const AutCategory& ac = k.gd->aut_category();

  StrictifiedKernel sk = strictify_with_maps(k);
  const StrictGrCat& cat = sk.cat;
  Reduction red = reduce_strict(cat);
  const FiniteGroup& pi0 = red.type.group();

  // Check 1: classes -> Pi is a group isomorphism (the x-component).
  CheckResult c1{"base group", false, ""};
  std::vector<int> lambda(pi0.order(), -1);
  bool consistent = true;
  for (int obj = 0; obj < cat.n_obj(); ++obj) {
    int s = red.class_of_object[obj];
    int x = sk.object_pairs[obj].first;
    if (lambda[s] < 0)
      lambda[s] = x;
    else if (lambda[s] != x)
      consistent = false;
  }
  if (consistent && pi0.order() == pi.order()) {
    try {
      GroupHom lam(pi0, pi, lambda);
      c1.passed = lam.is_bijective();
      c1.detail = c1.passed ? "classes map isomorphically onto the base group"
                            : "class map is not bijective";
    } catch (const Error& e) {
      c1.detail = e.what();
    }
  } else {
    c1.detail = "isomorphism classes do not match the base group elements";
  }
  report.checks.push_back(c1);
  if (!c1.passed) return report;

  std::vector<int> lambda_inv(pi.order());
  for (int s = 0; s < pi0.order(); ++s) lambda_inv[lambda[s]] = s;

  // Check 2: unit endomorphisms = Z(G) as modules, through
  // rho: (1, c) -> c.
  CheckResult c2{"coefficients", false, ""};
  ModulePtr km = center_module(k);
  const AbelianGroup& zg = z.group;
  const AbelianGroup& rc = red.type.carrier();
  std::vector<int> rho;
  if (rc.invariant_factors() == zg.invariant_factors()) {
    bool ok = true;
    rho.resize(static_cast<size_t>(rc.order()));
    for (int64_t u = 0; u < rc.order() && ok; ++u) {
      int arrow = red.pi1_arrow_of_index[u];
      auto [x, inner] = sk.arrow_pairs[arrow];
      int c_elem = ac.elem_of_arrow(inner);
      if (x != pi.identity() || z.index_of_ambient[c_elem] < 0)
        ok = false;
      else
        rho[u] = z.index_of_ambient[c_elem];
    }
    if (ok) {
      std::vector<char> seen(rho.size(), 0);
      for (int v : rho) ok = ok && !seen[v]++;
    }
    for (int64_t a = 0; a < rc.order() && ok; ++a)
      for (int64_t b = 0; b < rc.order() && ok; ++b)
        ok = rho[rc.add_idx(static_cast<uint32_t>(a), static_cast<uint32_t>(b))] ==
             zg.add_idx(rho[a], rho[b]);
    for (int s = 0; s < pi0.order() && ok; ++s)
      for (int64_t u = 0; u < rc.order() && ok; ++u)
        ok = rho[red.type.module->act(s, static_cast<uint32_t>(u))] ==
             static_cast<int>(km->act(lambda[s], static_cast<uint32_t>(rho[u])));
    c2.passed = ok;
    c2.detail = ok ? "unit endomorphisms give the center, equivariantly"
                   : "coefficient identification failed";
  } else {
    c2.detail =
        "invariant factors differ: " + rc.describe() + " vs " + zg.describe();
  }
  report.checks.push_back(c2);
  if (!c2.passed) return report;

  // Check 3: transported reduced cocycle ~ pulled-back group cocycle.
  CheckResult c3{"associativity class", false, ""};
  Cochain xi_t = Cochain::zero(km, 3);
  std::vector<int> tuple(3), pre(3);
  for (size_t slot = 0; slot < xi_t.tuples(); ++slot) {
    tuple = xi_t.tuple_of_slot(slot);
    for (int i = 0; i < 3; ++i) pre[i] = lambda_inv[tuple[i]];
    xi_t.set_by_slot(slot, static_cast<uint32_t>(rho[red.type.xi.value_at(pre)]));
  }
  Cochain pulled = pulled_back_group_cocycle(k);
  CohomologyContext ctx(km);
  auto witness = ctx.solve_coboundary(xi_t.sub(pulled));
  c3.passed = witness.has_value();
  c3.detail =
      c3.passed ? "difference is a coboundary (witness found)" : "difference is not a coboundary";
  report.checks.push_back(c3);

  // Check 4: kernel obstruction class = pulled-back class.
  CheckResult c4{"kernel obstruction class", false, ""};
  Cochain kobs = kernel_obstruction(k);
  auto witness2 = ctx.solve_coboundary(kobs.sub(pulled));
  c4.passed = witness2.has_value();
  c4.detail = c4.passed ? "obstruction matches the pulled-back class (witness found)"
                        : "obstruction class differs";
  report.checks.push_back(c4);
  return report;
}

}  // namespace grcat
