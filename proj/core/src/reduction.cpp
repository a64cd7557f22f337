#include "grcat/reduction.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "grcat/error.hpp"

namespace grcat {

Reduction reduce_strict(const StrictGrCat& c, StickPolicy policy, uint64_t seed) {
  c.validate();
  const int no = c.n_obj();
  std::mt19937_64 rng(seed);

  // Isomorphism classes by flooding over nonempty hom sets.
  std::vector<int> cls(no, -1);
  std::vector<int> class_min;
  for (int x = 0; x < no; ++x) {
    if (cls[x] >= 0) continue;
    int id = static_cast<int>(class_min.size());
    class_min.push_back(x);
    std::vector<int> frontier = {x};
    cls[x] = id;
    for (size_t head = 0; head < frontier.size(); ++head)
      for (const auto& arr : c.arrows) {
        int other = -1;
        if (arr.src == frontier[head]) other = arr.dst;
        if (arr.dst == frontier[head]) other = arr.src;
        if (other >= 0 && cls[other] < 0) {
          cls[other] = id;
          frontier.push_back(other);
        }
      }
  }
  const int np = static_cast<int>(class_min.size());

  // Tensor-induced product on classes; checked to be representative-free.
  std::vector<std::vector<int>> ptable(np, std::vector<int>(np, -1));
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y) {
      int p = cls[c.tensor_obj(x, y)];
      int& slot = ptable[cls[x]][cls[y]];
      if (slot < 0)
        slot = p;
      else if (slot != p)
        throw Error(errc::bad_argument, "tensor does not descend to isomorphism classes");
    }
  std::vector<std::string> pnames(np);
  for (int s = 0; s < np; ++s) pnames[s] = "[" + c.objects[class_min[s]] + "]";
  FiniteGroup pi0 = FiniteGroup::from_table(std::move(pnames), ptable);

  // Unit endomorphisms form the coefficient group.
  std::vector<int> endos = c.hom(c.unit, c.unit);
  const int ne = static_cast<int>(endos.size());
  std::vector<int> endo_pos(c.n_arr(), -1);
  for (int i = 0; i < ne; ++i) endo_pos[endos[i]] = i;
  std::vector<std::vector<int>> etable(ne, std::vector<int>(ne));
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      int comp = c.compose(endos[i], endos[j]);
      if (comp != c.compose(endos[j], endos[i]))
        throw Error(errc::unit_endos_not_abelian, "unit endomorphisms do not commute");
      etable[i][j] = endo_pos[comp];
    }
  std::vector<std::string> enames(ne);
  for (int i = 0; i < ne; ++i) enames[i] = c.arrows[endos[i]].name;
  FiniteGroup egrp = FiniteGroup::from_table(std::move(enames), etable);
  std::vector<int> all(ne);
  for (int i = 0; i < ne; ++i) all[i] = i;
  AbelianStructure pi1 = abelian_structure(egrp, all);
  const int64_t ncar = pi1.group.order();

  Reduction red;
  red.class_of_object = cls;
  red.pi1_arrow_of_index.resize(ncar);
  for (int64_t u = 0; u < ncar; ++u)
    red.pi1_arrow_of_index[u] = endos[pi1.ambient_of_index[u]];

  // Stick: representative per class (the unit represents its own class so
  // the cocycle comes out normalized), iso from the representative to every
  // object, identity on the representative.
  red.rep_object.resize(np);
  for (int s = 0; s < np; ++s) {
    if (s == cls[c.unit]) {
      red.rep_object[s] = c.unit;
    } else if (policy == StickPolicy::deterministic) {
      red.rep_object[s] = class_min[s];
    } else {
      std::vector<int> members;
      for (int x = 0; x < no; ++x)
        if (cls[x] == s) members.push_back(x);
      red.rep_object[s] = members[rng() % members.size()];
    }
  }
  red.iso_from_rep.assign(no, -1);
  for (int x = 0; x < no; ++x) {
    int rep = red.rep_object[cls[x]];
    if (x == rep) {
      red.iso_from_rep[x] = c.id_arrow[x];
    } else {
      std::vector<int> h = c.hom(rep, x);
      if (h.empty()) throw Error(errc::bad_argument, "internal: class member unreachable");
      red.iso_from_rep[x] =
          policy == StickPolicy::deterministic ? h.front() : h[rng() % h.size()];
    }
  }

  // gamma_X(u) = u ot id_X as an endo of X; build per-object inverse lookup.
  auto gamma = [&](int u, int x) { return c.tensor_arr(red.pi1_arrow_of_index[u], c.id_arrow[x]); };
  std::vector<std::map<int, int>> gamma_inv(no);
  for (int x = 0; x < no; ++x)
    for (int64_t u = 0; u < ncar; ++u) gamma_inv[x].emplace(gamma(static_cast<int>(u), x), u);
  auto gamma_inverse = [&](int arrow, int x) {
    auto it = gamma_inv[x].find(arrow);
    if (it == gamma_inv[x].end())
      throw Error(errc::bad_argument, "internal: endomorphism not of the form u ot id");
    return it->second;
  };

  // Module action: s u = gamma^-1(id_X ot u) on the representative X of s.
  std::vector<std::vector<AbelianGroup::Elem>> gen_images(np);
  for (int s = 0; s < np; ++s) {
    int x = red.rep_object[s];
    gen_images[s].resize(pi1.group.rank());
    for (int j = 0; j < pi1.group.rank(); ++j) {
      AbelianGroup::Elem gen = pi1.group.zero();
      gen[j] = 1;
      int u = static_cast<int>(pi1.group.index_of(gen));
      int delta = c.tensor_arr(c.id_arrow[x], red.pi1_arrow_of_index[u]);
      gen_images[s][j] = pi1.group.element_at(static_cast<uint32_t>(gamma_inverse(delta, x)));
    }
  }
  auto module = std::make_shared<const PiModule>(
      PiModule::make(pi0, pi1.group, std::move(gen_images)));

  // h(s,t): X_s ot X_t -> X_st, the inverse of the chosen iso.
  auto h_arrow = [&](int s, int t) {
    int y = c.tensor_obj(red.rep_object[s], red.rep_object[t]);
    return c.arrow_inverse(red.iso_from_rep[y]);
  };
  std::vector<std::vector<int>> h(np, std::vector<int>(np));
  for (int s = 0; s < np; ++s)
    for (int t = 0; t < np; ++t) h[s][t] = h_arrow(s, t);

  // xi(r,s,t) compares the two reassociation paths through the stick.
  Cochain xi = Cochain::zero(module, 3);
  std::vector<int> tuple(3);
  for (int r = 0; r < np; ++r)
    for (int s = 0; s < np; ++s)
      for (int t = 0; t < np; ++t) {
        int st = pi0.mul(s, t);
        int rs = pi0.mul(r, s);
        int rst = pi0.mul(r, st);
        int path1 = c.compose(c.tensor_arr(c.id_arrow[red.rep_object[r]], h[s][t]), h[r][st]);
        int path2 = c.compose(c.tensor_arr(h[r][s], c.id_arrow[red.rep_object[t]]), h[rs][t]);
        if (path1 < 0 || path2 < 0)
          throw Error(errc::bad_argument, "internal: reassociation paths not composable");
        int eps = c.compose(c.arrow_inverse(path1), path2);
        int u = static_cast<int>(gamma_inverse(eps, red.rep_object[rst]));
        if (r == pi0.identity() || s == pi0.identity() || t == pi0.identity()) {
          if (u != 0)
            throw Error(errc::bad_argument, "internal: stick cocycle is not normalized");
          continue;
        }
        tuple = {r, s, t};
        xi.set_value(tuple, static_cast<uint32_t>(u));
      }

  red.type = GrType::make(module, std::move(xi));
  return red;
}

GrType reduced_type_of_group(const AutData& aut) {
  const FiniteGroup& g = aut.base;
  AbelianStructure z = center(g);
  const FiniteGroup& out = aut.out;
  const int np = out.order();

  // Action of an outer class on the center through the section.
  std::vector<std::vector<AbelianGroup::Elem>> gen_images(np);
  for (int s = 0; s < np; ++s) {
    gen_images[s].resize(z.group.rank());
    for (int j = 0; j < z.group.rank(); ++j) {
      AbelianGroup::Elem gen = z.group.zero();
      gen[j] = 1;
      int ge = z.ambient_of_index[z.group.index_of(gen)];
      int img = aut.apply(aut.section[s], ge);
      if (z.index_of_ambient[img] < 0)
        throw Error(errc::centrality_violation, "automorphism does not preserve the center");
      gen_images[s][j] = z.group.element_at(static_cast<uint32_t>(z.index_of_ambient[img]));
    }
  }
  auto module = std::make_shared<const PiModule>(
      PiModule::make(out, z.group, std::move(gen_images)));

  // h(s,t): least group element conjugating H_s H_t into H_st; identity when
  // s or t is the unit (normalization).
  std::vector<std::vector<int>> h(np, std::vector<int>(np, -1));
  for (int s = 0; s < np; ++s)
    for (int t = 0; t < np; ++t) {
      if (s == out.identity() || t == out.identity()) {
        h[s][t] = g.identity();
        continue;
      }
      int q = aut.compose(aut.compose(aut.section[s], aut.section[t]),
                          aut.inverse(aut.section[out.mul(s, t)]));
      for (int cand = 0; cand < g.order(); ++cand)
        if (aut.mu[cand] == q) {
          h[s][t] = cand;
          break;
        }
      if (h[s][t] < 0)
        throw Error(errc::bad_argument, "internal: section cosets are inconsistent");
    }

  // xi(r,s,t) from H_r(h(s,t)) h(r,st) xi = h(r,s) h(rs,t), solved in G with
  // the value required to be central.
  Cochain xi = Cochain::zero(module, 3);
  std::vector<int> tuple(3);
  for (int r = 0; r < np; ++r)
    for (int s = 0; s < np; ++s)
      for (int t = 0; t < np; ++t) {
        if (r == out.identity() || s == out.identity() || t == out.identity()) continue;
        int st = out.mul(s, t);
        int rs = out.mul(r, s);
        int lhs = g.mul(aut.apply(aut.section[r], h[s][t]), h[r][st]);
        int rhs = g.mul(h[r][s], h[rs][t]);
        int val = g.mul(g.inv(lhs), rhs);
        if (z.index_of_ambient[val] < 0)
          throw Error(errc::centrality_violation,
                      "assembled associativity value lies outside the center");
        tuple = {r, s, t};
        xi.set_value(tuple, static_cast<uint32_t>(z.index_of_ambient[val]));
      }

  return GrType::make(module, std::move(xi));
}

}  // namespace grcat
