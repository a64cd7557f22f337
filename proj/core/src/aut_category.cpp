#include "grcat/aut_category.hpp"

namespace grcat {

AutCategory aut_gr_category(const AutData& aut) {
  const FiniteGroup& g = aut.base;
  const int na = aut.aut.order();
  const int ng = g.order();

  AutCategory out;
  out.n_aut = na;
  StrictGrCat& c = out.cat;

  c.objects.resize(na);
  for (int i = 0; i < na; ++i) c.objects[i] = aut.aut.name(i);
  c.unit = 0;  // identity automorphism is index 0

  // Arrow (x, beta): mu_x . beta -> beta, one per pair.
  const int narr = ng * na;
  c.arrows.resize(narr);
  for (int x = 0; x < ng; ++x)
    for (int b = 0; b < na; ++b) {
      int f = out.arrow_of(x, b);
      c.arrows[f].src = aut.compose(aut.mu[x], b);
      c.arrows[f].dst = b;
      c.arrows[f].name = g.name(x) + ":" + c.objects[c.arrows[f].src] + "->" + c.objects[b];
    }

  c.id_arrow.resize(na);
  for (int b = 0; b < na; ++b) c.id_arrow[b] = out.arrow_of(g.identity(), b);

  // Composition: (x, beta): mu_x beta -> beta followed by (y, gamma) needs
  // beta = mu_y gamma; the composite is (xy, gamma).
  c.compose_tab.assign(static_cast<size_t>(narr) * narr, -1);
  for (int f = 0; f < narr; ++f)
    for (int h = 0; h < narr; ++h) {
      if (c.arrows[f].dst != c.arrows[h].src) continue;
      int x = out.elem_of_arrow(f);
      int y = out.elem_of_arrow(h);
      int gamma = out.target_of_arrow(h);
      c.compose_tab[static_cast<size_t>(f) * narr + h] = out.arrow_of(g.mul(x, y), gamma);
    }

  // Tensor: on objects, composition of automorphisms; on arrows,
  // (x: a->a') ot (y: b->b') = (x * a'(y) : a.b -> a'.b').
  c.obj_tensor.resize(static_cast<size_t>(na) * na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      c.obj_tensor[static_cast<size_t>(i) * na + j] = aut.compose(i, j);

  c.arr_tensor.resize(static_cast<size_t>(narr) * narr);
  for (int f = 0; f < narr; ++f) {
    int x = out.elem_of_arrow(f);
    int aprime = c.arrows[f].dst;
    for (int h = 0; h < narr; ++h) {
      int y = out.elem_of_arrow(h);
      int bprime = c.arrows[h].dst;
      int elem = g.mul(x, aut.apply(aprime, y));
      c.arr_tensor[static_cast<size_t>(f) * narr + h] =
          out.arrow_of(elem, aut.compose(aprime, bprime));
    }
  }

  c.validate();
  return out;
}

}  // namespace grcat
