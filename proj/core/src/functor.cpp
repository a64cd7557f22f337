#include "grcat/functor.hpp"

#include <algorithm>

#include "grcat/error.hpp"

namespace grcat {

namespace {

// Extends generator images to the full additive map and returns the dense
// index table, or a description of the first well-definedness failure.
std::optional<std::vector<uint32_t>> extend_f(const AbelianGroup& src, const AbelianGroup& dst,
                                              const std::vector<AbelianGroup::Elem>& gen_images,
                                              std::string* why) {
  if (static_cast<int>(gen_images.size()) != src.rank()) {
    if (why) *why = "one image per source generator required";
    return std::nullopt;
  }
  for (int j = 0; j < src.rank(); ++j) {
    AbelianGroup::Elem img = dst.reduce(gen_images[j]);
    if (src.invariant_factors()[j] % dst.element_order(img) != 0) {
      if (why)
        *why = "image of generator " + std::to_string(j) + " has order not dividing " +
               std::to_string(src.invariant_factors()[j]);
      return std::nullopt;
    }
  }
  std::vector<uint32_t> table(static_cast<size_t>(src.order()));
  for (int64_t idx = 0; idx < src.order(); ++idx) {
    AbelianGroup::Elem a = src.element_at(static_cast<uint32_t>(idx));
    AbelianGroup::Elem img = dst.zero();
    for (int j = 0; j < src.rank(); ++j)
      img = dst.add(img, dst.scalar_mul(a[j], dst.reduce(gen_images[j])));
    table[idx] = dst.index_of(img);
  }
  return table;
}

}  // namespace

uint32_t FunctorData::apply_f(uint32_t idx) const {
  const AbelianGroup& src = source.carrier();
  const AbelianGroup& dst = target.carrier();
  AbelianGroup::Elem a = src.element_at(idx);
  AbelianGroup::Elem img = dst.zero();
  for (int j = 0; j < src.rank(); ++j)
    img = dst.add(img, dst.scalar_mul(a[j], f_gen_images[j]));
  return dst.index_of(img);
}

AbelianGroup::Elem FunctorData::apply_f_elem(const AbelianGroup::Elem& a) const {
  return target.carrier().element_at(apply_f(source.carrier().index_of(a)));
}

PairReport validate_pair(const GrType& source, const GrType& target,
                         const std::vector<int>& phi_image,
                         const std::vector<AbelianGroup::Elem>& f_gen_images) {
  PairReport report;
  const FiniteGroup& gs = source.group();
  const FiniteGroup& gt = target.group();

  if (static_cast<int>(phi_image.size()) != gs.order()) {
    report.failures.push_back("phi must list one image per source element");
    return report;
  }
  for (int v : phi_image)
    if (v < 0 || v >= gt.order()) {
      report.failures.push_back("phi image index out of range");
      return report;
    }
  if (phi_image[gs.identity()] != gt.identity())
    report.failures.push_back("phi does not preserve the identity");
  for (int x = 0; x < gs.order(); ++x)
    for (int y = 0; y < gs.order(); ++y)
      if (phi_image[gs.mul(x, y)] != gt.mul(phi_image[x], phi_image[y]))
        report.failures.push_back("phi is not a homomorphism at (" + std::to_string(x) + "," +
                                  std::to_string(y) + ")");

  std::string why;
  auto table = extend_f(source.carrier(), target.carrier(), f_gen_images, &why);
  if (!table) {
    report.failures.push_back("f is not additive: " + why);
    return report;
  }
  if (!report.failures.empty()) return report;

  // Equivariance: f(x a) = phi(x) f(a).
  const PiModule& ms = *source.module;
  const PiModule& mt = *target.module;
  for (int x = 0; x < gs.order(); ++x)
    for (int64_t a = 0; a < source.carrier().order(); ++a) {
      uint32_t lhs = (*table)[ms.act(x, static_cast<uint32_t>(a))];
      uint32_t rhs = mt.act(phi_image[x], (*table)[a]);
      if (lhs != rhs)
        report.failures.push_back("equivariance fails at (x=" + std::to_string(x) +
                                  ", a=" + std::to_string(a) + ")");
    }
  return report;
}

FunctorData make_functor(const GrType& source, const GrType& target,
                         const std::vector<int>& phi_image,
                         const std::vector<AbelianGroup::Elem>& f_gen_images,
                         std::optional<Cochain> g) {
  PairReport report = validate_pair(source, target, phi_image, f_gen_images);
  if (!report.ok()) throw Error(errc::invalid_pair, report.failures.front());

  std::vector<AbelianGroup::Elem> reduced;
  for (const auto& img : f_gen_images) reduced.push_back(target.carrier().reduce(img));
  GroupHom phi(source.group(), target.group(), phi_image);
  auto pb = std::make_shared<const PiModule>(pullback_module(phi, *target.module));
  FunctorData f{source, target, std::move(phi), std::move(reduced), std::move(pb), std::nullopt};
  if (g) {
    if (g->degree() != 2 || !(*g->module() == *f.pulled_back))
      throw Error(errc::signature_mismatch,
                  "monoidal structure must be a 2-cochain over the pulled-back module");
    f.g = std::move(g);
    MonoidalReport mr = check_monoidal(f);
    if (!mr.ok())
      throw Error(errc::invalid_pair, "monoidal structure fails the coherence equation");
  }
  return f;
}

Cochain obstruction(const FunctorData& f) {
  const FiniteGroup& gs = f.source.group();
  Cochain k = Cochain::zero(f.pulled_back, 3);
  const AbelianGroup& at = f.target.carrier();
  std::vector<int> tuple(3), img(3);
  for (size_t slot = 0; slot < k.tuples(); ++slot) {
    tuple = k.tuple_of_slot(slot);
    for (int i = 0; i < 3; ++i) img[i] = f.phi.apply(tuple[i]);
    uint32_t v = at.sub_idx(f.target.xi.value_at(img), f.apply_f(f.source.xi.value_at(tuple)));
    k.set_by_slot(slot, v);
  }
  if (!is_cocycle(k))
    throw Error(errc::not_a_cocycle, "internal: obstruction failed the cocycle check");
  (void)gs;
  return k;
}

std::optional<Cochain> realizable(const FunctorData& f) {
  Cochain k = obstruction(f);
  CohomologyContext ctx(f.pulled_back);
  std::optional<Cochain> g = ctx.solve_coboundary(k);
  if (!g) return std::nullopt;
  FunctorData with_g = f;
  with_g.g = *g;
  MonoidalReport mr = check_monoidal(with_g);
  if (!mr.ok())
    throw Error(errc::invalid_pair, "internal: coboundary witness is not monoidal");
  return g;
}

MonoidalReport check_monoidal(const FunctorData& f) {
  if (!f.g) throw Error(errc::bad_argument, "functor carries no monoidal structure");
  MonoidalReport report;
  const FiniteGroup& gs = f.source.group();
  const AbelianGroup& at = f.target.carrier();
  const PiModule& pb = *f.pulled_back;
  const Cochain& g = *f.g;

  std::vector<int> t2(2), t3(3), img(3);
  for (int x = 0; x < gs.order(); ++x)
    for (int y = 0; y < gs.order(); ++y) {
      for (int z = 0; z < gs.order(); ++z) {
        for (int i = 0; i < 3; ++i) img[i] = f.phi.apply(i == 0 ? x : i == 1 ? y : z);
        // phi(x) g(y,z) + g(x,yz) + f(xi(x,y,z))
        t2 = {y, z};
        uint32_t lhs = pb.act(x, g.value_at(t2));
        t2 = {x, gs.mul(y, z)};
        lhs = at.add_idx(lhs, g.value_at(t2));
        t3 = {x, y, z};
        lhs = at.add_idx(lhs, f.apply_f(f.source.xi.value_at(t3)));
        // xi'(phi...) + g(x,y) + g(xy,z)
        uint32_t rhs = f.target.xi.value_at(img);
        t2 = {x, y};
        rhs = at.add_idx(rhs, g.value_at(t2));
        t2 = {gs.mul(x, y), z};
        rhs = at.add_idx(rhs, g.value_at(t2));
        if (lhs != rhs) report.equation_failures.push_back({x, y, z});
      }
      // Unit compatibility (structural for normalized cochains, still checked).
      t2 = {gs.identity(), y};
      if (g.value_at(t2) != 0) report.unit_failures.push_back({gs.identity(), y});
      t2 = {x, gs.identity()};
      if (g.value_at(t2) != 0) report.unit_failures.push_back({x, gs.identity()});
    }
  return report;
}

std::vector<FunctorData> classify(const GrType& source, const GrType& target,
                                  const std::vector<int>& phi_image,
                                  const std::vector<AbelianGroup::Elem>& f_gen_images) {
  FunctorData base = make_functor(source, target, phi_image, f_gen_images);
  std::optional<Cochain> g0 = realizable(base);
  if (!g0) return {};

  CohomologyContext ctx(base.pulled_back);
  std::vector<FunctorData> out;
  for (const Cochain& z : ctx.classes(2)) {
    FunctorData f = base;
    f.g = g0->add(z);
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<Cochain> congruent(const FunctorData& f, const FunctorData& fprime) {
  if (!f.g || !fprime.g) throw Error(errc::bad_argument, "both functors need monoidal data");
  if (f.phi.image() != fprime.phi.image() || f.f_gen_images != fprime.f_gen_images ||
      !(*f.pulled_back == *fprime.pulled_back) || !(f.source.xi == fprime.source.xi) ||
      !(f.target.xi == fprime.target.xi))
    throw Error(errc::signature_mismatch, "functors do not share (phi, f) and types");
  Cochain diff = f.g->sub(*fprime.g);
  CohomologyContext ctx(f.pulled_back);
  return ctx.solve_coboundary(diff);
}

std::vector<Cochain> functor_automorphisms(const FunctorData& f) {
  if (!f.g) throw Error(errc::bad_argument, "functor needs monoidal data");
  CohomologyContext ctx(f.pulled_back);
  std::vector<Cochain> out = ctx.all_cocycles(1);
  std::sort(out.begin(), out.end(),
            [](const Cochain& a, const Cochain& b) { return a.lex_less(b); });
  return out;
}

}  // namespace grcat
