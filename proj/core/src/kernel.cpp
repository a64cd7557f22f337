#include "grcat/kernel.hpp"

#include <algorithm>

#include "grcat/error.hpp"

namespace grcat {

GroupData::GroupData(FiniteGroup g)
    : group_(std::move(g)), aut_(automorphism_data(group_)), center_(grcat::center(group_)) {}

const AutCategory& GroupData::aut_category() const {
  std::call_once(cat_once_, [this] { cat_ = aut_gr_category(aut_); });
  return *cat_;
}

const GrType& GroupData::reduced_type() const {
  std::call_once(type_once_, [this] { type_ = reduced_type_of_group(aut_); });
  return *type_;
}

AbstractKernel AbstractKernel::make(FiniteGroup pi, GroupDataPtr gd,
                                    const std::vector<int>& psi_image) {
  GroupHom psi(pi, gd->aut().out, psi_image);
  return AbstractKernel{std::move(pi), std::move(gd), std::move(psi)};
}

namespace {

// All group elements c with mu_c equal to the given inner automorphism.
std::vector<int> conjugator_candidates(const AutData& aut, int inner_aut_index) {
  std::vector<int> out;
  for (int c = 0; c < aut.base.order(); ++c)
    if (aut.mu[c] == inner_aut_index) out.push_back(c);
  return out;
}

}  // namespace

FactorSet factor_set(const AbstractKernel& k, TieBreak tie, uint64_t seed) {
  const AutData& aut = k.gd->aut();
  const FiniteGroup& g = k.gd->group();
  const FiniteGroup& pi = k.pi;
  const int n = pi.order();
  std::mt19937_64 rng(seed);

  FactorSet fs;
  fs.phi.resize(n);
  for (int x = 0; x < n; ++x) fs.phi[x] = aut.section[k.psi.apply(x)];

  fs.f.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == pi.identity() || y == pi.identity()) {
        fs.f[x][y] = g.identity();
        continue;
      }
      int q = aut.compose(aut.compose(fs.phi[x], fs.phi[y]),
                          aut.inverse(fs.phi[pi.mul(x, y)]));
      std::vector<int> cands = conjugator_candidates(aut, q);
      if (cands.empty())
        throw Error(errc::bad_argument, "internal: section cosets are inconsistent");
      fs.f[x][y] = tie == TieBreak::lexicographic ? cands.front() : cands[rng() % cands.size()];
    }
  validate_factor_set(k, fs);
  return fs;
}

void validate_factor_set(const AbstractKernel& k, const FactorSet& fs) {
  const AutData& aut = k.gd->aut();
  const FiniteGroup& g = k.gd->group();
  const FiniteGroup& pi = k.pi;
  if (fs.phi[pi.identity()] != 0)
    throw Error(errc::invalid_pair, "factor set: phi(1) must be the identity automorphism");
  for (int y = 0; y < pi.order(); ++y)
    if (fs.f[pi.identity()][y] != g.identity() || fs.f[y][pi.identity()] != g.identity())
      throw Error(errc::invalid_pair, "factor set is not normalized");
  for (int x = 0; x < pi.order(); ++x)
    for (int y = 0; y < pi.order(); ++y) {
      int lhs = aut.compose(fs.phi[x], fs.phi[y]);
      int rhs = aut.compose(aut.mu[fs.f[x][y]], fs.phi[pi.mul(x, y)]);
      if (lhs != rhs)
        throw Error(errc::invalid_pair, "factor set fails phi(x)phi(y) = mu_f phi(xy) at (" +
                                            std::to_string(x) + "," + std::to_string(y) + ")");
    }
}

ModulePtr center_module(const AbstractKernel& k) {
  const AbelianStructure& z = k.gd->center();
  const AutData& aut = k.gd->aut();
  const FiniteGroup& pi = k.pi;

  std::vector<std::vector<AbelianGroup::Elem>> gen_images(pi.order());
  for (int x = 0; x < pi.order(); ++x) {
    int a = aut.section[k.psi.apply(x)];
    gen_images[x].resize(z.group.rank());
    for (int j = 0; j < z.group.rank(); ++j) {
      AbelianGroup::Elem gen = z.group.zero();
      gen[j] = 1;
      int img = aut.apply(a, z.ambient_of_index[z.group.index_of(gen)]);
      if (z.index_of_ambient[img] < 0)
        throw Error(errc::centrality_violation, "automorphism does not preserve the center");
      gen_images[x][j] = z.group.element_at(static_cast<uint32_t>(z.index_of_ambient[img]));
    }
  }
  return std::make_shared<const PiModule>(PiModule::make(pi, z.group, std::move(gen_images)));
}

Cochain kernel_obstruction(const AbstractKernel& k, const FactorSet& fs) {
  const FiniteGroup& g = k.gd->group();
  const AbelianStructure& z = k.gd->center();
  const AutData& aut = k.gd->aut();
  const FiniteGroup& pi = k.pi;

  ModulePtr mod = center_module(k);
  Cochain out = Cochain::zero(mod, 3);
  std::vector<int> tuple(3);
  for (size_t slot = 0; slot < out.tuples(); ++slot) {
    tuple = out.tuple_of_slot(slot);
    int x = tuple[0], y = tuple[1], zz = tuple[2];
    // phi(x)[f(y,z)] f(x,yz) = k f(x,y) f(xy,z), solved for k left-to-right.
    int lhs = g.mul(aut.apply(fs.phi[x], fs.f[y][zz]), fs.f[x][pi.mul(y, zz)]);
    int rhs = g.mul(fs.f[x][y], fs.f[pi.mul(x, y)][zz]);
    int val = g.mul(lhs, g.inv(rhs));
    if (z.index_of_ambient[val] < 0)
      throw Error(errc::centrality_violation, "obstruction value lies outside the center");
    out.set_by_slot(slot, static_cast<uint32_t>(z.index_of_ambient[val]));
  }
  if (!is_cocycle(out))
    throw Error(errc::not_a_cocycle, "internal: kernel obstruction failed the cocycle check");
  return out;
}

Cochain kernel_obstruction(const AbstractKernel& k) {
  return kernel_obstruction(k, factor_set(k));
}

FiniteGroup build_extension(const AbstractKernel& k, FactorSet fs) {
  const FiniteGroup& g = k.gd->group();
  const AbelianStructure& z = k.gd->center();
  const FiniteGroup& pi = k.pi;
  const AutData& aut = k.gd->aut();

  Cochain obs = kernel_obstruction(k, fs);
  if (!obs.is_zero()) {
    CohomologyContext ctx(obs.module());
    std::optional<Cochain> witness = ctx.solve_coboundary(obs);
    if (!witness)
      throw Error(errc::obstruction_nonzero,
                  "kernel obstruction class is nonzero; no extension exists");
    // Adjust f by the negated witness: the obstruction of f + gamma shifts
    // by the coboundary of gamma.
    std::vector<int> t2(2);
    for (int x = 0; x < pi.order(); ++x)
      for (int y = 0; y < pi.order(); ++y) {
        t2 = {x, y};
        uint32_t w = witness->module()->carrier().neg_idx(witness->value_at(t2));
        fs.f[x][y] = g.mul(fs.f[x][y], z.ambient_of_index[w]);
      }
    obs = kernel_obstruction(k, fs);
    if (!obs.is_zero())
      throw Error(errc::obstruction_nonzero, "internal: adjusted factor set still obstructed");
  }

  const int n = g.order() * pi.order();
  auto enc = [&](int a, int x) { return a * pi.order() + x; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < pi.order(); ++x) {
      names[enc(a, x)] = "(" + g.name(a) + "," + pi.name(x) + ")";
      for (int b = 0; b < g.order(); ++b)
        for (int y = 0; y < pi.order(); ++y) {
          int first = g.mul(g.mul(a, aut.apply(fs.phi[x], b)), fs.f[x][y]);
          table[enc(a, x)][enc(b, y)] = enc(first, pi.mul(x, y));
        }
    }
  // Group axioms hold exactly because the adjusted obstruction vanishes;
  // from_table re-checks them all.
  return FiniteGroup::from_table(std::move(names), table);
}

}  // namespace grcat
