#include "grcat/module.hpp"

#include <algorithm>

#include "grcat/aut.hpp"
#include "grcat/error.hpp"

namespace grcat {

PiModule PiModule::make(FiniteGroup group, AbelianGroup carrier,
                        std::vector<std::vector<AbelianGroup::Elem>> gen_images) {
  const int m = group.order();
  const int k = carrier.rank();
  const int64_t n = carrier.order();
  if (static_cast<int>(gen_images.size()) != m)
    throw Error(errc::not_an_action, "action must be given for every group element");
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(gen_images[x].size()) != k)
      throw Error(errc::not_an_action,
                  "element " + std::to_string(x) + ": one image per carrier generator required");
    for (int j = 0; j < k; ++j) {
      gen_images[x][j] = carrier.reduce(gen_images[x][j]);
      // Linear extension is well-defined only if the image order divides the
      // generator order.
      if (carrier.element_order(gen_images[x][j]) != 0 &&
          carrier.invariant_factors()[j] % carrier.element_order(gen_images[x][j]) != 0)
        throw Error(errc::not_additive, "image of generator " + std::to_string(j) + " under " +
                                            std::to_string(x) +
                                            " has order not dividing the generator order");
    }
  }

  PiModule mod;
  mod.group_ = std::move(group);
  mod.carrier_ = std::move(carrier);
  mod.gen_images_ = std::move(gen_images);

  // Densify: act_[x][idx] via linear extension.
  mod.act_.assign(m, std::vector<uint32_t>(static_cast<size_t>(n)));
  for (int x = 0; x < m; ++x) {
    for (int64_t idx = 0; idx < n; ++idx) {
      AbelianGroup::Elem a = mod.carrier_.element_at(static_cast<uint32_t>(idx));
      AbelianGroup::Elem img = mod.carrier_.zero();
      for (int j = 0; j < k; ++j)
        img = mod.carrier_.add(img, mod.carrier_.scalar_mul(a[j], mod.gen_images_[x][j]));
      mod.act_[x][idx] = mod.carrier_.index_of(img);
    }
  }

  // Identity acts trivially.
  for (int64_t idx = 0; idx < n; ++idx)
    if (mod.act_[mod.group_.identity()][idx] != static_cast<uint32_t>(idx))
      throw Error(errc::not_an_action, "identity must act trivially");
  // Each element acts bijectively (additivity is built in).
  for (int x = 0; x < m; ++x) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int64_t idx = 0; idx < n; ++idx)
      if (seen[mod.act_[x][idx]]++)
        throw Error(errc::not_an_action,
                    "element " + std::to_string(x) + " does not act bijectively");
  }
  // action(xy) = action(x) after action(y).
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int xy = mod.group_.mul(x, y);
      for (int64_t idx = 0; idx < n; ++idx)
        if (mod.act_[xy][idx] != mod.act_[x][mod.act_[y][idx]])
          throw Error(errc::not_an_action, "action is not multiplicative at (" +
                                               std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return mod;
}

PiModule PiModule::trivial(FiniteGroup group, AbelianGroup carrier) {
  std::vector<std::vector<AbelianGroup::Elem>> images(group.order());
  for (auto& per_x : images) {
    per_x.resize(carrier.rank());
    for (int j = 0; j < carrier.rank(); ++j) {
      per_x[j] = carrier.zero();
      per_x[j][j] = 1;
    }
  }
  return make(std::move(group), std::move(carrier), std::move(images));
}

bool PiModule::is_trivial_action() const {
  for (int x = 0; x < group_.order(); ++x)
    for (size_t idx = 0; idx < act_[x].size(); ++idx)
      if (act_[x][idx] != idx) return false;
  return true;
}

bool PiModule::operator==(const PiModule& o) const {
  return group_.same_table(o.group_) && carrier_ == o.carrier_ && act_ == o.act_;
}

PiModule pullback_module(const GroupHom& phi, const PiModule& m) {
  if (!phi.target().same_table(m.group()))
    throw Error(errc::source_mismatch, "module group does not match the homomorphism target");
  std::vector<std::vector<AbelianGroup::Elem>> images(phi.source().order());
  for (int x = 0; x < phi.source().order(); ++x) images[x] = m.generator_images()[phi.apply(x)];
  return PiModule::make(phi.source(), m.carrier(), std::move(images));
}

std::vector<PiModule> all_modules(const FiniteGroup& pi, const AbelianGroup& carrier) {
  FiniteGroup addgrp = carrier.as_finite_group();
  AutData aut = automorphism_data(addgrp);
  std::vector<PiModule> out;
  for (const std::vector<int>& hom : all_homomorphisms(pi, aut.aut)) {
    std::vector<std::vector<AbelianGroup::Elem>> images(pi.order());
    for (int x = 0; x < pi.order(); ++x) {
      images[x].resize(carrier.rank());
      for (int j = 0; j < carrier.rank(); ++j) {
        AbelianGroup::Elem gen = carrier.zero();
        gen[j] = 1;
        uint32_t gidx = carrier.index_of(gen);
        images[x][j] = carrier.element_at(
            static_cast<uint32_t>(aut.maps[hom[x]][static_cast<int>(gidx)]));
      }
    }
    out.push_back(PiModule::make(pi, carrier, std::move(images)));
  }
  return out;
}

}  // namespace grcat
