#include "grcat/gr_type.hpp"

#include "grcat/error.hpp"

namespace grcat {

GrType GrType::make(ModulePtr module, Cochain xi) {
  if (xi.degree() != 3) throw Error(errc::bad_argument, "associativity datum must have degree 3");
  if (!(*xi.module() == *module))
    throw Error(errc::signature_mismatch, "cochain module does not match");
  if (!is_cocycle(xi)) throw Error(errc::not_a_cocycle, "associativity datum is not a 3-cocycle");
  return GrType{std::move(module), std::move(xi)};
}

GrType GrType::strict(ModulePtr module) {
  Cochain xi = Cochain::zero(module, 3);
  return GrType{std::move(module), std::move(xi)};
}

std::string GrTypeReport::summary() const {
  if (ok()) return "valid";
  std::string s;
  if (!pentagon_failures.empty())
    s += "pentagon fails on " + std::to_string(pentagon_failures.size()) + " quadruple(s)";
  if (!normalization_failures.empty()) {
    if (!s.empty()) s += "; ";
    s += "normalization fails on " + std::to_string(normalization_failures.size()) + " triple(s)";
  }
  return s;
}

GrTypeReport validate_gr_type(const ModulePtr& module, const std::vector<uint32_t>& xi_table) {
  const FiniteGroup& g = module->group();
  const AbelianGroup& a = module->carrier();
  const int m = g.order();
  if (xi_table.size() != static_cast<size_t>(m) * m * m)
    throw Error(errc::bad_argument, "associativity table must cover all |G|^3 triples");

  GrTypeReport report;
  auto at = [&](int x, int y, int z) {
    return xi_table[(static_cast<size_t>(x) * m + y) * m + z];
  };

  // Strict units: xi vanishes whenever any argument is the identity.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if ((x == g.identity() || y == g.identity() || z == g.identity()) && at(x, y, z) != 0)
          report.normalization_failures.push_back({x, y, z});

  // Pentagon at the skeletal level: the coboundary vanishes on every
  // quadruple.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        for (int w = 0; w < m; ++w) {
          uint32_t acc = module->act(x, at(y, z, w));
          acc = a.sub_idx(acc, at(g.mul(x, y), z, w));
          acc = a.add_idx(acc, at(x, g.mul(y, z), w));
          acc = a.sub_idx(acc, at(x, y, g.mul(z, w)));
          acc = a.add_idx(acc, at(x, y, z));
          if (acc != 0) report.pentagon_failures.push_back({x, y, z, w});
        }
  return report;
}

GrTypeReport validate_gr_type(const GrType& t) {
  const int m = t.group().order();
  std::vector<uint32_t> table(static_cast<size_t>(m) * m * m);
  std::vector<int> tuple(3);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        tuple = {x, y, z};
        table[(static_cast<size_t>(x) * m + y) * m + z] = t.xi.value_at(tuple);
      }
  return validate_gr_type(t.module, table);
}

std::pair<int, uint32_t> tensor_arrows(const GrType& t, std::pair<int, uint32_t> a,
                                       std::pair<int, uint32_t> b) {
  const FiniteGroup& g = t.group();
  return {g.mul(a.first, b.first),
          t.carrier().add_idx(a.second, t.module->act(a.first, b.second))};
}

}  // namespace grcat
