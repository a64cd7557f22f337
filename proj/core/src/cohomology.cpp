#include "grcat/cohomology.hpp"

#include <algorithm>
#include <set>

#include "grcat/error.hpp"

namespace grcat {

std::string CohomologyGroup::describe() const {
  return describe_invariant_factors(invariant_factors);
}

namespace {

size_t pow_size(size_t base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// |a|^(|g|^degree) <= bound, computed without overflow.
bool brute_fits(int64_t a_order, int64_t g_order, int degree, int64_t bound) {
  if (a_order <= 1) return true;
  int64_t exponent = 1;
  for (int i = 0; i < degree; ++i) {
    exponent *= g_order;
    if (exponent > 63) return false;  // a_order >= 2 -> 2^64 overflows any bound
  }
  long double v = 1.0L;
  for (int64_t i = 0; i < exponent; ++i) {
    v *= static_cast<long double>(a_order);
    if (v > static_cast<long double>(bound)) return false;
  }
  return true;
}

}  // namespace

CohomologyContext::CohomologyContext(ModulePtr module) : module_(std::move(module)) {}

size_t CohomologyContext::coords(int degree) const {
  size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  return pow_size(m1, degree) * static_cast<size_t>(module_->carrier().rank());
}

std::vector<int64_t> CohomologyContext::moduli(int degree) const {
  const auto& f = module_->carrier().invariant_factors();
  size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  size_t t = pow_size(m1, degree);
  std::vector<int64_t> out;
  out.reserve(t * f.size());
  for (size_t i = 0; i < t; ++i) out.insert(out.end(), f.begin(), f.end());
  return out;
}

const IMat& CohomologyContext::delta_matrix(int degree) {
  auto it = delta_.find(degree);
  if (it != delta_.end()) return it->second;

  const PiModule& mod = *module_;
  const FiniteGroup& g = mod.group();
  const AbelianGroup& a = mod.carrier();
  const int k = a.rank();
  const int m1 = g.order() - 1;
  const int e = g.identity();
  const int n = degree;

  auto slot_of = [e](int x) { return x < e ? x : x - 1; };
  auto elem_of = [e](int s) { return s < e ? s : s + 1; };

  const size_t t_src = pow_size(static_cast<size_t>(m1), n);
  const size_t t_dst = pow_size(static_cast<size_t>(m1), n + 1);
  IMat d(static_cast<int>(t_dst) * k, static_cast<int>(t_src) * k);

  std::vector<int> tuple(n + 1), merged(n);
  for (size_t dst = 0; dst < t_dst; ++dst) {
    size_t rest = dst;
    for (int i = n; i >= 0; --i) {
      tuple[i] = elem_of(static_cast<int>(rest % m1));
      rest /= m1;
    }

    // Term 0: g1 * f(g2..g_{n+1}); the sub-tuple never contains the identity.
    size_t src = 0;
    for (int i = 1; i <= n; ++i) src = src * m1 + static_cast<size_t>(slot_of(tuple[i]));
    const auto& imgs = mod.generator_images()[tuple[0]];
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        d.at(static_cast<int>(dst) * k + i, static_cast<int>(src) * k + j) += imgs[j][i];

    // Merge terms: (-1)^step f(..., g_step g_{step+1}, ...).
    for (int step = 1; step <= n; ++step) {
      bool valid = true;
      for (int j = 0; j < n; ++j) {
        int x = j < step - 1 ? tuple[j]
              : j == step - 1 ? g.mul(tuple[step - 1], tuple[step])
                              : tuple[j + 1];
        if (x == e) {
          valid = false;
          break;
        }
        merged[j] = x;
      }
      if (!valid) continue;
      size_t src2 = 0;
      for (int j = 0; j < n; ++j) src2 = src2 * m1 + static_cast<size_t>(slot_of(merged[j]));
      int sign = (step % 2) ? -1 : 1;
      for (int i = 0; i < k; ++i)
        d.at(static_cast<int>(dst) * k + i, static_cast<int>(src2) * k + i) += sign;
    }

    // Last term: (-1)^{n+1} f(g1..gn); never contains the identity.
    size_t src3 = 0;
    for (int i = 0; i < n; ++i) src3 = src3 * m1 + static_cast<size_t>(slot_of(tuple[i]));
    int sign = ((n + 1) % 2) ? -1 : 1;
    for (int i = 0; i < k; ++i)
      d.at(static_cast<int>(dst) * k + i, static_cast<int>(src3) * k + i) += sign;
  }

  return delta_.emplace(degree, std::move(d)).first->second;
}

const SmithForm& CohomologyContext::solver(int degree) {
  auto it = solver_.find(degree);
  if (it != solver_.end()) return it->second;

  // Augmented system [delta_{n-1} | diag(M_n)].
  const IMat& d = delta_matrix(degree - 1);
  std::vector<int64_t> mods = moduli(degree);
  IMat aug(d.rows(), d.cols() + static_cast<int>(mods.size()));
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c) aug.at(r, c) = d.at(r, c);
  for (size_t i = 0; i < mods.size(); ++i)
    aug.at(static_cast<int>(i), d.cols() + static_cast<int>(i)) = mods[i];

  return solver_.emplace(degree, smith_normal_form(std::move(aug))).first->second;
}

Cochain CohomologyContext::from_integer_vector(int degree, const std::vector<bigint>& v) const {
  const AbelianGroup& a = module_->carrier();
  const int k = a.rank();
  Cochain c(module_, degree);
  AbelianGroup::Elem elem(k);
  for (size_t t = 0; t < c.tuples(); ++t) {
    for (int j = 0; j < k; ++j) {
      bigint r = v[t * k + j] % a.invariant_factors()[j];
      if (r < 0) r += a.invariant_factors()[j];
      elem[j] = static_cast<int64_t>(r);
    }
    c.set_by_slot(t, a.index_of(elem));
  }
  return c;
}

std::vector<bigint> CohomologyContext::to_integer_vector(const Cochain& c) const {
  const AbelianGroup& a = module_->carrier();
  const int k = a.rank();
  std::vector<bigint> v(c.tuples() * static_cast<size_t>(k));
  for (size_t t = 0; t < c.tuples(); ++t) {
    AbelianGroup::Elem elem = a.element_at(c.value_by_slot(t));
    for (int j = 0; j < k; ++j) v[t * k + j] = elem[j];
  }
  return v;
}

std::optional<Cochain> CohomologyContext::solve_coboundary(const Cochain& z) {
  if (z.degree() < 1 || z.degree() > 3)
    throw Error(errc::bad_argument, "solve_coboundary needs degree 1..3");
  if (!(*z.module() == *module_))
    throw Error(errc::signature_mismatch, "cochain belongs to a different module");
  if (!is_cocycle(z)) throw Error(errc::not_a_cocycle, "right-hand side is not a cocycle");

  const int n = z.degree();
  if (module_->group().order() == 1 || module_->carrier().rank() == 0) {
    // Everything is zero in these degenerate cases.
    return Cochain::zero(module_, n - 1);
  }

  const SmithForm& f = solver(n);
  auto sol = f.solve(to_integer_vector(z));
  if (!sol) return std::nullopt;

  std::vector<bigint> head(sol->begin(), sol->begin() + static_cast<long>(coords(n - 1)));
  Cochain alpha = from_integer_vector(n - 1, head);
  if (!(coboundary(alpha) == z))
    throw Error(errc::bad_argument, "internal: coboundary witness failed verification");
  return alpha;
}

const std::vector<std::vector<uint32_t>>& CohomologyContext::coboundary_subgroup(
    int degree, bool& enumerable) {
  auto it = cobound_.find(degree);
  if (it != cobound_.end()) {
    enumerable = cobound_enumerable_[degree];
    return it->second;
  }

  // Closure of the images of the basis (degree-1)-cochains under addition.
  std::vector<std::vector<uint32_t>> gens;
  if (degree >= 1 && module_->group().order() > 1) {
    const AbelianGroup& a = module_->carrier();
    Cochain basis(module_, degree - 1);
    for (size_t t = 0; t < basis.tuples(); ++t) {
      for (int j = 0; j < a.rank(); ++j) {
        AbelianGroup::Elem gen = a.zero();
        gen[j] = 1;
        Cochain b = Cochain::zero(module_, degree - 1);
        b.set_by_slot(t, a.index_of(gen));
        gens.push_back(coboundary(b).values());
      }
    }
  }

  const AbelianGroup& a = module_->carrier();
  std::set<std::vector<uint32_t>> closure;
  size_t n_vals = pow_size(static_cast<size_t>(module_->group().order() - 1), degree);
  closure.insert(std::vector<uint32_t>(n_vals, 0));
  bool ok = true;
  std::vector<std::vector<uint32_t>> frontier(closure.begin(), closure.end());
  for (size_t head = 0; head < frontier.size() && ok; ++head) {
    for (const auto& g : gens) {
      std::vector<uint32_t> sum(frontier[head].size());
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.add_idx(frontier[head][i], g[i]);
      if (closure.insert(sum).second) {
        frontier.push_back(std::move(sum));
        if (closure.size() > kLexEnumerationBound) {
          ok = false;
          break;
        }
      }
    }
  }

  auto& slot = cobound_[degree];
  if (ok) {
    slot.assign(closure.begin(), closure.end());
  } else {
    slot.clear();
  }
  cobound_enumerable_[degree] = ok;
  enumerable = ok;
  return slot;
}

Cochain CohomologyContext::lex_minimize(const Cochain& z) {
  bool enumerable = false;
  const auto& b = coboundary_subgroup(z.degree(), enumerable);
  if (!enumerable) return z;
  const AbelianGroup& a = module_->carrier();
  Cochain best = z;
  std::vector<uint32_t> cand(z.values().size());
  for (const auto& cb : b) {
    for (size_t i = 0; i < cand.size(); ++i) cand[i] = a.add_idx(z.value_by_slot(i), cb[i]);
    if (cand < best.values()) {
      Cochain c(module_, z.degree());
      for (size_t i = 0; i < cand.size(); ++i) c.set_by_slot(i, cand[i]);
      best = c;
    }
  }
  return best;
}

CohomologyGroup CohomologyContext::group_snf(int degree) {
  const int n = degree;
  CohomologyGroup out;
  out.degree = n;

  if (module_->carrier().rank() == 0 || (n >= 1 && module_->group().order() == 1)) return out;

  if (n == 0 && module_->group().order() == 1) {
    // H^0 of the trivial group is all of A.
    const AbelianGroup& a = module_->carrier();
    out.invariant_factors = a.invariant_factors();
    for (int j = 0; j < a.rank(); ++j) {
      AbelianGroup::Elem gen = a.zero();
      gen[j] = 1;
      Cochain c(module_, 0);
      c.set_by_slot(0, a.index_of(gen));
      out.representatives.push_back(std::move(c));
    }
    return out;
  }

  // Cocycle lattice: x such that delta_n(x) = 0 modulo the target moduli.
  const IMat& dn = delta_matrix(n);
  std::vector<int64_t> target_mods = moduli(n + 1);
  IMat aug(dn.rows(), dn.cols() + static_cast<int>(target_mods.size()));
  for (int r = 0; r < dn.rows(); ++r)
    for (int c = 0; c < dn.cols(); ++c) aug.at(r, c) = dn.at(r, c);
  for (size_t i = 0; i < target_mods.size(); ++i)
    aug.at(static_cast<int>(i), dn.cols() + static_cast<int>(i)) = target_mods[i];

  SmithForm kf = smith_normal_form(std::move(aug));
  std::vector<std::vector<bigint>> kernel = kf.kernel_basis();
  const size_t nn = coords(n);
  IMat proj(static_cast<int>(nn), static_cast<int>(kernel.size()));
  for (size_t j = 0; j < kernel.size(); ++j)
    for (size_t i = 0; i < nn; ++i) proj.at(static_cast<int>(i), static_cast<int>(j)) = kernel[j][i];
  std::vector<std::vector<bigint>> lattice = lattice_column_basis(proj);

  // Coboundary sublattice: columns of delta_{n-1} plus the moduli lattice.
  std::vector<std::vector<bigint>> sub;
  if (n >= 1) {
    const IMat& dprev = delta_matrix(n - 1);
    for (int c = 0; c < dprev.cols(); ++c) {
      std::vector<bigint> col(nn);
      for (size_t r = 0; r < nn; ++r) col[r] = dprev.at(static_cast<int>(r), c);
      sub.push_back(std::move(col));
    }
  }
  std::vector<int64_t> mods = moduli(n);
  for (size_t i = 0; i < nn; ++i) {
    std::vector<bigint> col(nn, bigint(0));
    col[i] = mods[i];
    sub.push_back(std::move(col));
  }

  QuotientPresentation q = lattice_quotient(lattice, sub);
  for (const bigint& d : q.invariant_factors)
    out.invariant_factors.push_back(static_cast<int64_t>(d));
  for (const auto& gen : q.generators) {
    Cochain rep = from_integer_vector(n, gen);
    if (n >= 1 && n <= 3) {
      if (!is_cocycle(rep))
        throw Error(errc::bad_argument, "internal: representative is not a cocycle");
      rep = lex_minimize(rep);
    }
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

CohomologyGroup CohomologyContext::group_brute(int degree, int64_t bound) {
  const PiModule& mod = *module_;
  if (!brute_fits(mod.carrier().order(), mod.group().order(), degree, bound))
    throw Error(errc::brute_force_too_large,
                "brute-force enumeration exceeds the configured bound");

  const int n = degree;
  CohomologyGroup out;
  out.degree = n;
  if (mod.carrier().rank() == 0 || (n >= 1 && mod.group().order() == 1)) return out;

  const AbelianGroup& a = mod.carrier();
  const size_t n_vals = pow_size(static_cast<size_t>(mod.group().order() - 1), n);
  const uint32_t a_order = static_cast<uint32_t>(a.order());

  // All cocycles by odometer.
  std::vector<std::vector<uint32_t>> cocycles;
  std::vector<uint32_t> vals(n_vals, 0);
  while (true) {
    Cochain c(module_, n);
    for (size_t i = 0; i < n_vals; ++i) c.set_by_slot(i, vals[i]);
    bool ok = n > 3 ? false : is_cocycle(c);
    if (ok) cocycles.push_back(vals);
    size_t pos = 0;
    while (pos < n_vals && ++vals[pos] == a_order) {
      vals[pos] = 0;
      ++pos;
    }
    if (pos == n_vals) break;
  }

  bool enumerable = false;
  const auto& bgrp = coboundary_subgroup(n, enumerable);
  if (!enumerable)
    throw Error(errc::brute_force_too_large, "coboundary subgroup exceeds the enumeration bound");

  // Canonical (lexicographically least) representative of each class.
  auto canonical = [&](const std::vector<uint32_t>& z) {
    std::vector<uint32_t> best = z, cand(z.size());
    for (const auto& cb : bgrp) {
      for (size_t i = 0; i < z.size(); ++i) cand[i] = a.add_idx(z[i], cb[i]);
      if (cand < best) best = cand;
    }
    return best;
  };

  std::set<std::vector<uint32_t>> reps_set;
  for (const auto& z : cocycles) reps_set.insert(canonical(z));
  std::vector<std::vector<uint32_t>> reps(reps_set.begin(), reps_set.end());

  // Quotient group table on representatives.
  const int q = static_cast<int>(reps.size());
  std::map<std::vector<uint32_t>, int> index;
  for (int i = 0; i < q; ++i) index[reps[i]] = i;
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      std::vector<uint32_t> sum(n_vals);
      for (size_t t = 0; t < n_vals; ++t) sum[t] = a.add_idx(reps[i][t], reps[j][t]);
      table[i][j] = index.at(canonical(sum));
    }
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) names[i] = "h" + std::to_string(i);
  FiniteGroup qgrp = FiniteGroup::from_table(std::move(names), table);
  AbelianStructure st = abelian_structure(qgrp, [&] {
    std::vector<int> all(q);
    for (int i = 0; i < q; ++i) all[i] = i;
    return all;
  }());

  out.invariant_factors = st.group.invariant_factors();
  for (int j = 0; j < st.group.rank(); ++j) {
    AbelianGroup::Elem gen = st.group.zero();
    gen[j] = 1;
    int rep_index = st.ambient_of_index[st.group.index_of(gen)];
    Cochain c(module_, n);
    for (size_t t = 0; t < n_vals; ++t) c.set_by_slot(t, reps[rep_index][t]);
    out.representatives.push_back(std::move(c));
  }
  return out;
}

CohomologyGroup CohomologyContext::group(int degree, CohomologyMethod method, int64_t bound) {
  if (degree < 0 || degree > 3)
    throw Error(errc::degree_too_high, "cohomology is computed in degrees 0..3");
  return method == CohomologyMethod::snf ? group_snf(degree) : group_brute(degree, bound);
}

std::vector<Cochain> CohomologyContext::classes(int degree, CohomologyMethod method,
                                                int64_t bound) {
  CohomologyGroup h = group(degree, method, bound);
  std::vector<Cochain> out;
  std::vector<int64_t> counter(h.invariant_factors.size(), 0);
  while (true) {
    Cochain z = Cochain::zero(module_, degree);
    for (size_t i = 0; i < counter.size(); ++i)
      z = z.add(h.representatives[i].scalar_mul(counter[i]));
    if (degree >= 1 && degree <= 3) z = lex_minimize(z);
    out.push_back(std::move(z));
    size_t pos = 0;
    while (pos < counter.size() && ++counter[pos] == h.invariant_factors[pos]) {
      counter[pos] = 0;
      ++pos;
    }
    if (pos == counter.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Cochain& x, const Cochain& y) { return x.lex_less(y); });
  return out;
}

std::vector<Cochain> CohomologyContext::all_cocycles(int degree) {
  if (degree < 1 || degree > 3)
    throw Error(errc::bad_argument, "cocycle enumeration needs degree 1..3");

  // Enumerate Z^n = (cocycle lattice)/(moduli lattice) by closing the lattice
  // basis images under addition.
  if (module_->group().order() == 1 || module_->carrier().rank() == 0)
    return {Cochain::zero(module_, degree)};

  const IMat& dn = delta_matrix(degree);
  std::vector<int64_t> target_mods = moduli(degree + 1);
  IMat aug(dn.rows(), dn.cols() + static_cast<int>(target_mods.size()));
  for (int r = 0; r < dn.rows(); ++r)
    for (int c = 0; c < dn.cols(); ++c) aug.at(r, c) = dn.at(r, c);
  for (size_t i = 0; i < target_mods.size(); ++i)
    aug.at(static_cast<int>(i), dn.cols() + static_cast<int>(i)) = target_mods[i];
  SmithForm kf = smith_normal_form(std::move(aug));

  std::set<std::vector<uint32_t>> closure;
  closure.insert(Cochain::zero(module_, degree).values());
  const AbelianGroup& a = module_->carrier();
  std::vector<std::vector<uint32_t>> frontier(closure.begin(), closure.end());
  std::vector<std::vector<uint32_t>> gens;
  const size_t nn = coords(degree);
  for (const auto& col : kf.kernel_basis()) {
    std::vector<bigint> head(col.begin(), col.begin() + static_cast<long>(nn));
    gens.push_back(from_integer_vector(degree, head).values());
  }
  for (size_t head = 0; head < frontier.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<uint32_t> sum(frontier[head].size());
      for (size_t i = 0; i < sum.size(); ++i) sum[i] = a.add_idx(frontier[head][i], g[i]);
      if (closure.insert(sum).second) {
        frontier.push_back(std::move(sum));
        if (closure.size() > (size_t{1} << 22))
          throw Error(errc::brute_force_too_large, "cocycle group is too large to enumerate");
      }
    }
  }

  std::vector<Cochain> out;
  for (const auto& vals : closure) {
    Cochain c(module_, degree);
    for (size_t i = 0; i < vals.size(); ++i) c.set_by_slot(i, vals[i]);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Cochain> solve_coboundary(const Cochain& z) {
  CohomologyContext ctx(z.module());
  return ctx.solve_coboundary(z);
}

CohomologyGroup cohomology_group(const ModulePtr& module, int degree, CohomologyMethod method,
                                 int64_t brute_bound) {
  CohomologyContext ctx(module);
  return ctx.group(degree, method, brute_bound);
}

std::vector<Cochain> classes_of(const ModulePtr& module, int degree) {
  CohomologyContext ctx(module);
  return ctx.classes(degree);
}

}  // namespace grcat
