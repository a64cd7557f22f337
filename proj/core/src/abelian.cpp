#include "grcat/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "grcat/error.hpp"
#include "grcat/snf.hpp"

namespace grcat {

AbelianGroup::AbelianGroup(std::vector<int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw Error(errc::bad_argument, "invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw Error(errc::bad_argument, "invariant factors must form a divisibility chain");
  }
  strides_.assign(factors_.size(), 1);
  for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * factors_[i + 1];
  for (int64_t d : factors_) order_ *= d;
}

AbelianGroup::Elem AbelianGroup::reduce(Elem v) const {
  if (v.size() != factors_.size()) throw Error(errc::bad_argument, "element has wrong rank");
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] %= factors_[i];
    if (v[i] < 0) v[i] += factors_[i];
  }
  return v;
}

AbelianGroup::Elem AbelianGroup::add(const Elem& a, const Elem& b) const {
  Elem out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

AbelianGroup::Elem AbelianGroup::neg(const Elem& a) const {
  Elem out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) out[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
  return out;
}

AbelianGroup::Elem AbelianGroup::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

AbelianGroup::Elem AbelianGroup::scalar_mul(int64_t c, const Elem& a) const {
  Elem out(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    int64_t r = (c % factors_[i]) * (a[i] % factors_[i]) % factors_[i];
    out[i] = r < 0 ? r + factors_[i] : r;
  }
  return out;
}

uint32_t AbelianGroup::index_of(const Elem& v) const {
  int64_t idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) idx += v[i] * strides_[i];
  return static_cast<uint32_t>(idx);
}

AbelianGroup::Elem AbelianGroup::element_at(uint32_t idx) const {
  Elem v(factors_.size());
  int64_t rest = idx;
  for (size_t i = 0; i < factors_.size(); ++i) {
    v[i] = rest / strides_[i];
    rest %= strides_[i];
  }
  return v;
}

uint32_t AbelianGroup::add_idx(uint32_t a, uint32_t b) const {
  return index_of(add(element_at(a), element_at(b)));
}

uint32_t AbelianGroup::neg_idx(uint32_t a) const { return index_of(neg(element_at(a))); }

int64_t AbelianGroup::element_order(const Elem& v) const {
  int64_t ord = 1;
  for (size_t i = 0; i < factors_.size(); ++i)
    if (v[i] != 0) ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], v[i]));
  return ord;
}

std::string AbelianGroup::describe() const { return describe_invariant_factors(factors_); }

FiniteGroup AbelianGroup::as_finite_group() const {
  const int n = static_cast<int>(order_);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    Elem a = element_at(i);
    std::string s;
    for (size_t c = 0; c < a.size(); ++c) s += (c ? "," : "") + std::to_string(a[c]);
    names[i] = "(" + s + ")";
    for (int j = 0; j < n; ++j) table[i][j] = static_cast<int>(add_idx(i, j));
  }
  return FiniteGroup::from_table(std::move(names), table);
}

std::string describe_invariant_factors(const std::vector<int64_t>& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i)
    s += (i ? " x Z/" : "Z/") + std::to_string(factors[i]);
  return s;
}

AbelianStructure abelian_structure(const FiniteGroup& ambient, const std::vector<int>& elements) {
  const int r = static_cast<int>(elements.size());
  std::vector<int> pos(ambient.order(), -1);
  for (int i = 0; i < r; ++i) pos[elements[i]] = i;
  if (pos[ambient.identity()] < 0)
    throw Error(errc::bad_argument, "subgroup must contain the identity");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int p = ambient.mul(elements[i], elements[j]);
      if (pos[p] < 0) throw Error(errc::bad_argument, "element set is not closed");
      if (ambient.mul(elements[j], elements[i]) != p)
        throw Error(errc::bad_argument, "subgroup is not commutative");
    }

  // Presentation with one generator per element: relations e_i + e_j - e_k
  // for every product, plus the order relation of each element. SNF of the
  // relation matrix (relations as rows) yields the canonical decomposition.
  // New generator j (for diagonal d_j > 1) is sum_i Vinv[j][i] * elements[i].
  IMat rel(r * r + r, r);
  int row = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j, ++row) {
      int k = pos[ambient.mul(elements[i], elements[j])];
      rel.at(row, i) += 1;
      rel.at(row, j) += 1;
      rel.at(row, k) -= 1;
    }
  for (int i = 0; i < r; ++i, ++row)
    rel.at(row, i) = ambient.element_order(elements[i]);

  SmithForm f = smith_normal_form(std::move(rel));

  std::vector<int64_t> factors;
  std::vector<int> gens;
  for (int j = 0; j < r; ++j) {
    bigint d = j < f.rank ? f.diag[j] : bigint(0);
    if (d == 1) continue;
    if (d == 0) throw Error(errc::bad_argument, "presentation is not finite");
    // Generator = product of elements[i]^(Vinv[j][i]).
    int g = ambient.identity();
    for (int i = 0; i < r; ++i) {
      bigint e = f.vinv.at(j, i);
      int64_t ord = ambient.element_order(elements[i]);
      int64_t exp = static_cast<int64_t>(e % ord);
      if (exp < 0) exp += ord;
      for (int64_t t = 0; t < exp; ++t) g = ambient.mul(g, elements[i]);
    }
    factors.push_back(static_cast<int64_t>(d));
    gens.push_back(g);
  }

  AbelianGroup group(factors);
  if (group.order() != r)
    throw Error(errc::bad_argument, "internal: decomposition order mismatch");

  // Embed every carrier element.
  AbelianStructure out{std::move(group), {}, std::vector<int>(ambient.order(), -1)};
  const int64_t n = out.group.order();
  out.ambient_of_index.resize(n);
  for (int64_t idx = 0; idx < n; ++idx) {
    AbelianGroup::Elem v = out.group.element_at(static_cast<uint32_t>(idx));
    int g = ambient.identity();
    for (size_t c = 0; c < gens.size(); ++c)
      for (int64_t t = 0; t < v[c]; ++t) g = ambient.mul(g, gens[c]);
    out.ambient_of_index[idx] = g;
    if (out.index_of_ambient[g] != -1)
      throw Error(errc::bad_argument, "internal: generators do not span independently");
    out.index_of_ambient[g] = static_cast<int>(idx);
  }
  for (int e : elements)
    if (out.index_of_ambient[e] < 0)
      throw Error(errc::bad_argument, "internal: embedding misses an element");
  return out;
}

AbelianStructure center(const FiniteGroup& g) {
  std::vector<int> elems;
  for (int c = 0; c < g.order(); ++c) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x) central = g.mul(c, x) == g.mul(x, c);
    if (central) elems.push_back(c);
  }
  return abelian_structure(g, elems);
}

}  // namespace grcat
