#include "grcat/cochain.hpp"

#include <algorithm>

#include "grcat/error.hpp"

namespace grcat {

namespace {

size_t pow_size(size_t base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

constexpr size_t kMaxSlots = size_t{1} << 28;

}  // namespace

Cochain::Cochain(ModulePtr module, int degree) : module_(std::move(module)), degree_(degree) {
  if (degree_ < 0 || degree_ > 4) throw Error(errc::bad_argument, "cochain degree must be 0..4");
  const size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  size_t slots = pow_size(m1, degree_);
  if (slots > kMaxSlots) throw Error(errc::bad_argument, "cochain would be too large to store");
  vals_.assign(slots, 0);
}

Cochain Cochain::random(ModulePtr module, int degree, std::mt19937& rng) {
  Cochain c(std::move(module), degree);
  std::uniform_int_distribution<uint32_t> dist(
      0, static_cast<uint32_t>(c.mod().carrier().order() - 1));
  for (auto& v : c.vals_) v = dist(rng);
  return c;
}

int Cochain::slot_of_element(int x) const {
  int e = module_->group().identity();
  if (x == e) return -1;
  return x < e ? x : x - 1;
}

int Cochain::element_of_slot(int s) const {
  int e = module_->group().identity();
  return s < e ? s : s + 1;
}

uint32_t Cochain::value_at(std::span<const int> tuple) const {
  const size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  size_t idx = 0;
  for (int x : tuple) {
    int s = slot_of_element(x);
    if (s < 0) return module_->carrier().index_of(module_->carrier().zero());
    idx = idx * m1 + static_cast<size_t>(s);
  }
  return vals_[idx];
}

void Cochain::set_value(std::span<const int> tuple, uint32_t carrier_index) {
  const size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  size_t idx = 0;
  for (int x : tuple) {
    int s = slot_of_element(x);
    if (s < 0) {
      if (carrier_index != 0)
        throw Error(errc::bad_argument, "normalized cochains vanish on identity tuples");
      return;
    }
    idx = idx * m1 + static_cast<size_t>(s);
  }
  vals_[idx] = carrier_index;
}

std::vector<int> Cochain::tuple_of_slot(size_t slot_index) const {
  const size_t m1 = static_cast<size_t>(module_->group().order() - 1);
  std::vector<int> tuple(degree_);
  for (int i = degree_ - 1; i >= 0; --i) {
    tuple[i] = element_of_slot(static_cast<int>(slot_index % m1));
    slot_index /= m1;
  }
  return tuple;
}

Cochain Cochain::add(const Cochain& o) const {
  if (!same_signature(o)) throw Error(errc::signature_mismatch, "cochain add: signature mismatch");
  Cochain out = *this;
  const AbelianGroup& a = module_->carrier();
  for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = a.add_idx(vals_[i], o.vals_[i]);
  return out;
}

Cochain Cochain::sub(const Cochain& o) const {
  if (!same_signature(o)) throw Error(errc::signature_mismatch, "cochain sub: signature mismatch");
  Cochain out = *this;
  const AbelianGroup& a = module_->carrier();
  for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = a.sub_idx(vals_[i], o.vals_[i]);
  return out;
}

Cochain Cochain::neg() const {
  Cochain out = *this;
  const AbelianGroup& a = module_->carrier();
  for (auto& v : out.vals_) v = a.neg_idx(v);
  return out;
}

Cochain Cochain::scalar_mul(int64_t c) const {
  Cochain out = *this;
  const AbelianGroup& a = module_->carrier();
  for (auto& v : out.vals_) v = a.index_of(a.scalar_mul(c, a.element_at(v)));
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(vals_.begin(), vals_.end(), [](uint32_t v) { return v == 0; });
}

bool Cochain::same_signature(const Cochain& o) const {
  return degree_ == o.degree_ && (module_ == o.module_ || *module_ == *o.module_);
}

bool Cochain::operator==(const Cochain& o) const {
  return same_signature(o) && vals_ == o.vals_;
}

namespace {

// Shared evaluation of (df)(tuple) as a carrier element index.
uint32_t coboundary_at(const Cochain& c, std::span<const int> tuple) {
  const PiModule& mod = c.mod();
  const AbelianGroup& a = mod.carrier();
  const int n = c.degree();

  // g1 * f(g2,...,g_{n+1})
  uint32_t acc = mod.act(tuple[0], c.value_at(tuple.subspan(1)));

  std::vector<int> merged(n);
  for (int i = 1; i <= n; ++i) {
    // (-1)^i f(g1,...,g_i g_{i+1},...,g_{n+1})
    for (int j = 0; j < n; ++j) {
      if (j < i - 1)
        merged[j] = tuple[j];
      else if (j == i - 1)
        merged[j] = mod.group().mul(tuple[i - 1], tuple[i]);
      else
        merged[j] = tuple[j + 1];
    }
    uint32_t term = c.value_at(merged);
    acc = (i % 2) ? a.sub_idx(acc, term) : a.add_idx(acc, term);
  }

  // (-1)^{n+1} f(g1,...,gn)
  uint32_t last = c.value_at(tuple.subspan(0, n));
  acc = ((n + 1) % 2) ? a.sub_idx(acc, last) : a.add_idx(acc, last);
  return acc;
}

}  // namespace

Cochain coboundary(const Cochain& c) {
  if (c.degree() > 3) throw Error(errc::degree_too_high, "coboundary input degree must be <= 3");
  Cochain out(c.module(), c.degree() + 1);
  std::vector<int> tuple;
  for (size_t slot = 0; slot < out.tuples(); ++slot) {
    tuple = out.tuple_of_slot(slot);
    out.set_by_slot(slot, coboundary_at(c, tuple));
  }
  return out;
}

bool is_cocycle(const Cochain& c) {
  if (c.degree() > 3) throw Error(errc::degree_too_high, "cocycle check needs degree <= 3");
  const int m = c.mod().group().order();
  const int n1 = c.degree() + 1;
  const size_t m1 = static_cast<size_t>(m - 1);

  // The coboundary of a normalized cochain is normalized, so only
  // non-identity tuples need checking. Streamed to avoid materializing a
  // degree-4 cochain.
  size_t total = pow_size(m1, n1);
  std::vector<int> tuple(n1);
  const int e = c.mod().group().identity();
  for (size_t slot = 0; slot < total; ++slot) {
    size_t rest = slot;
    for (int i = n1 - 1; i >= 0; --i) {
      int s = static_cast<int>(rest % m1);
      rest /= m1;
      tuple[i] = s < e ? s : s + 1;
    }
    if (coboundary_at(c, tuple) != 0) return false;
  }
  return true;
}

}  // namespace grcat
