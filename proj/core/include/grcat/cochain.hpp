#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "grcat/module.hpp"

namespace grcat {

/// Normalized cochain of degree 0..4: a total map from degree-tuples of
/// group elements to carrier elements vanishing on tuples that contain the
/// identity. Values are stored densely on non-identity tuples only, keyed
/// by mixed-radix tuple index (tuple-major), each value a carrier element
/// index.
class Cochain {
 public:
  /// Empty placeholder; assign a real cochain before use.
  Cochain() = default;

  Cochain(ModulePtr module, int degree);

  static Cochain zero(ModulePtr module, int degree) { return Cochain(std::move(module), degree); }
  static Cochain random(ModulePtr module, int degree, std::mt19937& rng);

  int degree() const { return degree_; }
  const ModulePtr& module() const { return module_; }
  const PiModule& mod() const { return *module_; }

  /// Number of stored tuples: (|G|-1)^degree (1 for degree 0).
  size_t tuples() const { return vals_.size(); }
  const std::vector<uint32_t>& values() const { return vals_; }

  /// Value on an arbitrary tuple of group element indices (length = degree);
  /// tuples containing the identity give zero.
  uint32_t value_at(std::span<const int> tuple) const;
  void set_value(std::span<const int> tuple, uint32_t carrier_index);

  uint32_t value_by_slot(size_t slot_index) const { return vals_[slot_index]; }
  void set_by_slot(size_t slot_index, uint32_t v) { vals_[slot_index] = v; }

  /// Decode a slot index back into a tuple of group element indices.
  std::vector<int> tuple_of_slot(size_t slot_index) const;

  Cochain add(const Cochain& o) const;
  Cochain sub(const Cochain& o) const;
  Cochain neg() const;
  Cochain scalar_mul(int64_t c) const;
  bool is_zero() const;

  bool same_signature(const Cochain& o) const;
  bool operator==(const Cochain& o) const;

  /// Tuple-major, coordinate-minor lexicographic order.
  bool lex_less(const Cochain& o) const { return vals_ < o.vals_; }

 private:
  ModulePtr module_;
  int degree_ = 0;
  std::vector<uint32_t> vals_;

  int slot_of_element(int x) const;  // -1 for the identity
  int element_of_slot(int s) const;
  friend Cochain coboundary(const Cochain&);
  friend bool is_cocycle(const Cochain&);
};

/// Bar-resolution coboundary (left action):
///   (df)(g1,...,g_{n+1}) = g1 f(g2,...) + sum_i (-1)^i f(...,g_i g_{i+1},...)
///                          + (-1)^{n+1} f(g1,...,gn).
/// Input degree must be <= 3.
Cochain coboundary(const Cochain& c);

/// True iff the coboundary vanishes identically (degree <= 3). Streams the
/// check without materializing the degree+1 cochain.
bool is_cocycle(const Cochain& c);

}  // namespace grcat
