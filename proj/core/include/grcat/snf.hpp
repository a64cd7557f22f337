#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grcat {

using bigint = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bigint& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const bigint& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IMat mul(const IMat& other) const;
  std::vector<bigint> mul_vec(const std::vector<bigint>& v) const;
  IMat transpose() const;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<bigint> a_;
};

/// Smith normal form U*A*V = D with unimodular transforms and their inverses.
/// diag holds the nonzero invariant factors d_1 | d_2 | ... (positive);
/// rank = diag.size().
struct SmithForm {
  IMat u, uinv, v, vinv;
  std::vector<bigint> diag;
  int rank = 0;
  int rows = 0;
  int cols = 0;

  /// One solution x of A x = b, or nullopt. b has `rows` entries.
  std::optional<std::vector<bigint>> solve(const std::vector<bigint>& b) const;

  /// Basis of the integer kernel {x : A x = 0}, as columns.
  std::vector<std::vector<bigint>> kernel_basis() const;
};

/// Exact Smith normal form over the integers. Pivoting chooses the entry of
/// least nonzero magnitude in the working submatrix.
SmithForm smith_normal_form(IMat a);

/// Basis (as columns) of the lattice spanned by the given columns.
std::vector<std::vector<bigint>> lattice_column_basis(const IMat& generators);

/// Given a full-rank lattice L (basis columns) and generators of a finite-
/// index sublattice B <= L, returns the invariant factors (those > 1) of
/// L/B together with an integer representative vector in L for each cyclic
/// generator.
struct QuotientPresentation {
  std::vector<bigint> invariant_factors;
  std::vector<std::vector<bigint>> generators;  // vectors in the ambient Z^n
};
QuotientPresentation lattice_quotient(const std::vector<std::vector<bigint>>& basis,
                                      const std::vector<std::vector<bigint>>& sub_generators);

}  // namespace grcat
