#include "grcat/snf.hpp"

#include <algorithm>
#include <cassert>

#include "grcat/error.hpp"

namespace grcat {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::mul(const IMat& other) const {
  assert(cols_ == other.rows_);
  IMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const bigint& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += x * other.at(k, j);
    }
  return out;
}

std::vector<bigint> IMat::mul_vec(const std::vector<bigint>& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<bigint> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

IMat IMat::transpose() const {
  IMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool IMat::is_zero() const {
  for (const bigint& x : a_)
    if (x != 0) return false;
  return true;
}

namespace {

struct Worker {
  IMat d, u, uinv, v, vinv;

  explicit Worker(IMat a)
      : d(std::move(a)),
        u(IMat::identity(d.rows())),
        uinv(IMat::identity(d.rows())),
        v(IMat::identity(d.cols())),
        vinv(IMat::identity(d.cols())) {}

  // Row ops keep U*A*V = D: applying L to D means U <- L*U, Uinv <- Uinv*L^-1.
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row_i += f * row_j
  void add_row(int i, int j, const bigint& f) {
    for (int c = 0; c < d.cols(); ++c) d.at(i, c) += f * d.at(j, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) += f * u.at(j, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, j) -= f * uinv.at(r, i);
  }
  // col_i += f * col_j
  void add_col(int i, int j, const bigint& f) {
    for (int r = 0; r < d.rows(); ++r) d.at(r, i) += f * d.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, i) += f * v.at(r, j);
    for (int c = 0; c < vinv.cols(); ++c) vinv.at(j, c) -= f * vinv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    bigint best;
    for (int r = t; r < d.rows(); ++r)
      for (int c = t; c < d.cols(); ++c) {
        if (d.at(r, c) == 0) continue;
        bigint mag = abs(d.at(r, c));
        if (!found || mag < best) {
          best = mag;
          pr = r;
          pc = c;
          found = true;
        }
      }
    return found;
  }

  void run() {
    const int nmin = std::min(d.rows(), d.cols());
    for (int t = 0; t < nmin; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);

      // Clear row and column t; restart when a remainder survives, since the
      // new smaller entry becomes the pivot.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (int r = t + 1; r < d.rows(); ++r) {
          if (d.at(r, t) == 0) continue;
          bigint q = d.at(r, t) / d.at(t, t);
          add_row(r, t, -q);
          if (d.at(r, t) != 0) {
            // Remainder is smaller than the pivot; swap it in.
            swap_rows(t, r);
            dirty = true;
          }
        }
        for (int c = t + 1; c < d.cols(); ++c) {
          if (d.at(t, c) == 0) continue;
          bigint q = d.at(t, c) / d.at(t, t);
          add_col(c, t, -q);
          if (d.at(t, c) != 0) {
            swap_cols(t, c);
            dirty = true;
          }
        }
      }

      // Divisibility: pivot must divide every remaining entry.
      bool restart = false;
      for (int r = t + 1; r < d.rows() && !restart; ++r)
        for (int c = t + 1; c < d.cols() && !restart; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            add_row(t, r, 1);
            restart = true;
          }
      if (restart) {
        --t;
        continue;
      }
      if (d.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IMat a) {
  Worker w(std::move(a));
  w.run();

  SmithForm out;
  out.rows = w.d.rows();
  out.cols = w.d.cols();
  const int nmin = std::min(out.rows, out.cols);
  for (int i = 0; i < nmin; ++i) {
    if (w.d.at(i, i) == 0) break;
    out.diag.push_back(w.d.at(i, i));
  }
  out.rank = static_cast<int>(out.diag.size());
  out.u = std::move(w.u);
  out.uinv = std::move(w.uinv);
  out.v = std::move(w.v);
  out.vinv = std::move(w.vinv);
  return out;
}

std::optional<std::vector<bigint>> SmithForm::solve(const std::vector<bigint>& b) const {
  std::vector<bigint> ub = u.mul_vec(b);
  std::vector<bigint> z(cols, bigint(0));
  for (int i = 0; i < rows; ++i) {
    if (i < rank) {
      if (ub[i] % diag[i] != 0) return std::nullopt;
      z[i] = ub[i] / diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return v.mul_vec(z);
}

std::vector<std::vector<bigint>> SmithForm::kernel_basis() const {
  std::vector<std::vector<bigint>> out;
  for (int j = rank; j < cols; ++j) {
    std::vector<bigint> col(cols);
    for (int i = 0; i < cols; ++i) col[i] = v.at(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

std::vector<std::vector<bigint>> lattice_column_basis(const IMat& generators) {
  SmithForm f = smith_normal_form(generators);
  // A*V has columns d_i * (Uinv column i) for i < rank; those form a basis.
  std::vector<std::vector<bigint>> basis;
  for (int i = 0; i < f.rank; ++i) {
    std::vector<bigint> col(generators.rows());
    for (int r = 0; r < generators.rows(); ++r) col[r] = f.diag[i] * f.uinv.at(r, i);
    basis.push_back(std::move(col));
  }
  return basis;
}

QuotientPresentation lattice_quotient(const std::vector<std::vector<bigint>>& basis,
                                      const std::vector<std::vector<bigint>>& sub_generators) {
  const int n = basis.empty() ? 0 : static_cast<int>(basis[0].size());
  const int r = static_cast<int>(basis.size());

  if (r == 0) return {};

  IMat bl(n, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) bl.at(i, j) = basis[j][i];
  SmithForm bf = smith_normal_form(bl);

  // Express each sub-generator in basis coordinates.
  IMat coeffs(r, static_cast<int>(sub_generators.size()));
  for (size_t j = 0; j < sub_generators.size(); ++j) {
    auto c = bf.solve(sub_generators[j]);
    if (!c) throw Error(errc::bad_argument, "sublattice generator outside the lattice");
    for (int i = 0; i < r; ++i) coeffs.at(i, j) = (*c)[i];
  }

  SmithForm cf = smith_normal_form(coeffs);
  QuotientPresentation out;
  for (int i = 0; i < r; ++i) {
    bigint d = i < cf.rank ? cf.diag[i] : bigint(0);
    if (d == 1) continue;
    if (d == 0)
      throw Error(errc::bad_argument, "quotient is infinite; sublattice not of full rank");
    // Generator of the i-th cyclic factor: BL * (Uinv column i).
    std::vector<bigint> gen(n, bigint(0));
    for (int bcol = 0; bcol < r; ++bcol) {
      const bigint& c = cf.uinv.at(bcol, i);
      if (c == 0) continue;
      for (int row = 0; row < n; ++row) gen[row] += c * basis[bcol][row];
    }
    out.invariant_factors.push_back(d);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

}  // namespace grcat
