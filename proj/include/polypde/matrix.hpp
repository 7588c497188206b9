#ifndef POLYPDE_MATRIX_HPP
#define POLYPDE_MATRIX_HPP

// Dense exact matrices over Q(i) and the linear algebra the solver needs:
// Gauss-Jordan reduction, rank, canonical null-space bases, linear solve,
// and column-span comparison.  Everything is deterministic: pivots are the
// first non-zero entry in column scan order, null-space basis vectors set
// one free coordinate to 1, particular solutions zero all free coordinates.

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace polypde {

class exact_matrix {
 public:
  exact_matrix() = default;
  exact_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static exact_matrix identity(std::size_t n) {
    exact_matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(j, j) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  gaussian_rational& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return e_[r * cols_ + c];
  }
  const gaussian_rational& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return e_[r * cols_ + c];
  }

  friend bool operator==(const exact_matrix& a, const exact_matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const exact_matrix& a, const exact_matrix& b) {
    return !(a == b);
  }

  exact_matrix operator-() const {
    exact_matrix out = *this;
    for (auto& x : out.e_) x = -x;
    return out;
  }

  friend exact_matrix operator*(const exact_matrix& a, const exact_matrix& b) {
    if (a.cols_ != b.rows_)
      throw dimension_mismatch("product of " + a.shape() + " and " +
                               b.shape());
    exact_matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          out(r, c) += a(r, k) * b(k, c);
      }
    return out;
  }

  friend std::vector<gaussian_rational> operator*(
      const exact_matrix& a, const std::vector<gaussian_rational>& v) {
    if (a.cols_ != v.size())
      throw dimension_mismatch("matrix " + a.shape() + " times vector of " +
                               std::to_string(v.size()));
    std::vector<gaussian_rational> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!a(r, c).is_zero()) out[r] += a(r, c) * v[c];
    return out;
  }

  exact_matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
    assert(r0 + nrows <= rows_ && c0 + ncols <= cols_);
    exact_matrix out(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
      for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
  }

  static exact_matrix hstack(const exact_matrix& a, const exact_matrix& b) {
    if (a.rows_ != b.rows_)
      throw dimension_mismatch("hstack of " + a.shape() + " and " + b.shape());
    exact_matrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
  }

  static exact_matrix vstack(const exact_matrix& a, const exact_matrix& b) {
    if (a.cols_ != b.cols_)
      throw dimension_mismatch("vstack of " + a.shape() + " and " + b.shape());
    exact_matrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out(a.rows_ + r, c) = b(r, c);
    return out;
  }

  static exact_matrix from_columns(
      const std::vector<std::vector<gaussian_rational>>& cols) {
    if (cols.empty()) return {};
    exact_matrix out(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != out.rows_)
        throw length_mismatch("columns of unequal length");
      for (std::size_t r = 0; r < out.rows_; ++r) out(r, c) = cols[c][r];
    }
    return out;
  }

  std::vector<gaussian_rational> column(std::size_t c) const {
    assert(c < cols_);
    std::vector<gaussian_rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<gaussian_rational> e_;
};

struct rref_result {
  exact_matrix reduced;
  std::vector<std::size_t> pivot_cols;  // ascending, 0-based
};

inline rref_result rref(exact_matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    gaussian_rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == r || m(rr, c).is_zero()) continue;
      gaussian_rational f = m(rr, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(rr, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const exact_matrix& m) {
  return rref(m).pivot_cols.size();
}

namespace detail {

// Canonical null-space basis from a reduced row echelon form: one column per
// free coordinate f, with v[f] = 1 and v[pivot_col(k)] = -R(k, f).
inline exact_matrix nullspace_from_rref(const exact_matrix& r,
                                        const std::vector<std::size_t>& pivots,
                                        std::size_t ncols) {
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots)
    if (c < ncols) is_pivot[c] = true;
  std::size_t nfree = ncols - pivots.size();
  exact_matrix out(ncols, nfree);
  std::size_t col = 0;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    out(f, col) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      out(pivots[k], col) = -r(k, f);
    ++col;
  }
  return out;
}

}  // namespace detail

inline exact_matrix nullspace(const exact_matrix& m) {
  rref_result rr = rref(m);
  return detail::nullspace_from_rref(rr.reduced, rr.pivot_cols, m.cols());
}

struct linear_solution {
  std::vector<gaussian_rational> particular;  // free coordinates zeroed
  exact_matrix homogeneous;                   // canonical null-space basis
};

// Solves M v = b.  Empty optional means the system is inconsistent.
inline std::optional<linear_solution> solve(
    const exact_matrix& m, const std::vector<gaussian_rational>& b) {
  if (b.size() != m.rows())
    throw dimension_mismatch("rhs of length " + std::to_string(b.size()) +
                             " for matrix " + m.shape());
  exact_matrix rhs(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) rhs(r, 0) = b[r];
  rref_result rr = rref(exact_matrix::hstack(m, rhs));
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols())
    return std::nullopt;
  linear_solution out;
  out.particular.assign(m.cols(), 0);
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
    out.particular[rr.pivot_cols[k]] = rr.reduced(k, m.cols());
  out.homogeneous =
      detail::nullspace_from_rref(rr.reduced, rr.pivot_cols, m.cols());
  return out;
}

// Whether the column spans of a and b coincide as subspaces.
inline bool span_equal(const exact_matrix& a, const exact_matrix& b) {
  if (a.rows() != b.rows())
    throw dimension_mismatch("span comparison of " + a.shape() + " and " +
                             b.shape());
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(exact_matrix::hstack(a, b)) == ra;
}

}  // namespace polypde

#endif
