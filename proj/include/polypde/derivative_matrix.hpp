#ifndef POLYPDE_DERIVATIVE_MATRIX_HPP
#define POLYPDE_DERIVATIVE_MATRIX_HPP

// The structured matrix of scaled derivatives that reduces "which
// polynomials q make e^{i x0.x} q(x) a solution of P(-iD)u = 0" to an exact
// null-space problem.
//
// Rows are indexed by multi-indices beta, columns by alpha, both in the
// canonical graded order up to the degree cap.  The entry at (beta, alpha) is
//
//     (-i)^{|alpha - beta|} * C(alpha, beta) * (D^{alpha-beta} f)(x0)
//
// when beta divides alpha, and 0 otherwise.  Grouping indices by total
// degree tiles the matrix into blocks: block (k, K) holds the order-(K-k)
// derivatives, diagonal blocks are f(x0) times the identity, and blocks
// below the diagonal vanish, so the whole matrix is block upper triangular.

#include <cassert>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace polypde {

namespace detail {

// All (D^g f)(x0) for |g| <= order, keyed by g.
inline std::map<multi_index, gaussian_rational, graded_order>
derivative_table(const multi_poly& f, const point& x0, int order) {
  std::map<multi_index, gaussian_rational, graded_order> table;
  for (const multi_index& g : graded_set(f.dim(), order))
    table.emplace(g, f.derivative(g).evaluate(x0));
  return table;
}

inline void check_point(const multi_poly& f, const point& x0) {
  if (static_cast<int>(x0.size()) != f.dim())
    throw dimension_mismatch("point of arity " + std::to_string(x0.size()) +
                             " for polynomial over " +
                             std::to_string(f.dim()) + " variables");
}

}  // namespace detail

// One block: rows over level_set(d, k), columns over level_set(d, K).
inline exact_matrix build_block(const multi_poly& f, const point& x0, int k,
                                int K) {
  assert(k >= 0 && K >= 0);
  detail::check_point(f, x0);
  index_set rows = level_set(f.dim(), k);
  index_set cols = level_set(f.dim(), K);
  exact_matrix out(rows.size(), cols.size());
  if (k > K) return out;
  auto table = detail::derivative_table(f, x0, K - k);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const multi_index& beta = rows[j];
    for (std::size_t m = 0; m < cols.size(); ++m) {
      const multi_index& alpha = cols[m];
      if (!divides(beta, alpha)) continue;
      multi_index diff = alpha - beta;
      const gaussian_rational& dv = table.at(diff);
      if (dv.is_zero()) continue;
      out(j, m) = i_power(diff.degree(), -1) *
                  gaussian_rational(multi_binomial(alpha, beta)) * dv;
    }
  }
  return out;
}

// The full matrix over graded_set(d, cap), with block bookkeeping.
struct derivative_matrix {
  exact_matrix mat;
  int dim = 0;
  int cap = 0;

  // Start offset (0-based) of degree level k within the graded enumeration.
  std::size_t level_offset(int k) const {
    assert(k >= 0 && k <= cap + 1);
    return k == 0 ? 0 : static_cast<std::size_t>(graded_count(dim, k - 1));
  }

  exact_matrix block(int k, int K) const {
    assert(k >= 0 && k <= cap && K >= 0 && K <= cap);
    return mat.submatrix(level_offset(k), level_offset(K),
                         static_cast<std::size_t>(level_count(dim, k)),
                         static_cast<std::size_t>(level_count(dim, K)));
  }
};

inline derivative_matrix build_full(const multi_poly& f, const point& x0,
                                    int cap) {
  assert(cap >= 0);
  detail::check_point(f, x0);
  index_set basis = graded_set(f.dim(), cap);
  auto table = detail::derivative_table(f, x0, cap);
  exact_matrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const multi_index& beta = basis[j];
    for (std::size_t c = j; c < basis.size(); ++c) {
      const multi_index& alpha = basis[c];
      if (!divides(beta, alpha)) continue;
      multi_index diff = alpha - beta;
      const gaussian_rational& dv = table.at(diff);
      if (dv.is_zero()) continue;
      m(j, c) = i_power(diff.degree(), -1) *
                gaussian_rational(multi_binomial(alpha, beta)) * dv;
    }
  }
  return {std::move(m), f.dim(), cap};
}

// Row vector with entry (-i)^{|alpha|} (D^alpha f)(x0) per column alpha; the
// beta = 0 row of build_full.
inline std::vector<gaussian_rational> derivative_row(const multi_poly& f,
                                                     const point& x0,
                                                     int cap) {
  assert(cap >= 0);
  detail::check_point(f, x0);
  index_set basis = graded_set(f.dim(), cap);
  auto table = detail::derivative_table(f, x0, cap);
  std::vector<gaussian_rational> out(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    const multi_index& alpha = basis[m];
    out[m] = i_power(alpha.degree(), -1) * table.at(alpha);
  }
  return out;
}

// Vertical stack of the full matrices of several polynomials at one point;
// its null space cuts out the simultaneous solutions.
inline exact_matrix build_stacked(const std::vector<multi_poly>& fs,
                                  const point& x0, int cap) {
  if (fs.empty()) throw empty_list("build_stacked");
  exact_matrix out = build_full(fs.front(), x0, cap).mat;
  for (std::size_t n = 1; n < fs.size(); ++n) {
    if (fs[n].dim() != fs.front().dim())
      throw dimension_mismatch("stacked polynomials over different variable "
                               "counts");
    out = exact_matrix::vstack(out, build_full(fs[n], x0, cap).mat);
  }
  return out;
}

}  // namespace polypde

#endif
