#ifndef POLYPDE_SOLVER_HPP
#define POLYPDE_SOLVER_HPP

// Solution spaces of constant-coefficient equations P(-iD)u = 0 (single or
// simultaneous) and P(-iD)u = e^{i x0.x} F among functions e^{i x0.x} q(x)
// with deg q bounded by a cap.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "derivative_matrix.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace polypde {

// Polynomial parts of solutions at one root: all of
// span(basis) (+ particular when a right-hand side was solved), each element
// q standing for e^{i root.x} q(x).
struct solution_space {
  point root;
  int degree_cap = 0;
  std::vector<multi_poly> basis;
  std::optional<multi_poly> particular;

  std::size_t dimension() const { return basis.size(); }
};

namespace detail {

inline std::vector<multi_poly> basis_from_nullspace(const exact_matrix& ns,
                                                    int dim, int cap) {
  std::vector<multi_poly> out;
  out.reserve(ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c)
    out.push_back(from_coeff_vector(ns.column(c), dim, cap));
  return out;
}

}  // namespace detail

inline solution_space homogeneous_solutions(const multi_poly& p,
                                            const point& x0, int cap) {
  if (p.is_zero()) throw zero_polynomial("homogeneous_solutions");
  derivative_matrix dm = build_full(p, x0, cap);
  return {x0, cap, detail::basis_from_nullspace(nullspace(dm.mat), p.dim(), cap),
          std::nullopt};
}

inline solution_space system_solutions(const std::vector<multi_poly>& ps,
                                       const point& x0, int cap) {
  if (ps.empty()) throw empty_list("system_solutions");
  for (const multi_poly& p : ps)
    if (p.is_zero()) throw zero_polynomial("system_solutions");
  exact_matrix stacked = build_stacked(ps, x0, cap);
  return {x0, cap,
          detail::basis_from_nullspace(nullspace(stacked), ps.front().dim(), cap),
          std::nullopt};
}

// Solves P(-iD)u = e^{i x0.x} F.  Default cap: deg F plus the least order m
// with some (D^m P)(x0) != 0, which always admits a solution; a caller
// forcing a smaller cap may get inconsistent_system.
inline solution_space rhs_solve(const multi_poly& p, const multi_poly& f,
                                const point& x0,
                                std::optional<int> cap = std::nullopt) {
  if (p.is_zero()) throw zero_polynomial("rhs_solve");
  int deg_f = f.degree() < 0 ? 0 : f.degree();
  int use_cap;
  if (cap) {
    if (*cap < f.degree())
      throw degree_exceeds_cap("cap " + std::to_string(*cap) +
                               " below right-hand side degree " +
                               std::to_string(f.degree()));
    use_cap = *cap;
  } else {
    use_cap = deg_f + least_nonzero_derivative_order(p, x0).order;
  }
  derivative_matrix dm = build_full(p, x0, use_cap);
  auto sol = solve(dm.mat, coeff_vector(f, use_cap));
  if (!sol) throw inconsistent_system();
  return {x0, use_cap,
          detail::basis_from_nullspace(sol->homogeneous, p.dim(), use_cap),
          from_coeff_vector(sol->particular, p.dim(), use_cap)};
}

struct dimension_report {
  int degree_cap = 0;
  int least_order = 0;        // least m with some (D^m P)(x0) != 0
  std::int64_t predicted = 0; // from the counting formula
  std::int64_t computed = 0;  // nullity of the built matrix
};

// Predicted kernel dimension: 0 when P(x0) != 0; graded_count(d, cap) -
// graded_count(d, cap - m) when 0 < m <= cap; the full graded_count(d, cap)
// when m > cap.
inline dimension_report predicted_dimension(const multi_poly& p,
                                            const point& x0, int cap) {
  if (p.is_zero()) throw zero_polynomial("predicted_dimension");
  int m = least_nonzero_derivative_order(p, x0).order;
  std::int64_t predicted;
  if (m == 0)
    predicted = 0;
  else if (m <= cap)
    predicted = graded_count(p.dim(), cap) - graded_count(p.dim(), cap - m);
  else
    predicted = graded_count(p.dim(), cap);
  derivative_matrix dm = build_full(p, x0, cap);
  std::int64_t computed =
      static_cast<std::int64_t>(dm.mat.cols() - rank(dm.mat));
  return {cap, m, predicted, computed};
}

// Checks a solution space against the equations by direct application: every
// basis element must be annihilated by every P, and when both a particular
// part and a right-hand side are given (single P only), the residual must
// equal F exactly.  On failure, fills `diagnostic` (when non-null) with the
// first offending element.
inline bool verify(const solution_space& space,
                   const std::vector<multi_poly>& ps,
                   const std::optional<multi_poly>& rhs = std::nullopt,
                   std::string* diagnostic = nullptr) {
  if (ps.empty()) throw empty_list("verify");
  auto fail = [&](const std::string& what) {
    if (diagnostic) *diagnostic = what;
    return false;
  };
  for (std::size_t n = 0; n < ps.size(); ++n) {
    for (std::size_t j = 0; j < space.basis.size(); ++j) {
      exp_poly r = apply_operator(ps[n], {space.root, space.basis[j]});
      if (!r.poly.is_zero()) {
        std::ostringstream os;
        os << "basis element " << j + 1 << " is not annihilated by equation "
           << n + 1;
        return fail(os.str());
      }
    }
  }
  if (rhs && space.particular) {
    if (ps.size() != 1)
      throw arity_mismatch("a right-hand side check needs exactly one "
                           "equation");
    exp_poly r = apply_operator(ps.front(), {space.root, *space.particular});
    if (r.poly != *rhs)
      return fail("particular part does not reproduce the right-hand side");
  }
  return true;
}

// Whether e^{i root.x} q lies in the space (affine when a particular part is
// present).
inline bool membership(const solution_space& space, const multi_poly& q) {
  if (q.dim() != static_cast<int>(space.root.size()))
    throw dimension_mismatch("membership query over " +
                             std::to_string(q.dim()) +
                             " variables in a space over " +
                             std::to_string(space.root.size()));
  if (q.degree() > space.degree_cap)
    throw degree_exceeds_cap("membership query of degree " +
                             std::to_string(q.degree()) + " against cap " +
                             std::to_string(space.degree_cap));
  multi_poly target = space.particular ? q - *space.particular : q;
  std::vector<std::vector<gaussian_rational>> cols;
  cols.reserve(space.basis.size());
  for (const multi_poly& b : space.basis)
    cols.push_back(coeff_vector(b, space.degree_cap));
  exact_matrix a = exact_matrix::from_columns(cols);
  std::vector<gaussian_rational> bvec = coeff_vector(target, space.degree_cap);
  if (space.basis.empty()) {
    for (const gaussian_rational& x : bvec)
      if (!x.is_zero()) return false;
    return true;
  }
  return solve(a, bvec).has_value();
}

}  // namespace polypde

#endif
