#ifndef POLYPDE_TESTS_FIXTURES_HPP
#define POLYPDE_TESTS_FIXTURES_HPP

// Frozen reference data: the classical operators' symbols and the exact
// matrices, kernels, and solutions they produce at small degree caps.
// Matrices are written row by row with whitespace-separated exact scalar
// literals, columns in the canonical graded order (1, x, y, x^2, xy, y^2,
// x^3, x^2 y, x y^2, y^3 for two variables).

#include <sstream>
#include <string>
#include <vector>

#include "polypde/matrix.hpp"
#include "polypde/poly.hpp"
#include "polypde/scalar.hpp"

namespace fixtures {

using namespace polypde;

inline exact_matrix matrix_of(const std::vector<std::string>& rows) {
  std::vector<std::vector<gaussian_rational>> parsed;
  for (const std::string& row : rows) {
    std::istringstream in(row);
    std::vector<gaussian_rational> r;
    std::string tok;
    while (in >> tok) r.push_back(parse_scalar(tok));
    parsed.push_back(std::move(r));
  }
  exact_matrix m(parsed.size(), parsed.empty() ? 0 : parsed.front().size());
  for (std::size_t r = 0; r < parsed.size(); ++r)
    for (std::size_t c = 0; c < parsed[r].size(); ++c) m(r, c) = parsed[r][c];
  return m;
}

// --- symbols -------------------------------------------------------------

// -x^2 - y^2  (two-dimensional Laplace operator)
inline multi_poly p_laplace2() {
  multi_poly p(2);
  p.add_term({2, 0}, -1);
  p.add_term({0, 2}, -1);
  return p;
}

// -x^2 - iy  (heat operator)
inline multi_poly p_heat() {
  multi_poly p(2);
  p.add_term({2, 0}, -1);
  p.add_term({0, 1}, {rational(0), rational(-1)});
  return p;
}

// -x^2 - y^2 - z^2  (three-dimensional Laplace operator)
inline multi_poly p_laplace3() {
  multi_poly p(3);
  p.add_term({2, 0, 0}, -1);
  p.add_term({0, 2, 0}, -1);
  p.add_term({0, 0, 2}, -1);
  return p;
}

// -xy - xz - yz  (mixed second derivatives)
inline multi_poly p_mixed3() {
  multi_poly p(3);
  p.add_term({1, 1, 0}, -1);
  p.add_term({1, 0, 1}, -1);
  p.add_term({0, 1, 1}, -1);
  return p;
}

// -x^2 - y^2 - 1  (Helmholtz-type operator)
inline multi_poly p_helmholtz() {
  multi_poly p(2);
  p.add_term({2, 0}, -1);
  p.add_term({0, 2}, -1);
  p.add_term({0, 0}, -1);
  return p;
}

// (ix - 1)^2 + (iy - i)^2 = -x^2 - y^2 - 2ix + 2y  (shifted Laplace)
inline multi_poly p_shifted_laplace() {
  multi_poly p(2);
  p.add_term({2, 0}, -1);
  p.add_term({0, 2}, -1);
  p.add_term({1, 0}, {rational(0), rational(-2)});
  p.add_term({0, 1}, 2);
  return p;
}

// --- matrices ------------------------------------------------------------

// Laplace matrix at the origin, cap 3.
inline exact_matrix laplace2_cap3() {
  return matrix_of({
      "0 0 0 2 0 2 0 0 0 0",
      "0 0 0 0 0 0 6 0 2 0",
      "0 0 0 0 0 0 0 2 0 6",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
  });
}

// Heat matrix at the origin, cap 3.
inline exact_matrix heat_cap3() {
  return matrix_of({
      "0 0 -1 2 0 0 0 0 0 0",
      "0 0 0 0 -1 0 6 0 0 0",
      "0 0 0 0 0 -2 0 2 0 0",
      "0 0 0 0 0 0 0 -1 0 0",
      "0 0 0 0 0 0 0 0 -2 0",
      "0 0 0 0 0 0 0 0 0 -3",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
  });
}

// Laplace matrix at (1, i), cap 3, after correcting a global sign slip in
// the source display (its own entry rule, and the constant second
// derivative -2 shared with the origin matrix, force the opposite sign).
inline exact_matrix laplace2_at_1i_cap3() {
  return -matrix_of({
      "0 -2i 2 -2 0 -2 0 0 0 0",
      "0 0 0 -4i 2 0 -6 0 -2 0",
      "0 0 0 0 -2i 4 0 -2 0 -6",
      "0 0 0 0 0 0 -6i 2 0 0",
      "0 0 0 0 0 0 0 -4i 4 0",
      "0 0 0 0 0 0 0 0 -2i 6",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
      "0 0 0 0 0 0 0 0 0 0",
  });
}

// Rows of the stacked degree-(1,3) blocks for the three-dimensional system
// {p_laplace3, p_mixed3} at the origin; columns over the ten cubics.
inline exact_matrix system3_block13() {
  return matrix_of({
      "6 0 2 0 0 0 0 2 0 0",
      "0 2 0 6 0 0 0 0 2 0",
      "0 0 0 0 2 0 2 0 0 6",
      "0 2 0 0 2 1 0 0 0 0",
      "0 0 2 0 0 1 2 0 0 0",
      "0 0 0 0 0 1 0 2 2 0",
  });
}

// Helmholtz matrix at the origin, cap 2: invertible.
inline exact_matrix helmholtz_cap2() {
  return matrix_of({
      "-1 0 0 2 0 2",
      "0 -1 0 0 0 0",
      "0 0 -1 0 0 0",
      "0 0 0 -1 0 0",
      "0 0 0 0 -1 0",
      "0 0 0 0 0 -1",
  });
}

// Laplace matrix at (1, 1), cap 1.
inline exact_matrix laplace2_at_11_cap1() {
  return matrix_of({
      "-2 2i 2i",
      "0 -2 0",
      "0 0 -2",
  });
}

// --- kernels and solutions ----------------------------------------------

// Harmonic polynomial basis through degree 3: 1, x, y, xy, y^2 - x^2,
// 3xy^2 - x^3, y^3 - 3x^2 y.
inline std::vector<multi_poly> laplace2_kernel_cap3() {
  std::vector<multi_poly> out;
  multi_poly p(2);
  out.push_back(multi_poly::constant(2, 1));
  out.push_back(multi_poly::variable(2, 0));
  out.push_back(multi_poly::variable(2, 1));
  p = multi_poly(2);
  p.add_term({1, 1}, 1);
  out.push_back(p);
  p = multi_poly(2);
  p.add_term({0, 2}, 1);
  p.add_term({2, 0}, -1);
  out.push_back(p);
  p = multi_poly(2);
  p.add_term({1, 2}, 3);
  p.add_term({3, 0}, -1);
  out.push_back(p);
  p = multi_poly(2);
  p.add_term({0, 3}, 1);
  p.add_term({2, 1}, -3);
  out.push_back(p);
  return out;
}

// Heat kernel through degree 3: 1, x, x^2 + 2y, x^3 + 6xy.
inline std::vector<multi_poly> heat_kernel_cap3() {
  std::vector<multi_poly> out;
  out.push_back(multi_poly::constant(2, 1));
  out.push_back(multi_poly::variable(2, 0));
  multi_poly p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 1}, 2);
  out.push_back(p);
  p = multi_poly(2);
  p.add_term({3, 0}, 1);
  p.add_term({1, 1}, 6);
  out.push_back(p);
  return out;
}

// Kernel of the Laplace matrix at (1, i) through degree 3: powers of x + iy.
inline std::vector<multi_poly> laplace2_at_1i_kernel_cap3() {
  multi_poly z = multi_poly::variable(2, 0) +
                 gaussian_rational::i() * multi_poly::variable(2, 1);
  return {z.pow(0), z.pow(1), z.pow(2), z.pow(3)};
}

// The four simultaneous cubic solutions of {p_laplace3, p_mixed3} at the
// origin.
inline std::vector<multi_poly> system3_cubics() {
  auto build = [](std::initializer_list<std::pair<multi_index, int>> terms) {
    multi_poly p(3);
    for (const auto& [a, c] : terms) p.add_term(a, c);
    return p;
  };
  return {
      build({{{2, 1, 0}, 3}, {{2, 0, 1}, -3}, {{0, 3, 0}, -1}, {{0, 0, 3}, 1}}),
      build({{{3, 0, 0}, -1},
             {{2, 1, 0}, 3},
             {{1, 2, 0}, 3},
             {{1, 1, 1}, -6},
             {{0, 3, 0}, -2},
             {{0, 1, 2}, 3}}),
      build({{{3, 0, 0}, -2},
             {{2, 1, 0}, 3},
             {{1, 2, 0}, 3},
             {{1, 1, 1}, -6},
             {{1, 0, 2}, 3},
             {{0, 3, 0}, -1}}),
      build({{{3, 0, 0}, 1},
             {{2, 1, 0}, 3},
             {{2, 0, 1}, -3},
             {{1, 2, 0}, -3},
             {{0, 3, 0}, -1},
             {{0, 2, 1}, 3}}),
  };
}

// Kernel of the Helmholtz matrix at (i, 0) through degree 3: 1, y, x + y^2,
// 3xy + y^3; plus the displayed particular solution of the inhomogeneous
// problem with right-hand side 2 + 3x - 2xy + y^2.
inline std::vector<multi_poly> helmholtz_at_i0_kernel_cap3() {
  std::vector<multi_poly> out;
  out.push_back(multi_poly::constant(2, 1));
  out.push_back(multi_poly::variable(2, 1));
  multi_poly p(2);
  p.add_term({1, 0}, 1);
  p.add_term({0, 2}, 1);
  out.push_back(p);
  p = multi_poly(2);
  p.add_term({1, 1}, 3);
  p.add_term({0, 3}, 1);
  out.push_back(p);
  return out;
}

// 1/2 x^2 y - x^2 - 1/2 x y^2 + 1/2 xy + 2y^2: the displayed particular
// part of the source, sign-corrected (as printed it reproduces the negated
// right-hand side; applying the operator directly shows it).
inline multi_poly helmholtz_at_i0_particular() {
  multi_poly p(2);
  p.add_term({2, 1}, {rational(1, 2), rational(0)});
  p.add_term({2, 0}, -1);
  p.add_term({1, 2}, {rational(-1, 2), rational(0)});
  p.add_term({1, 1}, {rational(1, 2), rational(0)});
  p.add_term({0, 2}, 2);
  return p;
}

// The canonical particular the solver produces for that system (free
// coordinates zeroed): 1/2 x^2 y - x^2 - 1/2 x y^2 + 1/2 xy - 2x.
inline multi_poly helmholtz_at_i0_canonical_particular() {
  multi_poly p(2);
  p.add_term({2, 1}, {rational(1, 2), rational(0)});
  p.add_term({2, 0}, -1);
  p.add_term({1, 2}, {rational(-1, 2), rational(0)});
  p.add_term({1, 1}, {rational(1, 2), rational(0)});
  p.add_term({1, 0}, -2);
  return p;
}

// 2 + 3x - 2xy + y^2
inline multi_poly sample_rhs() {
  multi_poly p(2);
  p.add_term({0, 0}, 2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 1}, -2);
  p.add_term({0, 2}, 1);
  return p;
}

// -1/2 x + y - 3/2 + 1/2 i: the unique cap-1 solution of the Laplace
// problem at (1, 1) with right-hand side 3 + x - 2y.
inline multi_poly laplace2_at_11_solution() {
  multi_poly p(2);
  p.add_term({1, 0}, {rational(-1, 2), rational(0)});
  p.add_term({0, 1}, 1);
  p.add_term({0, 0}, {rational(-3, 2), rational(1, 2)});
  return p;
}

inline multi_poly laplace2_at_11_rhs() {
  multi_poly p(2);
  p.add_term({0, 0}, 3);
  p.add_term({1, 0}, 1);
  p.add_term({0, 1}, -2);
  return p;
}

inline exact_matrix basis_matrix(const std::vector<multi_poly>& polys,
                                 int cap) {
  std::vector<std::vector<gaussian_rational>> cols;
  cols.reserve(polys.size());
  for (const multi_poly& p : polys) cols.push_back(coeff_vector(p, cap));
  return exact_matrix::from_columns(cols);
}

}  // namespace fixtures

#endif
