#ifndef POLYPDE_TESTS_SUPPORT_HPP
#define POLYPDE_TESTS_SUPPORT_HPP

// Deterministic random generators and small helpers shared by the unit and
// acceptance suites.

#include <random>
#include <vector>

#include "polypde/multi_index.hpp"
#include "polypde/poly.hpp"
#include "polypde/scalar.hpp"

namespace testgen {

using namespace polypde;

inline gaussian_rational random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0: return gaussian_rational(num(rng));
    case 1: return gaussian_rational(rational(num(rng), den(rng)));
    case 2: return {rational(0), rational(num(rng), den(rng))};
    default: return {rational(num(rng), den(rng)), rational(num(rng), den(rng))};
  }
}

inline gaussian_rational random_nonzero_scalar(std::mt19937& rng) {
  while (true) {
    gaussian_rational z = random_scalar(rng);
    if (!z.is_zero()) return z;
  }
}

inline point random_point(std::mt19937& rng, int dim) {
  point x(static_cast<std::size_t>(dim));
  for (auto& c : x) c = random_scalar(rng);
  return x;
}

// Sparse random polynomial of degree <= cap (possibly lower); never zero.
inline multi_poly random_poly(std::mt19937& rng, int dim, int cap) {
  std::bernoulli_distribution keep(0.35);
  multi_poly p(dim);
  for (const multi_index& a : graded_set(dim, cap))
    if (keep(rng)) p.add_term(a, random_scalar(rng));
  if (p.is_zero()) {
    index_set g = graded_set(dim, cap);
    p.add_term(g[rng() % g.size()], random_nonzero_scalar(rng));
  }
  return p;
}

// p(x + s): substitute x_j -> x_j + s_j.
inline multi_poly translate(const multi_poly& p, const point& s) {
  multi_poly out(p.dim());
  for (const auto& [a, c] : p.terms()) {
    multi_poly m = multi_poly::constant(p.dim(), c);
    for (int j = 0; j < p.dim(); ++j) {
      if (a[j] == 0) continue;
      multi_poly lin = multi_poly::variable(p.dim(), j) +
                       multi_poly::constant(p.dim(), s[static_cast<std::size_t>(j)]);
      m = m * lin.pow(a[j]);
    }
    out += m;
  }
  return out;
}

// h * sigma^mult with h(x0) != 0 and sigma a linear form vanishing at x0, so
// the least non-vanishing derivative order at x0 is exactly `mult`.
inline multi_poly poly_with_root_order(std::mt19937& rng, int dim,
                                       const point& x0, int mult) {
  multi_poly h = random_poly(rng, dim, 1);
  if (h.evaluate(x0).is_zero())
    h += multi_poly::constant(dim, random_nonzero_scalar(rng));

  multi_poly sigma(dim);
  gaussian_rational shift = 0;
  for (int j = 0; j < dim; ++j) {
    gaussian_rational a = random_nonzero_scalar(rng);
    sigma += a * multi_poly::variable(dim, j);
    shift += a * x0[static_cast<std::size_t>(j)];
  }
  sigma -= multi_poly::constant(dim, shift);
  return h * sigma.pow(mult);
}

}  // namespace testgen

#endif
