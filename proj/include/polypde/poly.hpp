#ifndef POLYPDE_POLY_HPP
#define POLYPDE_POLY_HPP

// Sparse multivariate polynomials over Q(i), plus the exponential-polynomial
// form e^{i x0.x} p(x) and the action of a constant-coefficient operator on
// it.

#include <cassert>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "scalar.hpp"

namespace polypde {

using point = std::vector<gaussian_rational>;

class multi_poly {
 public:
  using term_map = std::map<multi_index, gaussian_rational, graded_order>;

  explicit multi_poly(int dim) : dim_(dim) { assert(dim >= 1); }

  static multi_poly constant(int dim, const gaussian_rational& c) {
    multi_poly p(dim);
    p.add_term(multi_index::zero(dim), c);
    return p;
  }
  static multi_poly monomial(const multi_index& a, const gaussian_rational& c) {
    multi_poly p(a.dim());
    p.add_term(a, c);
    return p;
  }
  static multi_poly variable(int dim, int j) {
    return monomial(multi_index::unit(dim, j), 1);
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }
  const term_map& terms() const { return terms_; }

  gaussian_rational coeff(const multi_index& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? gaussian_rational(0) : it->second;
  }

  multi_poly& add_term(const multi_index& a, const gaussian_rational& c) {
    assert(a.dim() == dim_);
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  multi_poly& operator+=(const multi_poly& q) {
    check_dim(q);
    for (const auto& [a, c] : q.terms_) add_term(a, c);
    return *this;
  }
  multi_poly& operator-=(const multi_poly& q) {
    check_dim(q);
    for (const auto& [a, c] : q.terms_) add_term(a, -c);
    return *this;
  }
  multi_poly& operator*=(const gaussian_rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend multi_poly operator+(multi_poly a, const multi_poly& b) {
    a += b;
    return a;
  }
  friend multi_poly operator-(multi_poly a, const multi_poly& b) {
    a -= b;
    return a;
  }
  multi_poly operator-() const {
    multi_poly out(dim_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
    return out;
  }
  friend multi_poly operator*(multi_poly p, const gaussian_rational& s) {
    p *= s;
    return p;
  }
  friend multi_poly operator*(const gaussian_rational& s, multi_poly p) {
    p *= s;
    return p;
  }
  friend multi_poly operator*(const multi_poly& p, const multi_poly& q) {
    p.check_dim(q);
    multi_poly out(p.dim_);
    for (const auto& [a, ca] : p.terms_)
      for (const auto& [b, cb] : q.terms_) out.add_term(a + b, ca * cb);
    return out;
  }

  multi_poly pow(int k) const {
    assert(k >= 0);
    multi_poly out = constant(dim_, 1);
    for (int t = 0; t < k; ++t) out = out * *this;
    return out;
  }

  friend bool operator==(const multi_poly& p, const multi_poly& q) {
    return p.dim_ == q.dim_ && p.terms_ == q.terms_;
  }
  friend bool operator!=(const multi_poly& p, const multi_poly& q) {
    return !(p == q);
  }

  // D^a applied termwise: D^a x^g = g!/(g-a)! x^{g-a} when a <= g, else 0.
  multi_poly derivative(const multi_index& a) const {
    assert(a.dim() == dim_);
    multi_poly out(dim_);
    for (const auto& [g, c] : terms_) {
      if (!divides(a, g)) continue;
      big_int factor = 1;
      for (int j = 0; j < dim_; ++j)
        for (int t = 0; t < a[j]; ++t) factor *= g[j] - t;
      out.add_term(g - a, c * gaussian_rational(factor));
    }
    return out;
  }
  multi_poly derivative(int var) const {
    return derivative(multi_index::unit(dim_, var));
  }

  gaussian_rational evaluate(const point& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw dimension_mismatch("evaluating " + std::to_string(dim_) +
                               "-variable polynomial at point of arity " +
                               std::to_string(x.size()));
    gaussian_rational out = 0;
    for (const auto& [a, c] : terms_) {
      gaussian_rational m = c;
      for (int j = 0; j < dim_; ++j)
        for (int t = 0; t < a[j]; ++t) m *= x[static_cast<std::size_t>(j)];
      out += m;
    }
    return out;
  }

 private:
  void check_dim(const multi_poly& q) const {
    if (dim_ != q.dim_)
      throw dimension_mismatch("polynomials over " + std::to_string(dim_) +
                               " and " + std::to_string(q.dim_) +
                               " variables");
  }

  int dim_;
  term_map terms_;
};

// Coefficients of p against graded_set(d, cap), length graded_count(d, cap).
inline std::vector<gaussian_rational> coeff_vector(const multi_poly& p,
                                                   int cap) {
  if (p.degree() > cap)
    throw degree_exceeds_cap("degree " + std::to_string(p.degree()) +
                             " polynomial with cap " + std::to_string(cap));
  index_set basis = graded_set(p.dim(), cap);
  std::vector<gaussian_rational> v(basis.size());
  for (const auto& [a, c] : p.terms()) v[basis.position_of(a) - 1] = c;
  return v;
}

inline multi_poly from_coeff_vector(const std::vector<gaussian_rational>& v,
                                    int dim, int cap) {
  index_set basis = graded_set(dim, cap);
  if (v.size() != basis.size())
    throw length_mismatch("coefficient vector of length " +
                          std::to_string(v.size()) + ", basis size " +
                          std::to_string(basis.size()));
  multi_poly p(dim);
  for (std::size_t m = 0; m < v.size(); ++m) p.add_term(basis[m], v[m]);
  return p;
}

// Symbol of the operator polynomial: each D_j becomes i*x_j, so the monomial
// D^a picks up i^{|a|}.
inline multi_poly symbol_from_operator(const multi_poly& op) {
  multi_poly out(op.dim());
  for (const auto& [a, c] : op.terms())
    out.add_term(a, c * i_power(a.degree(), +1));
  return out;
}

// e^{i root.x} * poly(x).
struct exp_poly {
  point root;
  multi_poly poly;

  exp_poly(point root, multi_poly poly)
      : root(std::move(root)), poly(std::move(poly)) {
    if (static_cast<int>(this->root.size()) != this->poly.dim())
      throw dimension_mismatch("root arity " +
                               std::to_string(this->root.size()) +
                               " for polynomial over " +
                               std::to_string(this->poly.dim()) + " variables");
  }

  friend bool operator==(const exp_poly& a, const exp_poly& b) {
    return a.root == b.root && a.poly == b.poly;
  }
};

// Applies the operator with symbol P to u = e^{i x0.x} p.  One factor D_j of
// the operator maps the polynomial part r to (x0_j r - i D_j r); the symbol
// monomial c x^a contributes c times that step applied a_j times in each
// variable.  The exponential factor is preserved.
inline exp_poly apply_operator(const multi_poly& symbol, const exp_poly& u) {
  if (symbol.dim() != u.poly.dim())
    throw dimension_mismatch("operator over " + std::to_string(symbol.dim()) +
                             " variables applied to " +
                             std::to_string(u.poly.dim()) + "-variable input");
  const gaussian_rational minus_i(rational(0), rational(-1));
  multi_poly acc(u.poly.dim());
  for (const auto& [a, c] : symbol.terms()) {
    multi_poly r = u.poly;
    for (int j = 0; j < a.dim(); ++j)
      for (int t = 0; t < a[j]; ++t)
        r = u.root[static_cast<std::size_t>(j)] * r + minus_i * r.derivative(j);
    acc += c * r;
  }
  return {u.root, acc};
}

struct least_order_result {
  int order;
  multi_index witness;  // first multi-index of that order with D^a P(x0) != 0
};

inline least_order_result least_nonzero_derivative_order(const multi_poly& p,
                                                         const point& x0) {
  if (p.is_zero())
    throw zero_polynomial("least_nonzero_derivative_order");
  for (int m = 0; m <= p.degree(); ++m)
    for (const multi_index& a : level_set(p.dim(), m))
      if (!p.derivative(a).evaluate(x0).is_zero()) return {m, a};
  assert(false && "a nonzero polynomial has a nonzero top derivative");
  return {0, multi_index::zero(p.dim())};
}

}  // namespace polypde

#endif
