#ifndef POLYPDE_MULTI_INDEX_HPP
#define POLYPDE_MULTI_INDEX_HPP

// Multi-indices in d variables and the canonical graded enumeration used for
// every coefficient vector, matrix row, and matrix column in the library.
//
// Within one degree level the order is: ascending last coordinate, recursing
// on the leading d-1 coordinates (ascending lex on reversed tuples).  For
// d = 2, K = 3 this lists x^3, x^2 y, x y^2, y^3; for d = 3, K = 3 it lists
// x^3, x^2 y, x y^2, y^3, x^2 z, x y z, y^2 z, x z^2, y z^2, z^3.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace polypde {

class multi_index {
 public:
  multi_index() = default;
  explicit multi_index(std::vector<int> components)
      : c_(std::move(components)) {
    assert(!c_.empty());
    for (int v : c_) assert(v >= 0);
  }
  multi_index(std::initializer_list<int> components)
      : multi_index(std::vector<int>(components)) {}

  static multi_index zero(int dim) {
    return multi_index(std::vector<int>(static_cast<std::size_t>(dim), 0));
  }
  static multi_index unit(int dim, int j) {
    std::vector<int> c(static_cast<std::size_t>(dim), 0);
    c.at(static_cast<std::size_t>(j)) = 1;
    return multi_index(std::move(c));
  }

  int dim() const { return static_cast<int>(c_.size()); }
  int degree() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  int operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& components() const { return c_; }

  friend bool operator==(const multi_index& a, const multi_index& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const multi_index& a, const multi_index& b) {
    return !(a == b);
  }

  friend multi_index operator+(const multi_index& a, const multi_index& b) {
    assert(a.dim() == b.dim());
    std::vector<int> c(a.c_);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += b.c_[j];
    return multi_index(std::move(c));
  }
  // Requires divides(b, a).
  friend multi_index operator-(const multi_index& a, const multi_index& b) {
    assert(a.dim() == b.dim());
    std::vector<int> c(a.c_);
    for (std::size_t j = 0; j < c.size(); ++j) {
      c[j] -= b.c_[j];
      assert(c[j] >= 0);
    }
    return multi_index(std::move(c));
  }

 private:
  std::vector<int> c_;
};

// beta <= alpha componentwise (x^beta divides x^alpha).
inline bool divides(const multi_index& beta, const multi_index& alpha) {
  assert(beta.dim() == alpha.dim());
  for (int j = 0; j < beta.dim(); ++j)
    if (beta[j] > alpha[j]) return false;
  return true;
}

// The canonical graded order: lower total degree first; within one degree,
// ascending on the last differing coordinate scanned from the right.
struct graded_order {
  bool operator()(const multi_index& a, const multi_index& b) const {
    assert(a.dim() == b.dim());
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int j = a.dim() - 1; j >= 0; --j)
      if (a[j] != b[j]) return a[j] < b[j];
    return false;
  }
};

// Product of componentwise binomial coefficients C(alpha_j, beta_j); zero
// when beta does not divide alpha.
inline big_int multi_binomial(const multi_index& alpha,
                              const multi_index& beta) {
  assert(alpha.dim() == beta.dim());
  if (!divides(beta, alpha)) return 0;
  big_int out = 1;
  for (int j = 0; j < alpha.dim(); ++j) {
    int n = alpha[j], k = beta[j];
    k = std::min(k, n - k);
    big_int c = 1;
    for (int t = 1; t <= k; ++t) {
      c *= n - k + t;
      c /= t;
    }
    out *= c;
  }
  return out;
}

namespace detail {

inline std::int64_t binomial_i64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int t = 1; t <= k; ++t) {
    c = c * (n - k + t) / t;
  }
  return c;
}

}  // namespace detail

// Number of monomials of total degree exactly `degree` in `dim` variables.
inline std::int64_t level_count(int dim, int degree) {
  assert(dim >= 1 && degree >= 0);
  return detail::binomial_i64(dim + degree - 1, degree);
}

// Number of monomials of total degree <= `cap` in `dim` variables.
inline std::int64_t graded_count(int dim, int cap) {
  assert(dim >= 1 && cap >= 0);
  return detail::binomial_i64(dim + cap, dim);
}

// An ordered enumeration of multi-indices: either one degree level or all
// levels up to a cap, always in the canonical graded order.  Positions are
// 1-based.
class index_set {
 public:
  enum class kind_t { level, graded };

  kind_t kind() const { return kind_; }
  int dim() const { return dim_; }
  int cap() const { return cap_; }
  std::size_t size() const { return list_.size(); }
  const multi_index& operator[](std::size_t pos0) const { return list_[pos0]; }
  std::vector<multi_index>::const_iterator begin() const {
    return list_.begin();
  }
  std::vector<multi_index>::const_iterator end() const { return list_.end(); }

  std::size_t position_of(const multi_index& a) const {
    if (a.dim() != dim_)
      throw dimension_mismatch("index of dimension " +
                               std::to_string(a.dim()) + " in set over " +
                               std::to_string(dim_) + " variables");
    int deg = a.degree();
    if (deg > cap_ || (kind_ == kind_t::level && deg != cap_))
      throw not_in_set("degree " + std::to_string(deg) +
                       " outside set of cap " + std::to_string(cap_));
    auto it = std::lower_bound(list_.begin(), list_.end(), a, graded_order{});
    assert(it != list_.end() && *it == a);
    return static_cast<std::size_t>(it - list_.begin()) + 1;
  }

  friend index_set level_set(int dim, int degree);
  friend index_set graded_set(int dim, int cap);

 private:
  index_set(kind_t kind, int dim, int cap)
      : kind_(kind), dim_(dim), cap_(cap) {}

  static void enumerate(int dim, int degree, std::vector<int>& scratch,
                        std::vector<multi_index>& out) {
    if (dim == 1) {
      scratch[0] = degree;
      out.emplace_back(scratch);
      return;
    }
    for (int last = 0; last <= degree; ++last) {
      scratch[static_cast<std::size_t>(dim) - 1] = last;
      enumerate(dim - 1, degree - last, scratch, out);
    }
  }

  kind_t kind_;
  int dim_;
  int cap_;
  std::vector<multi_index> list_;
};

inline index_set level_set(int dim, int degree) {
  assert(dim >= 1 && degree >= 0);
  index_set s(index_set::kind_t::level, dim, degree);
  s.list_.reserve(static_cast<std::size_t>(level_count(dim, degree)));
  std::vector<int> scratch(static_cast<std::size_t>(dim), 0);
  index_set::enumerate(dim, degree, scratch, s.list_);
  return s;
}

inline index_set graded_set(int dim, int cap) {
  assert(dim >= 1 && cap >= 0);
  index_set s(index_set::kind_t::graded, dim, cap);
  s.list_.reserve(static_cast<std::size_t>(graded_count(dim, cap)));
  std::vector<int> scratch(static_cast<std::size_t>(dim), 0);
  for (int k = 0; k <= cap; ++k)
    index_set::enumerate(dim, k, scratch, s.list_);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const multi_index& a) {
  os << '(';
  for (int j = 0; j < a.dim(); ++j) {
    if (j) os << ',';
    os << a[j];
  }
  return os << ')';
}

}  // namespace polypde

#endif
