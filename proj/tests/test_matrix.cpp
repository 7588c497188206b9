#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "polypde/matrix.hpp"
#include "support.hpp"

using namespace polypde;

namespace {

exact_matrix random_matrix(std::mt19937& rng, std::size_t rows,
                           std::size_t cols, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  exact_matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = testgen::random_scalar(rng);
  return m;
}

bool is_zero_vector(const std::vector<gaussian_rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rref of the identity", "[matrix]") {
  rref_result rr = rref(exact_matrix::identity(2));
  CHECK(rr.reduced == exact_matrix::identity(2));
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref fixes a known matrix", "[matrix]") {
  // rows (1, 2, 3), (2, 4, 6), (0, 0, 1): rank 2, free column 1.
  exact_matrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 2) = 1;
  rref_result rr = rref(m);
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 2});
  CHECK(rank(m) == 2);
  exact_matrix ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK(ns(0, 0) == gaussian_rational(-2));
  CHECK(ns(1, 0) == gaussian_rational(1));
  CHECK(ns(2, 0) == gaussian_rational(0));
}

TEST_CASE("rref properties on random matrices", "[matrix]") {
  std::mt19937 rng(20240609);
  for (int t = 0; t < 80; ++t) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    exact_matrix m = random_matrix(rng, rows, cols);
    rref_result rr = rref(m);

    // Pivot columns are strictly ascending and hold unit vectors.
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) {
      if (k) CHECK(rr.pivot_cols[k - 1] < rr.pivot_cols[k]);
      for (std::size_t r = 0; r < rows; ++r)
        CHECK(rr.reduced(r, rr.pivot_cols[k]) ==
              gaussian_rational(r == k ? 1 : 0));
    }
    // Rows past the rank vanish.
    for (std::size_t r = rr.pivot_cols.size(); r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        CHECK(rr.reduced(r, c).is_zero());
    // The row span is preserved: every original row solves against the
    // reduced rows and vice versa (checked via rank).
    CHECK(rank(rr.reduced) == rr.pivot_cols.size());
  }
}

TEST_CASE("nullspace columns are genuine and canonical", "[matrix]") {
  std::mt19937 rng(20240610);
  for (int t = 0; t < 80; ++t) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    exact_matrix m = random_matrix(rng, rows, cols);
    exact_matrix ns = nullspace(m);
    CHECK(ns.cols() == cols - rank(m));
    for (std::size_t c = 0; c < ns.cols(); ++c)
      CHECK(is_zero_vector(m * ns.column(c)));
    CHECK(rank(ns) == ns.cols());
  }
}

TEST_CASE("solve splits into particular plus homogeneous", "[matrix]") {
  std::mt19937 rng(20240611);
  int consistent_seen = 0;
  for (int t = 0; t < 120; ++t) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    exact_matrix m = random_matrix(rng, rows, cols);
    std::vector<gaussian_rational> b(rows);

    bool engineered = t % 2 == 0;
    if (engineered) {
      // Guaranteed consistent: b = m * w.
      std::vector<gaussian_rational> w(cols);
      for (auto& x : w) x = testgen::random_scalar(rng);
      b = m * w;
    } else {
      for (auto& x : b) x = testgen::random_scalar(rng);
    }

    auto sol = solve(m, b);
    if (engineered) REQUIRE(sol.has_value());
    if (!sol) continue;
    ++consistent_seen;
    std::vector<gaussian_rational> mv = m * sol->particular;
    CHECK(mv == b);
    CHECK(sol->homogeneous == nullspace(m));
  }
  CHECK(consistent_seen >= 60);
}

TEST_CASE("inconsistent systems are reported", "[matrix]") {
  // x + y = 1 and x + y = 2.
  exact_matrix m(2, 2);
  m(0, 0) = 1; m(0, 1) = 1;
  m(1, 0) = 1; m(1, 1) = 1;
  CHECK_FALSE(solve(m, {1, 2}).has_value());
  CHECK(solve(m, {1, 1}).has_value());
  CHECK_THROWS_AS(solve(m, {1, 2, 3}), dimension_mismatch);
}

TEST_CASE("span comparison", "[matrix]") {
  std::mt19937 rng(20240612);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = 2 + rng() % 4, cols = 1 + rng() % 4;
    exact_matrix a = random_matrix(rng, rows, cols);

    // Column operations keep the span: scale and mix.
    exact_matrix b = a;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      gaussian_rational s = testgen::random_nonzero_scalar(rng);
      for (std::size_t r = 0; r < b.rows(); ++r) b(r, c) *= s;
    }
    if (b.cols() >= 2)
      for (std::size_t r = 0; r < b.rows(); ++r) b(r, 0) += b(r, 1);
    CHECK(span_equal(a, b));

    // Appending a vector outside the span breaks equality.
    if (rank(a) < rows) {
      exact_matrix wide = exact_matrix::hstack(a, exact_matrix::identity(rows));
      if (rank(wide) > rank(a)) CHECK_FALSE(span_equal(a, wide));
    }
  }
  CHECK_THROWS_AS(span_equal(exact_matrix(2, 1), exact_matrix(3, 1)),
                  dimension_mismatch);
}

TEST_CASE("matrix products and stacking", "[matrix]") {
  exact_matrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = gaussian_rational::i();
  a(1, 1) = 2;
  exact_matrix b = a * exact_matrix::identity(2);
  CHECK(b == a);
  CHECK(exact_matrix::vstack(a, a).rows() == 4);
  CHECK(exact_matrix::hstack(a, a).cols() == 4);
  CHECK(a.submatrix(0, 1, 2, 1)(0, 0) == gaussian_rational::i());
  CHECK_THROWS_AS(a * exact_matrix(3, 2), dimension_mismatch);
  CHECK_THROWS_AS(exact_matrix::vstack(a, exact_matrix(1, 3)),
                  dimension_mismatch);
}
