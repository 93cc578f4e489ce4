#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core_entropy/errors.hpp"
#include "core_entropy/polynomial.hpp"
#include "core_entropy/spectral.hpp"
#include "support.hpp"

using namespace core_entropy;

namespace {

using Dense = std::vector<std::vector<long long>>;

const Dense kQuarter = {{0, 0, 2}, {1, 0, 0}, {0, 1, 1}};
const Dense kCubeRoot = {{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};

Dense random_matrix(std::size_t n, int max_entry, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> w(1, max_entry);
  Dense m(n, std::vector<long long>(n, 0));
  for (auto& row : m)
    for (auto& x : row)
      if (u(test::rng()) < density) x = w(test::rng());
  return m;
}

// Column sums in {1, 2}, like a pair matrix.
Dense random_pairlike(std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Dense m(n, std::vector<long long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    m[pick(test::rng())][j] += 1;
    if (coin(test::rng())) m[pick(test::rng())][j] += 1;
  }
  return m;
}

}  // namespace

TEST_CASE("IntPolynomial arithmetic") {
  const IntPolynomial p{-2, 0, -1, 1};  // x^3 - x^2 - 2
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - x^2 - 2");
  CHECK(IntPolynomial{1, 1}.to_string() == "x + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(p.derivative() == IntPolynomial{0, -2, 3});
  CHECK(p.reciprocal() == IntPolynomial{1, -1, 0, -2});
  CHECK(p.eval_exact(2) == 2);
  CHECK(p.eval(2.0L) == doctest::Approx(2.0));
  const IntPolynomial a{1, 1};
  const IntPolynomial b{-1, 1};
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(a - b == IntPolynomial{2});
  CHECK(IntPolynomial{4, 6}.content() == 2);
  CHECK(IntPolynomial{-4, -6}.primitive_part() == IntPolynomial{2, 3});
  CHECK(divide_exact(a * b * b, b) == a * b);
  CHECK_THROWS_AS(divide_exact(a, IntPolynomial{0, 2, 1}), DomainError);
  CHECK(gcd(a * b * b, b * IntPolynomial{2, 0, 1}) == b);
}

TEST_CASE("square-free decomposition") {
  const IntPolynomial x1{-1, 1};
  const IntPolynomial x2{1, 0, 1};
  const IntPolynomial p = x1 * x1 * x1 * x2 * IntPolynomial{2, 1};
  const auto parts = square_free_decomposition(p);
  IntPolynomial rebuilt{1};
  for (const auto& [f, m] : parts)
    for (unsigned i = 0; i < m; ++i) rebuilt = rebuilt * f;
  CHECK(rebuilt == p);
  CHECK(square_free_part(p) == x1 * x2 * IntPolynomial{2, 1});
  CHECK(square_free_part(IntPolynomial{0, 0, 1}) == IntPolynomial{0, 1});
}

TEST_CASE("growth_rate examples") {
  CHECK(growth_rate(kQuarter).lambda == doctest::Approx(1.695621).epsilon(1e-6));
  CHECK(growth_rate(kCubeRoot).lambda == doctest::Approx(1.259921).epsilon(1e-6));
  CHECK(growth_rate(Dense{{1}}).lambda == 1.0);
  CHECK(growth_rate(Dense{{0, 0}, {1, 0}}).lambda == 0.0);
  CHECK(growth_rate(Dense{{2}}).method == GrowthMethod::RootBound);
  CHECK(to_string(GrowthMethod::CharPoly) == "char-poly");
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(NonnegativeMatrix::from_rows(kQuarter)) == IntPolynomial{-2, 0, -1, 1});
  CHECK(char_poly(NonnegativeMatrix::from_rows(kCubeRoot)) == IntPolynomial{-2, 0, 0, 1});
  CHECK(char_poly(NonnegativeMatrix(2)) == IntPolynomial{0, 0, 1});
  CHECK_THROWS_AS(char_poly(NonnegativeMatrix(65)), BudgetError);
}

TEST_CASE("char_poly agrees with fraction-free determinants") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_matrix(2 + trial % 9, 3, 0.4);
    const auto p = char_poly(NonnegativeMatrix::from_rows(d));
    for (long long x : {-3, -1, 0, 1, 2, 5}) CHECK(p.eval_exact(x) == oracle::char_poly_at(d, x));
  }
}

TEST_CASE("largest_real_root examples") {
  CHECK(largest_real_root(IntPolynomial{-1, -2, 0, 0, 1}, 1, 2) ==
        doctest::Approx(1.395337).epsilon(1e-6));
  CHECK(largest_real_root(IntPolynomial{-2, 1}, 1, 3) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(largest_real_root(IntPolynomial{-2, -1, 0, 1}, 1, 2) ==
        doctest::Approx(1.521380).epsilon(1e-6));
  // double root found through the square-free part
  CHECK(largest_real_root(IntPolynomial{4, -4, 1}, 1, 3) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(largest_real_root(IntPolynomial{1, 0, 1}, -2, 2), ConvergenceError);
}

TEST_CASE("growth_rate lies between column-sum bounds and matches dense eigenvalues") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 20;
    const auto d = (trial % 2) ? random_pairlike(n) : random_matrix(n, 2, 0.3);
    const auto m = NonnegativeMatrix::from_rows(d);
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      lo = std::min(lo, m.column_sum(j));
      hi = std::max(hi, m.column_sum(j));
    }
    const auto g = growth_rate(m);
    CAPTURE(trial);
    CHECK(g.lambda >= static_cast<double>(lo) - 1e-9);
    CHECK(g.lambda <= static_cast<double>(hi) + 1e-9);
    CHECK(g.lambda == doctest::Approx(oracle::spectral_radius(d)).epsilon(1e-7));
  }
}

TEST_CASE("char_poly vanishes at the growth rate of the dominant block") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_pairlike(4 + trial % 12);
    const auto m = NonnegativeMatrix::from_rows(d);
    const auto b = dominant_block(m);
    const auto p = char_poly(m.submatrix(b.vertices));
    const long double x = b.growth.lambda;
    CHECK(std::fabs(static_cast<double>(p.eval(x))) <= 1e-9 * static_cast<double>(p.magnitude(x)));
  }
}

TEST_CASE("growth_rate is invariant under simultaneous permutation") {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + trial;
    const auto m = NonnegativeMatrix::from_rows(random_pairlike(n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), test::rng());
    CHECK(growth_rate(m.permuted(perm)).lambda == doctest::Approx(growth_rate(m).lambda).epsilon(1e-9));
  }
}

TEST_CASE("block-triangular growth is the maximum over diagonal blocks") {
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_pairlike(3 + trial % 5);
    const auto b = random_pairlike(2 + trial % 7);
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    Dense m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) m[i][j] = a[i][j];
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) m[na + i][na + j] = b[i][j];
    for (std::size_t i = 0; i < na; ++i) m[i][na + (i % nb)] += 1;  // upper coupling
    const double expected = std::max(growth_rate(a).lambda, growth_rate(b).lambda);
    CHECK(growth_rate(m).lambda == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("strongly connected components and cyclic index") {
  const auto m = NonnegativeMatrix::from_rows(kCubeRoot);
  const auto comps = strongly_connected_components(m);
  REQUIRE(comps.size() == 1);
  CHECK(cyclic_index(m, comps[0]) == 3);
  const auto q = NonnegativeMatrix::from_rows(kQuarter);
  CHECK(cyclic_index(q, strongly_connected_components(q)[0]) == 1);
  const auto nil = NonnegativeMatrix::from_rows({{0, 0}, {1, 0}});
  CHECK(strongly_connected_components(nil).size() == 2);
  CHECK(cyclic_index(nil, {0}) == 0);
  CHECK_THROWS_AS(dominant_block(nil), DomainError);
}

TEST_CASE("large blocks use ratio iteration") {
  // a 100-cycle with random chords: irreducible, dimension above the
  // certification limit
  const std::size_t n = 100;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  NonnegativeMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    m.add((j + 1) % n, j);
    if (coin(test::rng())) m.add(pick(test::rng()), j);
  }
  const auto g = growth_rate(m);
  CHECK(g.method == GrowthMethod::RatioIteration);
  CHECK(g.lambda == doctest::Approx(oracle::spectral_radius(test::dense(m))).epsilon(1e-8));
}

TEST_CASE("iteration cap raises ConvergenceError") {
  const std::size_t n = 100;
  NonnegativeMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) m.add((j + 1) % n, j);
  m.add(0, 50);
  GrowthOptions opt;
  opt.max_iterations = 3;
  CHECK_THROWS_AS(growth_rate(m, opt), ConvergenceError);
}

TEST_CASE("from_rows validates input") {
  CHECK_THROWS_AS(NonnegativeMatrix::from_rows({{1, -1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(NonnegativeMatrix::from_rows({{1, 0}}), DomainError);
}
