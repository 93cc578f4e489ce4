#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "core_entropy/errors.hpp"
#include "core_entropy/families.hpp"
#include "core_entropy/galois.hpp"
#include "support.hpp"

using namespace core_entropy;

namespace {

using Z = std::complex<long double>;

bool contains(const std::vector<ComplexRoot>& roots, Z z, long double tol) {
  return std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return std::abs(r.z - z) < tol; });
}

std::size_t count_degree(const std::vector<TaggedPolynomial>& ps, int d) {
  return static_cast<std::size_t>(
      std::count_if(ps.begin(), ps.end(), [d](const auto& p) { return p.poly.degree() == d; }));
}

}  // namespace

TEST_CASE("enumeration counts") {
  const auto m0 = enumerate_polynomials(PolySet::M0, 2);
  CHECK(count_degree(m0, 1) == 2);
  CHECK(count_degree(m0, 2) == 6);
  CHECK(m0.size() == 8);
  for (int d = 1; d <= 6; ++d) {
    const auto m0d = enumerate_polynomials(PolySet::M0, d);
    // 3^(d-1) middle choices times two constant terms
    CHECK(count_degree(m0d, d) == 2 * static_cast<std::size_t>(std::pow(3, d - 1)));
  }
  const auto m1 = enumerate_polynomials(PolySet::M1, 3);
  CHECK(count_degree(m1, 2) == 4);
  CHECK(count_degree(m1, 3) == 8);
  for (const auto& p : m1) {
    CHECK(p.poly.leading() == 1);
    for (const auto& c : p.poly.coefficients()) CHECK(abs(c) == 1);
  }
}

TEST_CASE("enumeration order and normalization") {
  const auto m0 = enumerate_polynomials(PolySet::M0, 4);
  for (std::size_t i = 0; i + 1 < m0.size(); ++i) {
    const auto& a = m0[i].poly;
    const auto& b = m0[i + 1].poly;
    CHECK(a.degree() <= b.degree());
    if (a.degree() == b.degree()) {
      std::vector<BigInt> da(a.coefficients().rbegin(), a.coefficients().rend());
      std::vector<BigInt> db(b.coefficients().rbegin(), b.coefficients().rend());
      CHECK(da < db);
    }
  }
  for (const auto& p : m0) {
    CHECK(p.poly.leading() == 1);
    CHECK(p.poly.coeff(0) != 0);
    CHECK(p.id.size() == static_cast<std::size_t>(p.poly.degree()) + 1);
  }
  CHECK_THROWS_AS(enumerate_polynomials(PolySet::M0, 13), BudgetError);
  CHECK_THROWS_AS(enumerate_polynomials(PolySet::M1, 21), BudgetError);
  CHECK_THROWS_AS(enumerate_polynomials(PolySet::M2, 21), BudgetError);
}

TEST_CASE("M2 period 3 contains the golden polynomial") {
  const auto m2 = enumerate_polynomials(PolySet::M2, 3);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  bool found = false;
  for (const auto& p : m2)
    if (std::fabs(largest_real_root(p.poly, 1, 2) - golden) < 1e-9) found = true;
  CHECK(found);
  CHECK(kneading_polynomial("1") == IntPolynomial{-1, 1});
}

TEST_CASE("M2 is a subset of M1") {
  const auto m1 = enumerate_polynomials(PolySet::M1, 9);
  const auto m2 = enumerate_polynomials(PolySet::M2, 10);
  for (const auto& p : m2) {
    CAPTURE(p.id);
    CHECK(std::any_of(m1.begin(), m1.end(), [&](const auto& q) { return q.poly == p.poly; }));
  }
}

TEST_CASE("M2 roots match real center growth rates") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& w : admissible_star_words(n)) {
      const auto p = kneading_polynomial(w);
      CHECK(p.degree() == n - 1);
    }
  }
  // period 3: word "10" is the golden center
  CHECK(largest_real_root(kneading_polynomial("10"), 1, 2) ==
        doctest::Approx(family_growth({Family::RealCenter, 0, 3})).epsilon(1e-12));
}

TEST_CASE("complex_roots examples") {
  const auto i = complex_roots(IntPolynomial{1, 0, 1});
  REQUIRE(i.size() == 2);
  CHECK(contains(i, Z(0, 1), 1e-12L));
  CHECK(contains(i, Z(0, -1), 1e-12L));

  const auto c = complex_roots(IntPolynomial{-2, 0, 0, 1});
  const long double r = std::cbrt(2.0L);
  const long double pi = std::acos(-1.0L);
  CHECK(contains(c, Z(r, 0), 1e-12L));
  CHECK(contains(c, std::polar(r, 2 * pi / 3), 1e-12L));
  CHECK(contains(c, std::polar(r, -2 * pi / 3), 1e-12L));

  CHECK(contains(complex_roots(IntPolynomial{-1, -2, 0, 0, 1}), Z(1.3953369944, 0), 1e-8L));

  const auto dbl = complex_roots(IntPolynomial{1, -2, 1});
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].multiplicity == 2);

  CHECK_THROWS_AS(complex_roots(IntPolynomial::monomial(1, 65) - IntPolynomial{1}), BudgetError);
}

TEST_CASE("complex roots are certified") {
  for (const auto& p : enumerate_polynomials(PolySet::M1, 8)) {
    const auto roots = complex_roots(p.poly);
    unsigned total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      CHECK(r.residual <= 1e-10L);
    }
    CHECK(total == static_cast<unsigned>(p.poly.degree()));
  }
}

TEST_CASE("M0 cloud bounds and symmetries") {
  const auto cloud = root_cloud(PolySet::M0, 6);
  std::map<int, std::vector<std::complex<double>>> by_degree;
  for (const auto& pt : cloud) by_degree[pt.degree].emplace_back(pt.re, pt.im);
  for (const auto& pt : cloud) {
    const double m = std::hypot(pt.re, pt.im);
    CHECK(m >= 0.5 - 1e-6);
    CHECK(m <= 2 + 1e-6);
  }
  for (const auto& [d, pts] : by_degree) {
    for (const auto& z : pts) {
      const auto near = [&](std::complex<double> w) {
        return std::any_of(pts.begin(), pts.end(), [&](const auto& y) { return std::abs(y - w) < 1e-6; });
      };
      CAPTURE(d);
      CHECK(near(std::conj(z)));
      CHECK(near(1.0 / z));
    }
  }
}

TEST_CASE("cloud csv") {
  std::ostringstream out;
  write_cloud_csv(out, root_cloud(PolySet::M1, 1));
  CHECK(out.str() == "re,im,degree,poly_id,set\n1,0,1,+-,M1\n-1,0,1,++,M1\n");
  CHECK(parse_poly_set("m2") == PolySet::M2);
  CHECK(to_string(PolySet::M0) == "M0");
  CHECK_THROWS_AS(parse_poly_set("m3"), ParseError);
}
