#include <doctest.h>

#include <cmath>

#include "core_entropy/entropy.hpp"
#include "core_entropy/errors.hpp"
#include "core_entropy/families.hpp"
#include "support.hpp"

using namespace core_entropy;

namespace {

const IntPolynomial kX14{-2, 0, -1, 1};
const IntPolynomial kX16{-2, -1, 0, 1};
const IntPolynomial kX315{-1, -2, 0, 0, 1};

IntPolynomial xn(int n) { return IntPolynomial::monomial(1, static_cast<std::size_t>(n)); }

double lambda(const Angle& a) { return core_entropy::core_entropy(a).lambda; }

// Valid n for a family within [lo, hi].
std::vector<int> indices(Family f, int q, int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n)
    if (family_range_error({f, q, n}).empty()) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("family_polynomial examples") {
  CHECK(family_polynomial({Family::PrincipalBeta, 3, 0}) == kX14);
  CHECK(family_polynomial({Family::RealCenter, 0, 3}) == IntPolynomial{1, 0, -2, 1});
  CHECK(family_polynomial({Family::X315Sublimb, 0, 2}) ==
        xn(2) * IntPolynomial{-1, 1} * kX315 - IntPolynomial{2, 0, 2});
  CHECK(family_polynomial({Family::PrincipalCenter, 3, 0}).to_string() == "x^4 - 2x - 1");
}

TEST_CASE("catalog matches its closed forms") {
  const IntPolynomial two{2};
  for (int q = 2; q <= 6; ++q) {
    CHECK(family_polynomial({Family::PrincipalBeta, q, 0}) == xn(q) - xn(q - 1) - two);
    CHECK(family_polynomial({Family::PrincipalCenter, q, 0}) == xn(q + 1) - IntPolynomial{1, 2});
    CHECK(family_polynomial({Family::PrincipalAlpha, q, 0}) == xn(q) - two);
    for (int n = q + 1; n <= q + 5; ++n)
      CHECK(family_polynomial({Family::VeinCenter, q, n}) ==
            xn(n + 1) - xn(n) - 2 * xn(n + 1 - q) + IntPolynomial{1, 1});
    for (int n = q; n <= q + 5; ++n)
      CHECK(family_polynomial({Family::VeinAlpha, q, n}) == xn(n + 1) - xn(n) - 2 * xn(n + 1 - q) + two);
  }
  for (int n = 3; n <= 12; ++n) {
    CHECK(family_polynomial({Family::RealCenter, 0, n}) == xn(n) - 2 * xn(n - 1) + IntPolynomial{1});
    CHECK(family_polynomial({Family::RealAlpha, 0, n}) == xn(n + 1) - xn(n) - 2 * xn(n - 1) + two);
  }
  for (int n : indices(Family::StefanOdd, 0, 3, 15))
    CHECK(family_polynomial({Family::StefanOdd, 0, n}) == xn(n) - 2 * xn(n - 2) - IntPolynomial{1});
  for (int n : indices(Family::StefanEven, 0, 4, 16))
    CHECK(family_polynomial({Family::StefanEven, 0, n}) == xn(n) - 2 * xn(n - 2) + IntPolynomial{1});
  for (int n : indices(Family::X14Center, 0, 4, 12)) {
    CHECK(family_polynomial({Family::X14Center, 0, n}) == xn(n - 2) * kX14 + IntPolynomial{1, 1});
    CHECK(family_polynomial({Family::X14Beta, 0, n}) == xn(n - 2) * kX14 + IntPolynomial{-2, 2});
  }
  for (int n : indices(Family::X16Center, 0, 5, 15))
    CHECK(family_polynomial({Family::X16Center, 0, n}) == xn(n - 1) * kX16 + IntPolynomial{1, 0, 1});
  for (int n : indices(Family::X315Center, 0, 7, 30))
    CHECK(family_polynomial({Family::X315Center, 0, n}) == xn(n) * kX315 + IntPolynomial{1, 0, 0, 0, 1});
  for (int n : indices(Family::X315Beta, 0, 4, 30))
    CHECK(family_polynomial({Family::X315Beta, 0, n}) == xn(n) * kX315 - IntPolynomial{2, 0, 2, 2});
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(family_polynomial({Family::PrincipalBeta, 1, 0}), DomainError);
  CHECK_THROWS_AS(family_polynomial({Family::VeinCenter, 3, 3}), DomainError);
  CHECK_THROWS_AS(family_polynomial({Family::StefanOdd, 0, 4}), DomainError);
  CHECK_THROWS_AS(family_polynomial({Family::X315Center, 0, 9}), DomainError);
  CHECK_THROWS_AS(parse_family("nope"), ParseError);
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_step(Family::X16Beta) == 2);
  CHECK(family_step(Family::X315Alpha) == 4);
  CHECK(family_step(Family::RealCenter) == 1);
}

TEST_CASE("family_growth examples") {
  CHECK(family_growth({Family::PrincipalCenter, 3, 0}) == doctest::Approx(1.395337).epsilon(1e-6));
  const double golden = (1 + std::sqrt(5.0)) / 2;
  CHECK(family_growth({Family::RealCenter, 0, 3}) == doctest::Approx(golden).epsilon(1e-12));
  CHECK(family_growth({Family::StefanOdd, 0, 3}) == doctest::Approx(golden).epsilon(1e-12));
}

TEST_CASE("families agree with the pair matrix at the pinned angles") {
  CHECK(std::fabs(family_growth({Family::PrincipalBeta, 3, 0}) - lambda(Angle(1, 4))) <= 1e-9);
  CHECK(std::fabs(family_growth({Family::PrincipalCenter, 3, 0}) - lambda(Angle(1, 5))) <= 1e-9);
  CHECK(std::fabs(family_growth({Family::PrincipalAlpha, 3, 0}) - lambda(Angle(9, 56))) <= 1e-9);
  CHECK(std::fabs(largest_real_root(kX16, 1, 2, 0) - lambda(Angle(1, 6))) <= 1e-9);
  for (int q = 2; q <= 6; ++q) {
    const auto a = test::principal_angles(q);
    CAPTURE(q);
    CHECK(std::fabs(family_growth({Family::PrincipalBeta, q, 0}) - lambda(a.beta)) <= 1e-9);
    CHECK(std::fabs(family_growth({Family::PrincipalCenter, q, 0}) - lambda(a.center)) <= 1e-9);
    CHECK(std::fabs(family_growth({Family::PrincipalAlpha, q, 0}) - lambda(a.alpha)) <= 1e-9);
  }
}

TEST_CASE("center and alpha sequences are strictly monotone toward the limit") {
  struct Case {
    Family f;
    int q;
    int lo;
    int hi;
  };
  for (const Case& c : {Case{Family::RealCenter, 0, 3, 30}, Case{Family::RealAlpha, 0, 2, 30},
                        Case{Family::VeinCenter, 3, 4, 30}, Case{Family::VeinAlpha, 3, 3, 30},
                        Case{Family::X14Center, 0, 4, 30}, Case{Family::X14Alpha, 0, 3, 30},
                        Case{Family::X16Center, 0, 5, 31}, Case{Family::X16Alpha, 0, 3, 31},
                        Case{Family::X315Center, 0, 7, 43}, Case{Family::X315Alpha, 0, 3, 43}}) {
    const double l0 = largest_real_root(leading_factor(c.f, c.q), 1, 2, 0);
    double prev = 0;
    for (int n : indices(c.f, c.q, c.lo, c.hi)) {
      const double l = family_growth({c.f, c.q, n});
      CAPTURE(family_name(c.f));
      CAPTURE(n);
      CHECK(l < l0);
      CHECK(l > prev);
      prev = l;
    }
  }
}

TEST_CASE("beta sequences at 1/6 and 3/15 exceed their limit") {
  for (Family f : {Family::X16Beta, Family::X315Beta}) {
    const double l0 = largest_real_root(leading_factor(f), 1, 2, 0);
    for (int n : indices(f, 0, 2, 40)) {
      CAPTURE(family_name(f));
      CAPTURE(n);
      CHECK(family_growth({f, 0, n}) > l0);
    }
  }
}

TEST_CASE("beta sequence at 1/4 stays below its limit") {
  // positive at lambda0 and increasing beyond it, so no larger root
  const double l0 = largest_real_root(kX14, 1, 2, 0);
  double prev = 0;
  for (int n : indices(Family::X14Beta, 0, 4, 40)) {
    const double l = family_growth({Family::X14Beta, 0, n});
    CAPTURE(n);
    CHECK(l < l0);
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("even Stefan roots interlace sqrt 2") {
  for (int m = 2; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(family_growth({Family::StefanEven, 0, 2 * m}) < std::sqrt(2.0));
    CHECK(family_growth({Family::StefanOdd, 0, 2 * m + 1}) > std::sqrt(2.0));
  }
}

TEST_CASE("fit_asymptotics examples") {
  const auto rc = fit_asymptotics(Family::RealCenter, 0, 10, 25);
  CHECK(rc.lambda0 == doctest::Approx(2.0));
  CHECK(rc.K == doctest::Approx(2.0).epsilon(0.005));
  CHECK(rc.sign == -1);
  CHECK(rc.indices.size() == 16);

  const auto ra = fit_asymptotics(Family::RealAlpha, 0, 10, 25);
  CHECK(ra.K == doctest::Approx(4.0 / 3.0).epsilon(0.005));

  const auto vc = fit_asymptotics(Family::VeinCenter, 3, 15, 40);
  const double l0 = vc.lambda0;
  CHECK(l0 == doctest::Approx(1.695621).epsilon(1e-6));
  CHECK(vc.K == doctest::Approx((l0 + 1) / (3 - 2 / l0)).epsilon(0.01));
  CHECK(vc.drift < kMaxAsymptoticDrift);

  CHECK_THROWS_AS(fit_asymptotics(Family::RealCenter, 0, 10, 12), DomainError);
  CHECK_THROWS_AS(fit_asymptotics(Family::PrincipalBeta, 3, 10, 25), DomainError);
}
