#include "core_entropy/families.hpp"

#include <algorithm>
#include <cmath>

#include "core_entropy/errors.hpp"
#include "core_entropy/spectral.hpp"

namespace core_entropy {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  bool q;
  bool n;
  int step;
};

constexpr FamilyInfo kInfo[] = {
    {Family::PrincipalBeta, "principal_beta", true, false, 1},
    {Family::PrincipalCenter, "principal_center", true, false, 1},
    {Family::PrincipalAlpha, "principal_alpha", true, false, 1},
    {Family::VeinCenter, "vein_center", true, true, 1},
    {Family::VeinAlpha, "vein_alpha", true, true, 1},
    {Family::RealCenter, "real_center", false, true, 1},
    {Family::RealAlpha, "real_alpha", false, true, 1},
    {Family::StefanOdd, "stefan_odd", false, true, 2},
    {Family::StefanEven, "stefan_even", false, true, 2},
    {Family::X14Center, "x14_center", false, true, 1},
    {Family::X14Alpha, "x14_alpha", false, true, 1},
    {Family::X14Beta, "x14_beta", false, true, 1},
    {Family::X16Center, "x16_center", false, true, 2},
    {Family::X16Alpha, "x16_alpha", false, true, 2},
    {Family::X16Beta, "x16_beta", false, true, 2},
    {Family::X315Center, "x315_center", false, true, 4},
    {Family::X315Alpha, "x315_alpha", false, true, 4},
    {Family::X315Beta, "x315_beta", false, true, 4},
    {Family::X315Sublimb, "x315_sublimb", false, true, 4},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kInfo) {
    if (i.family == f) return i;
  }
  throw DomainError("unknown family");
}

IntPolynomial xn(int n) { return IntPolynomial::monomial(1, static_cast<std::size_t>(n)); }

// Smallest valid n and the residue it must have modulo the step.
struct NRange {
  int min;
  int step;
};

NRange n_range(Family f, int q) {
  switch (f) {
    case Family::VeinCenter:
      return {q + 1, 1};
    case Family::VeinAlpha:
      return {q, 1};
    case Family::RealCenter:
      return {3, 1};
    case Family::RealAlpha:
      return {2, 1};
    case Family::StefanOdd:
      return {3, 2};
    case Family::StefanEven:
      return {4, 2};
    case Family::X14Center:
    case Family::X14Beta:
      return {4, 1};
    case Family::X14Alpha:
      return {3, 1};
    case Family::X16Center:
      return {5, 2};
    case Family::X16Alpha:
      return {3, 2};
    case Family::X16Beta:
      return {2, 2};
    case Family::X315Center:
      return {7, 4};
    case Family::X315Alpha:
      return {3, 4};
    case Family::X315Beta:
      return {4, 4};
    case Family::X315Sublimb:
      return {2, 4};
    default:
      return {0, 1};
  }
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& i : kInfo) v.push_back(i.family);
    return v;
  }();
  return all;
}

std::string family_name(Family f) { return info(f).name; }

Family parse_family(std::string_view name) {
  for (const auto& i : kInfo) {
    if (name == i.name) return i.family;
  }
  throw ParseError("unknown family: " + std::string(name));
}

bool uses_q(Family f) { return info(f).q; }
bool uses_n(Family f) { return info(f).n; }
int family_step(Family f) { return info(f).step; }

std::string family_range_error(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  if (fi.q && spec.q < 2) return fi.name + std::string(" requires q >= 2");
  if (!fi.n) return {};
  const NRange r = n_range(spec.family, spec.q);
  if (spec.n < r.min) return fi.name + std::string(" requires n >= ") + std::to_string(r.min);
  if ((spec.n - r.min) % r.step != 0)
    return fi.name + std::string(" requires n = ") + std::to_string(r.min) + " mod " +
           std::to_string(r.step);
  return {};
}

IntPolynomial family_polynomial(const FamilySpec& spec) {
  if (auto err = family_range_error(spec); !err.empty()) throw DomainError(err);
  const int q = spec.q;
  const int n = spec.n;
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial one{1};
  const IntPolynomial two{2};

  switch (spec.family) {
    case Family::PrincipalBeta:
      return xn(q) - xn(q - 1) - two;
    case Family::PrincipalCenter:
      return xn(q + 1) - IntPolynomial{0, 2} - one;
    case Family::PrincipalAlpha:
      return xn(q) - two;
    case Family::VeinCenter:
      return xn(n + 1) - xn(n) - BigInt(2) * xn(n + 1 - q) + x + one;
    case Family::VeinAlpha:
      return xn(n + 1) - xn(n) - BigInt(2) * xn(n + 1 - q) + two;
    case Family::RealCenter:
      return xn(n) - BigInt(2) * xn(n - 1) + one;
    case Family::RealAlpha:
      return xn(n + 1) - xn(n) - BigInt(2) * xn(n - 1) + two;
    case Family::StefanOdd:
      return xn(n) - BigInt(2) * xn(n - 2) - one;
    case Family::StefanEven:
      return xn(n) - BigInt(2) * xn(n - 2) + one;
    case Family::X14Center:
      return xn(n - 2) * leading_factor(spec.family) + IntPolynomial{1, 1};
    case Family::X14Alpha:
      return xn(n - 2) * leading_factor(spec.family) + two;
    case Family::X14Beta:
      return xn(n - 2) * leading_factor(spec.family) + IntPolynomial{-2, 2};
    case Family::X16Center:
      return xn(n - 1) * leading_factor(spec.family) + IntPolynomial{1, 0, 1};
    case Family::X16Alpha:
      return xn(n - 1) * leading_factor(spec.family) + two;
    case Family::X16Beta:
      return xn(n - 1) * leading_factor(spec.family) - two;
    case Family::X315Center:
      return xn(n) * leading_factor(spec.family) + IntPolynomial{1, 0, 0, 0, 1};
    case Family::X315Alpha:
      return xn(n) * leading_factor(spec.family) + two;
    case Family::X315Beta:
      return xn(n) * leading_factor(spec.family) - IntPolynomial{2, 0, 2, 2};
    case Family::X315Sublimb:
      return xn(n) * leading_factor(spec.family) - IntPolynomial{2, 0, 2};
  }
  throw DomainError("unknown family");
}

double family_growth(const FamilySpec& spec) {
  return largest_real_root(family_polynomial(spec), 1.0, 2.0, 0.0);
}

IntPolynomial leading_factor(Family f, int q) {
  const IntPolynomial x14{-2, 0, -1, 1};      // x^3 - x^2 - 2
  const IntPolynomial x16{-2, -1, 0, 1};      // x^3 - x - 2
  const IntPolynomial x315{-1, -2, 0, 0, 1};  // x^4 - 2x - 1
  switch (f) {
    case Family::VeinCenter:
    case Family::VeinAlpha:
      if (q < 2) throw DomainError("vein families require q >= 2");
      return xn(q) - xn(q - 1) - IntPolynomial{2};
    case Family::RealCenter:
      return IntPolynomial{-2, 1};
    case Family::RealAlpha:
      return IntPolynomial{-2, -1, 1};
    case Family::StefanOdd:
    case Family::StefanEven:
      return IntPolynomial{-2, 0, 1};
    case Family::X14Center:
    case Family::X14Alpha:
    case Family::X14Beta:
      return x14;
    case Family::X16Center:
    case Family::X16Alpha:
    case Family::X16Beta:
      return x16;
    case Family::X315Center:
    case Family::X315Alpha:
    case Family::X315Beta:
      return x315;
    case Family::X315Sublimb:
      return IntPolynomial{-1, 1} * x315;
    default:
      throw DomainError(family_name(f) + " has no sequence index");
  }
}

AsymptoticsFit fit_asymptotics(Family f, int q, int n_lo, int n_hi) {
  if (!uses_n(f)) throw DomainError(family_name(f) + " has no sequence index");
  AsymptoticsFit fit;
  for (int n = n_lo; n <= n_hi; ++n) {
    if (family_range_error({f, q, n}).empty()) fit.indices.push_back(n);
  }
  if (fit.indices.size() < 5)
    throw DomainError("asymptotic fit needs at least five valid indices in range");

  fit.lambda0 = largest_real_root(leading_factor(f, q), 1.0, 2.0, 0.0);
  std::vector<double> ks;
  for (int n : fit.indices) {
    const double diff = family_growth({f, q, n}) - fit.lambda0;
    const int s = (diff > 0) - (diff < 0);
    if (s == 0 || (fit.sign != 0 && s != fit.sign))
      throw ConvergenceError("correction term changes sign", fit.lambda0, fit.lambda0);
    fit.sign = s;
    ks.push_back(std::fabs(diff) * std::pow(fit.lambda0, n));
  }
  double sum = 0;
  for (double k : ks) sum += k;
  fit.K = sum / static_cast<double>(ks.size());
  fit.drift = std::fabs(ks.back() - ks.front()) / fit.K;
  if (fit.drift > kMaxAsymptoticDrift) {
    const auto [mn, mx] = std::minmax_element(ks.begin(), ks.end());
    throw ConvergenceError("asymptotic constant drifts over the fitted range", *mn, *mx);
  }
  return fit;
}

}  // namespace core_entropy
