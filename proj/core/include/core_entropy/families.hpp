#pragma once

// Closed-form characteristic polynomials of parameter sequences and fitting
// of their geometric approach to the limit.

#include <string>
#include <string_view>
#include <vector>

#include "core_entropy/polynomial.hpp"

namespace core_entropy {

enum class Family {
  PrincipalBeta,
  PrincipalCenter,
  PrincipalAlpha,
  VeinCenter,
  VeinAlpha,
  RealCenter,
  RealAlpha,
  StefanOdd,
  StefanEven,
  X14Center,
  X14Alpha,
  X14Beta,
  X16Center,
  X16Alpha,
  X16Beta,
  X315Center,
  X315Alpha,
  X315Beta,
  X315Sublimb,
};

struct FamilySpec {
  Family family = Family::PrincipalBeta;
  int q = 0;
  int n = 0;
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
// Throws ParseError for unknown names.
Family parse_family(std::string_view name);

bool uses_q(Family f);
bool uses_n(Family f);
// Index step within a sequence: 1, 2 or 4.
int family_step(Family f);
// Empty string when the parameters are valid, otherwise the reason.
std::string family_range_error(const FamilySpec& spec);

// Throws DomainError when the parameters are out of range.
IntPolynomial family_polynomial(const FamilySpec& spec);

// Largest real root in [1, 2].
double family_growth(const FamilySpec& spec);

// Factor whose largest root is the limit lambda0 of the sequence in n.
// Throws DomainError for families without an n index.
IntPolynomial leading_factor(Family f, int q = 0);

struct AsymptoticsFit {
  double lambda0 = 0.0;
  double K = 0.0;
  double drift = 0.0;  // |K_last - K_first| / K over the fitted indices
  int sign = 0;        // sign of lambda_n - lambda0, constant over the range
  std::vector<int> indices;
};

inline constexpr double kMaxAsymptoticDrift = 0.1;

// Fits lambda_n ~ lambda0 + sign * K * lambda0^{-n} over the valid n in
// [n_lo, n_hi]. Throws DomainError with fewer than five valid indices and
// ConvergenceError when the correction changes sign or drifts by more than
// kMaxAsymptoticDrift.
AsymptoticsFit fit_asymptotics(Family f, int q, int n_lo, int n_hi);

}  // namespace core_entropy
