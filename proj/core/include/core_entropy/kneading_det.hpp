#pragma once

// Kneading determinant D(t) = sum s_n t^n with s_n = (-1)^{#ONE in nu_1..nu_n}
// and its smallest positive root t* = 1/lambda.

#include <cstddef>
#include <vector>

#include "core_entropy/angle.hpp"
#include "core_entropy/symbolic.hpp"

namespace core_entropy {

struct KneadingSigns {
  std::vector<int> signs;  // N+1 entries, signs[0] = +1
  Angle source;
};

// STAR entries are resolved as in resolve_star. Throws DomainError for
// theta = 0.
KneadingSigns kneading_signs(const Angle& theta, std::size_t terms);

struct KneadingResult {
  KneadingSequence nu;
  std::vector<int> signs;
  bool has_root = false;  // false: no root in (0, 0.95], lambda = 1
  double t_star = 1.0;
  double lambda = 1.0;
  // |tail| bound t^{N+1}/(1-t) at t*, and the induced root error bound.
  double tail_bound = 0.0;
  double root_error = 0.0;
  // False when theta is not real-admissible: the value is computed but the
  // theory behind it does not apply.
  bool supported = true;
};

inline constexpr double kKneadingRootLimit = 0.95;

// Throws DomainError for theta = 0 and ConvergenceError when the truncation
// tail leaves the root uncertain by more than 1e-6 (relative).
KneadingResult kneading_lambda(const Angle& theta, std::size_t terms = 200, double tol = 1e-13);

}  // namespace core_entropy
