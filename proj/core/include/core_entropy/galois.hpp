#pragma once

// Root clouds of +-1 / {-1,0,1} polynomial families.

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "core_entropy/polynomial.hpp"
#include "core_entropy/symbolic.hpp"

namespace core_entropy {

enum class PolySet { M0, M1, M2 };
std::string to_string(PolySet s);
// Accepts "m0"/"M0" etc. Throws ParseError otherwise.
PolySet parse_poly_set(std::string_view text);

struct GaloisBudget {
  int m0_max_degree = 12;
  int m1_max_degree = 20;
  int m2_max_period = 20;
};

struct TaggedPolynomial {
  IntPolynomial poly;
  // Descending coefficient signs, e.g. "+0-+"; M2 uses the kneading word.
  std::string id;
};

// M0: coefficients in {-1,0,1}, nonzero constant term, lead +1, degree 1..bound.
// M1: coefficients in {-1,1}, lead +1, degree 1..bound.
// M2: one polynomial per real-admissible STAR-periodic kneading sequence of
//     period 2..bound, from the composition of z -> +-lambda z - 1 at 0.
// Ordered by degree, then lexicographically by descending coefficients.
// Throws BudgetError above the budget.
std::vector<TaggedPolynomial> enumerate_polynomials(PolySet set, int bound,
                                                    const GaloisBudget& budget = {});

// Sign polynomial of a kneading word nu_1..nu_{n-1} (the trailing STAR is
// implicit): x_1 = -1, x_{k+1} = s_k x x_k - 1, s_k = -1 for ONE and +1 for
// ZERO; returns x_n normalized to a positive lead.
IntPolynomial kneading_polynomial(std::string_view word);

// Admissible words w of length n-1 such that (w*) is a real kneading sequence.
std::vector<std::string> admissible_star_words(int period);

struct ComplexRoot {
  std::complex<long double> z;
  unsigned multiplicity = 1;
  long double residual = 0;  // |f(z)| / sum |a_i||z|^i for its square-free factor
};

// All complex roots with multiplicity. Throws BudgetError above degree 64 and
// ConvergenceError when a root cannot be certified to tol.
std::vector<ComplexRoot> complex_roots(const IntPolynomial& p, double tol = 1e-10);

struct RootPoint {
  double re;
  double im;
  int degree;
  std::string poly_id;
  PolySet set;
};

// Roots repeated according to multiplicity, in enumeration order.
std::vector<RootPoint> root_cloud(PolySet set, int bound, double tol = 1e-10,
                                  const GaloisBudget& budget = {});

// re,im,degree,poly_id,set
void write_cloud_csv(std::ostream& out, const std::vector<RootPoint>& cloud);

}  // namespace core_entropy
