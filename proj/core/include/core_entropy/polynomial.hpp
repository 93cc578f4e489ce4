#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "core_entropy/angle.hpp"

namespace core_entropy {

// Polynomial with arbitrary-precision integer coefficients, ascending degree.
// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial monomial(const BigInt& c, std::size_t degree);
  static IntPolynomial x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  IntPolynomial derivative() const;
  // Coefficients reversed: x^deg P(1/x).
  IntPolynomial reciprocal() const;

  BigInt content() const;
  // Divided by its content, leading coefficient made positive.
  IntPolynomial primitive_part() const;

  long double eval(long double x) const;
  std::complex<long double> eval(std::complex<long double> z) const;
  // Sum of |a_i| |x|^i, the natural scale for residuals at x.
  long double magnitude(long double abs_x) const;
  BigInt eval_exact(const BigInt& x) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "x^3 - x^2 - 2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient a / b. Requires b | a over Q and an integral quotient, which
// holds whenever b is primitive (Gauss). Throws DomainError otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Yun's square-free factorization of the primitive part of p: pairs
// (f_i, i) with p ~ prod f_i^i, each f_i square-free and pairwise coprime.
// Constant factors are omitted.
std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& p);

// Product of the distinct irreducible factors (up to content).
IntPolynomial square_free_part(const IntPolynomial& p);

}  // namespace core_entropy
