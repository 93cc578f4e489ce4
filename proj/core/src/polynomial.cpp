#include "core_entropy/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "core_entropy/errors.hpp"

namespace core_entropy {

namespace {

long double to_ld(const BigInt& v) { return v.convert_to<long double>(); }

// Pseudo-remainder of a by b (b nonzero): lc(b)^k a = q b + r.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  std::vector<BigInt> r = a.coefficients();
  const BigInt& lb = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const BigInt lr = r.back();
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[shift + i] -= lr * b.coeff(static_cast<std::size_t>(i));
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  c_.reserve(ascending.size());
  for (long long v : ascending) c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (c_.back() < 0) g = -g;
  std::vector<BigInt> out(c_);
  for (auto& c : out) c /= g;
  return IntPolynomial(std::move(out));
}

long double IntPolynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_ld(*it);
  return acc;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_ld(*it);
  return acc;
}

long double IntPolynomial::magnitude(long double abs_x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * abs_x + std::fabs(to_ld(*it));
  return acc;
}

BigInt IntPolynomial::eval_exact(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out(c_);
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) {
  std::vector<BigInt> out(a.c_);
  for (auto& c : out) c *= k;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw DomainError("inexact polynomial division");
  std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), BigInt(0));
  const BigInt& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (top % lb != 0) throw DomainError("inexact polynomial division");
    const BigInt f = top / lb;
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(k + i)] -= f * b.coeff(static_cast<std::size_t>(i));
  }
  for (const auto& c : r) {
    if (c != 0) throw DomainError("inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<IntPolynomial, unsigned>> square_free_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  const IntPolynomial f = p.primitive_part();
  if (f.degree() < 1) return out;

  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = divide_exact(f, a0);
  IntPolynomial c = divide_exact(df, a0);
  IntPolynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    const IntPolynomial a = gcd(b, d);
    if (a.degree() >= 1) out.emplace_back(a, i);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  IntPolynomial out{1};
  for (const auto& [f, m] : square_free_decomposition(p)) out = out * f;
  return out;
}

}  // namespace core_entropy
