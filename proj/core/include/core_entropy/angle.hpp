#pragma once

// Exact rational points of the circle R/Z and the doubling map on them.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace core_entropy {

using BigInt = boost::multiprecision::cpp_int;

/// A rational angle in [0, 1), always stored in lowest terms.
class Angle {
 public:
  Angle() : num_(0), den_(1) {}

  /// Reduces num/den modulo 1 and to lowest terms. Throws DomainError if
  /// den <= 0 or num < 0.
  Angle(BigInt num, BigInt den);
  Angle(long long num, long long den) : Angle(BigInt(num), BigInt(den)) {}

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_dyadic() const;

  Angle doubled() const;
  /// 1 - a (mod 1); the complex-conjugate angle.
  Angle mirrored() const;
  /// a/2, the lower preimage under doubling.
  Angle half() const;
  /// (a+1)/2, the upper preimage under doubling.
  Angle half_plus() const;

  /// min(a, 1-a) as an angle in [0, 1/2].
  Angle circle_norm() const;

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "p/q"; zero renders as "0".
  std::string to_string() const;

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  BigInt num_;
  BigInt den_;
};

struct AngleHash {
  std::size_t operator()(const Angle& a) const;
};

/// Preperiod k and period p under doubling.
struct OrbitStructure {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const OrbitStructure&, const OrbitStructure&) = default;
};

/// Binary expansion 0.pre(per). `periodic` is empty only for dyadic angles.
struct BinaryAngle {
  std::string preperiodic;
  std::string periodic;

  friend bool operator==(const BinaryAngle&, const BinaryAngle&) = default;
};

/// Accepts "p/q", a bare integer, "0b.BITS" or "0b.BITS(BITS)"/"0b.(BITS)".
Angle parse_angle(std::string_view text);

Angle double_angle(const Angle& a);

OrbitStructure orbit_structure(const Angle& a);

/// The k+p distinct angles a, 2a, 4a, ... in orbit order.
std::vector<Angle> doubling_orbit(const Angle& a);

BinaryAngle to_binary(const Angle& a);
Angle from_binary(const BinaryAngle& b);
/// "0b.01(0011)" form; dyadic angles omit the parentheses, zero is "0b.0".
std::string render_binary(const BinaryAngle& b);

/// Douady substitution: every binary digit 0 of `a` becomes `w_minus`,
/// every 1 becomes `w_plus`. Dyadic angles use their 0-terminated expansion.
/// Throws ParseError on non-bit characters, DomainError on unequal lengths,
/// identical words or length < 2.
Angle tune_angle(std::string_view w_minus, std::string_view w_plus, const Angle& a);

}  // namespace core_entropy
