#include "core_entropy/angle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "core_entropy/errors.hpp"

namespace core_entropy {

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

std::size_t two_adic_valuation(const BigInt& n) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::lsb(n));
}

bool is_bits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt bits_value(std::string_view bits) {
  BigInt v = 0;
  for (char c : bits) {
    v <<= 1;
    if (c == '1') v += 1;
  }
  return v;
}

std::string substitute(std::string_view bits, std::string_view w0, std::string_view w1) {
  std::string out;
  out.reserve(bits.size() * w0.size());
  for (char c : bits) out += (c == '1') ? w1 : w0;
  return out;
}

}  // namespace

Angle::Angle(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw DomainError("angle denominator must be positive");
  if (num_ < 0) throw DomainError("angle numerator must be nonnegative");
  num_ %= den_;
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (num_ == 0) {
    den_ = 1;
  } else if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

bool Angle::is_dyadic() const { return (den_ & (den_ - 1)) == 0; }

Angle Angle::doubled() const { return Angle(num_ * 2, den_); }

Angle Angle::mirrored() const {
  if (num_ == 0) return *this;
  return Angle(den_ - num_, den_);
}

Angle Angle::half() const { return Angle(num_, den_ * 2); }

Angle Angle::half_plus() const { return Angle(num_ + den_, den_ * 2); }

Angle Angle::circle_norm() const {
  return (num_ * 2 <= den_) ? *this : mirrored();
}

long double Angle::to_long_double() const {
  using boost::multiprecision::cpp_bin_float_double_extended;
  cpp_bin_float_double_extended n(num_);
  cpp_bin_float_double_extended d(den_);
  return static_cast<long double>(n / d);
}

std::string Angle::to_string() const {
  if (num_ == 0) return "0";
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t AngleHash::operator()(const Angle& a) const {
  constexpr unsigned long long kMod = (1ULL << 61) - 1;
  const auto n = static_cast<unsigned long long>(a.numerator() % kMod);
  const auto d = static_cast<unsigned long long>(a.denominator() % kMod);
  return std::hash<unsigned long long>{}(n * 0x9E3779B97F4A7C15ULL ^ d);
}

Angle parse_angle(std::string_view text) {
  if (text.rfind("0b.", 0) == 0) {
    std::string_view rest = text.substr(3);
    std::string_view pre = rest;
    std::string_view per;
    if (auto open = rest.find('('); open != std::string_view::npos) {
      if (rest.back() != ')' || open + 1 >= rest.size())
        throw ParseError("malformed binary angle: " + std::string(text));
      pre = rest.substr(0, open);
      per = rest.substr(open + 1, rest.size() - open - 2);
      if (per.empty()) throw ParseError("empty periodic part: " + std::string(text));
    }
    if (pre.empty() && per.empty()) throw ParseError("empty binary literal");
    if (!is_bits(pre) || !is_bits(per))
      throw ParseError("binary angle must contain only 0/1: " + std::string(text));
    return from_binary(BinaryAngle{std::string(pre), std::string(per)});
  }

  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(text)) throw ParseError("malformed angle: " + std::string(text));
    return Angle();  // integers are 0 mod 1
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("malformed angle: " + std::string(text));
  const BigInt d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: " + std::string(text));
  return Angle(BigInt(std::string(num)), d);
}

Angle double_angle(const Angle& a) { return a.doubled(); }

OrbitStructure orbit_structure(const Angle& a) {
  OrbitStructure s;
  const BigInt& den = a.denominator();
  s.preperiod = two_adic_valuation(den);
  const BigInt odd = den >> s.preperiod;
  s.period = 1;
  if (odd > 1) {
    BigInt x = 2 % odd;
    while (x != 1) {
      x = (x * 2) % odd;
      ++s.period;
    }
  }
  return s;
}

std::vector<Angle> doubling_orbit(const Angle& a) {
  const auto s = orbit_structure(a);
  std::vector<Angle> out;
  out.reserve(s.preperiod + s.period);
  Angle x = a;
  for (std::size_t i = 0; i < s.preperiod + s.period; ++i) {
    out.push_back(x);
    x = x.doubled();
  }
  return out;
}

BinaryAngle to_binary(const Angle& a) {
  const auto s = orbit_structure(a);
  BinaryAngle b;
  BigInt num = a.numerator();
  const BigInt& den = a.denominator();
  auto next_bit = [&] {
    num *= 2;
    if (num >= den) {
      num -= den;
      return '1';
    }
    return '0';
  };
  for (std::size_t i = 0; i < s.preperiod; ++i) b.preperiodic.push_back(next_bit());
  if (!a.is_dyadic()) {
    for (std::size_t i = 0; i < s.period; ++i) b.periodic.push_back(next_bit());
  }
  return b;
}

Angle from_binary(const BinaryAngle& b) {
  const BigInt pre = bits_value(b.preperiodic);
  const BigInt scale = pow2(b.preperiodic.size());
  if (b.periodic.empty()) return Angle(pre, scale);
  const BigInt rep = pow2(b.periodic.size()) - 1;
  return Angle(pre * rep + bits_value(b.periodic), scale * rep);
}

std::string render_binary(const BinaryAngle& b) {
  if (b.preperiodic.empty() && b.periodic.empty()) return "0b.0";
  std::string out = "0b." + b.preperiodic;
  if (!b.periodic.empty()) out += "(" + b.periodic + ")";
  return out;
}

Angle tune_angle(std::string_view w_minus, std::string_view w_plus, const Angle& a) {
  if (!is_bits(w_minus) || !is_bits(w_plus) || w_minus.empty() || w_plus.empty())
    throw ParseError("tuning words must be nonempty bit strings");
  if (w_minus.size() != w_plus.size()) throw DomainError("tuning words must have equal length");
  if (w_minus.size() < 2) throw DomainError("tuning words must have length >= 2");
  if (w_minus == w_plus) throw DomainError("tuning words must be distinct");

  BinaryAngle b = to_binary(a);
  if (b.periodic.empty()) b.periodic = "0";
  return from_binary(BinaryAngle{substitute(b.preperiodic, w_minus, w_plus),
                                 substitute(b.periodic, w_minus, w_plus)});
}

}  // namespace core_entropy
