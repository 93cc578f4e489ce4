#pragma once

#include <random>
#include <string>
#include <vector>

#include "core_entropy/angle.hpp"
#include "core_entropy/spectral.hpp"
#include "oracles.hpp"

namespace test {

inline core_entropy::Angle A(const char* text) { return core_entropy::parse_angle(text); }

inline oracle::Rational R(const core_entropy::Angle& a) {
  return oracle::Rational(a.numerator(), a.denominator());
}

inline std::vector<std::vector<long long>> dense(const core_entropy::NonnegativeMatrix& m) {
  std::vector<std::vector<long long>> out(m.dim(), std::vector<long long>(m.dim(), 0));
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (const auto& e : m.column(j)) out[e.row][j] = e.weight;
  return out;
}

// All reduced angles a/den in (0, 1) with den <= max_den.
inline std::vector<core_entropy::Angle> small_angles(long long max_den) {
  std::vector<core_entropy::Angle> out;
  for (long long d = 2; d <= max_den; ++d)
    for (long long a = 1; a < d; ++a) {
      core_entropy::Angle x(a, d);
      if (x.denominator() == d) out.push_back(x);
    }
  return out;
}

// Real-admissible periodic angles in (0, 1/2] of exact period 2..max_period.
std::vector<core_entropy::Angle> real_periodic_angles(int max_period);

// Angles of the 1/q principal limb: the beta-type tip 0.0^{q-2}1, the
// period q+1 center 0.(0^{q-1}11) and the alpha-type point
// 0.0^{q-1}1(0^{q-2}10).
struct PrincipalAngles {
  core_entropy::Angle beta;
  core_entropy::Angle center;
  core_entropy::Angle alpha;
};

inline PrincipalAngles principal_angles(int q) {
  using core_entropy::BinaryAngle;
  using core_entropy::from_binary;
  const std::string z1(static_cast<std::size_t>(q - 1), '0');
  const std::string z2(static_cast<std::size_t>(q - 2), '0');
  return {from_binary(BinaryAngle{z2 + "1", ""}), from_binary(BinaryAngle{"", z1 + "11"}),
          from_binary(BinaryAngle{z1 + "1", z2 + "10"})};
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

}  // namespace test
