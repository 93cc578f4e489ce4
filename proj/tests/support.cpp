#include "support.hpp"

namespace test {

std::vector<core_entropy::Angle> real_periodic_angles(int max_period) {
  std::vector<core_entropy::Angle> out;
  for (int n = 2; n <= max_period; ++n) {
    const long long den = (1LL << n) - 1;
    for (long long a = 1; 2 * a <= den; ++a) {
      core_entropy::Angle x(a, den);
      const auto orbit = oracle::doubling_orbit(R(x));
      if (orbit.preperiod != 0 || orbit.period != static_cast<std::size_t>(n)) continue;
      if (oracle::is_real_by_norm(R(x))) out.push_back(x);
    }
  }
  return out;
}

}  // namespace test
