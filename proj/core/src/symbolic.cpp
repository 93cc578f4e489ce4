#include "core_entropy/symbolic.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "core_entropy/errors.hpp"
#include "core_entropy/parallel.hpp"

namespace core_entropy {

namespace {

// Position of x relative to the arc (theta/2, (theta+1)/2). All quantities are
// compared as num/den against theta's num/den with a common scale of 2*den.
char side(const Angle& x, const Angle& theta) {
  if (theta.is_zero()) {
    // boundary points are 0 and 1/2; nothing lies inside the degenerate arc
    if (x.is_zero() || (x.numerator() * 2 == x.denominator())) return symbol::kStar;
    return symbol::kZero;
  }
  // x ~ a/b, boundaries t/(2d) and (t+d)/(2d)
  const BigInt lhs = x.numerator() * 2 * theta.denominator();
  const BigInt lo = theta.numerator() * x.denominator();
  const BigInt hi = (theta.numerator() + theta.denominator()) * x.denominator();
  if (lhs == lo || lhs == hi) return symbol::kStar;
  return (lhs > lo && lhs < hi) ? symbol::kOne : symbol::kZero;
}

}  // namespace

char KneadingSequence::at(std::size_t i) const {
  if (i < preperiodic.size()) return preperiodic[i];
  return periodic[(i - preperiodic.size()) % periodic.size()];
}

std::string KneadingSequence::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

std::string KneadingSequence::render() const { return preperiodic + "|(" + periodic + ")"; }

std::string itinerary(const Angle& phi, const Angle& theta, std::size_t n) {
  std::string out;
  out.reserve(n);
  Angle x = phi;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(side(x, theta));
    x = x.doubled();
  }
  return out;
}

KneadingSequence kneading_sequence(const Angle& theta) {
  if (theta.is_zero()) throw DomainError("kneading sequence undefined for theta = 0");
  const auto orbit = orbit_structure(theta);
  const std::string word = itinerary(theta, theta, orbit.preperiod + orbit.period);
  return {word.substr(0, orbit.preperiod), word.substr(orbit.preperiod)};
}

KneadingSequence resolve_star(const KneadingSequence& nu) {
  if (!nu.has_star()) return nu;
  KneadingSequence out = nu;
  const auto ones = std::count(nu.periodic.begin(), nu.periodic.end(), symbol::kOne);
  const char fill = (ones % 2 == 1) ? symbol::kOne : symbol::kZero;
  std::replace(out.periodic.begin(), out.periodic.end(), symbol::kStar, fill);
  return out;
}

std::pair<KneadingSequence, KneadingSequence> star_resolutions(const KneadingSequence& nu) {
  KneadingSequence zero = nu;
  KneadingSequence one = nu;
  std::replace(zero.periodic.begin(), zero.periodic.end(), symbol::kStar, symbol::kZero);
  std::replace(one.periodic.begin(), one.periodic.end(), symbol::kStar, symbol::kOne);
  return {zero, one};
}

int twisted_compare(const KneadingSequence& a, const KneadingSequence& b, std::size_t n) {
  bool even = true;
  for (std::size_t i = 0; i < n; ++i) {
    const char x = a.at(i);
    const char y = b.at(i);
    if (x != y) {
      const bool a_bigger = (x == symbol::kOne) == even;
      return a_bigger ? 1 : -1;
    }
    if (x == symbol::kOne) even = !even;
  }
  return 0;
}

KneadingSequence shifted(const KneadingSequence& nu, std::size_t k) {
  if (k <= nu.preperiodic.size()) return {nu.preperiodic.substr(k), nu.periodic};
  const std::size_t r = (k - nu.preperiodic.size()) % nu.periodic.size();
  return {"", nu.periodic.substr(r) + nu.periodic.substr(0, r)};
}

bool is_shift_maximal(const KneadingSequence& nu) {
  // Two sequences with preperiod <= k and period p agree everywhere once they
  // agree on k + p symbols, so that prefix decides the comparison.
  const std::size_t span = nu.length();
  for (std::size_t k = 1; k <= span; ++k) {
    if (twisted_compare(shifted(nu, k), nu, span) > 0) return false;
  }
  return true;
}

bool is_real_admissible(const KneadingSequence& nu) {
  if (nu.periodic.empty()) return false;
  if (!nu.has_star()) return is_shift_maximal(nu);
  const auto [zero, one] = star_resolutions(nu);
  return is_shift_maximal(zero) && is_shift_maximal(one);
}

bool is_real_angle(const Angle& theta) {
  return !theta.is_zero() && is_real_admissible(kneading_sequence(theta));
}

std::uint64_t real_tree_survivors(const Angle& theta, std::size_t depth) {
  if (depth < 1) throw DomainError("survivor depth must be at least 1");
  if (depth > 40) throw BudgetError("survivor depth exceeds the cap of 40");
  if (theta.numerator() * 2 > theta.denominator())
    throw DomainError("real_tree_survivors requires theta <= 1/2");
  if (!is_real_angle(theta)) throw DomainError("theta is not real-admissible");

  // Midpoints (2i+1)/2^{depth+1}; the norm test is x <= floor(theta * M).
  const std::uint64_t modulus = std::uint64_t{1} << (depth + 1);
  const auto bound = static_cast<std::uint64_t>(
      (theta.numerator() * BigInt(modulus)) / theta.denominator());
  const std::uint64_t count = std::uint64_t{1} << depth;
  const std::uint64_t mask = modulus - 1;

  constexpr std::uint64_t kBlock = 1 << 14;
  const std::size_t blocks = static_cast<std::size_t>((count + kBlock - 1) / kBlock);
  std::vector<std::uint64_t> partial(blocks, 0);
  parallel_for(
      blocks,
      [&](std::size_t b) {
        const std::uint64_t begin = b * kBlock;
        const std::uint64_t end = std::min(count, begin + kBlock);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
          std::uint64_t x = 2 * i + 1;
          bool ok = true;
          for (std::size_t n = 0; n < depth && ok; ++n) {
            ok = std::min(x, modulus - x) <= bound;
            x = (x << 1) & mask;
          }
          hits += ok ? 1 : 0;
        }
        partial[b] = hits;
      },
      1);
  std::uint64_t total = 0;
  for (auto h : partial) total += h;
  return total;
}

}  // namespace core_entropy
