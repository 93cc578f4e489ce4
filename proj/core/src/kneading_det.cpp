#include "core_entropy/kneading_det.hpp"

#include <cmath>

#include "core_entropy/errors.hpp"

namespace core_entropy {

namespace {

constexpr double kMaxRootError = 1e-6;

struct Series {
  const std::vector<int>& s;

  long double value(long double t) const {
    long double acc = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  long double slope(long double t) const {
    long double acc = 0;
    for (std::size_t n = s.size() - 1; n >= 1; --n) acc = acc * t + static_cast<long double>(n) * s[n];
    return acc;
  }
};

}  // namespace

KneadingSigns kneading_signs(const Angle& theta, std::size_t terms) {
  const KneadingSequence nu = resolve_star(kneading_sequence(theta));
  KneadingSigns out;
  out.source = theta;
  out.signs.reserve(terms + 1);
  out.signs.push_back(1);
  int s = 1;
  for (std::size_t n = 0; n < terms; ++n) {
    if (nu.at(n) == symbol::kOne) s = -s;
    out.signs.push_back(s);
  }
  return out;
}

KneadingResult kneading_lambda(const Angle& theta, std::size_t terms, double tol) {
  if (terms < 2) throw DomainError("kneading determinant needs at least two terms");
  KneadingResult r;
  r.nu = kneading_sequence(theta);
  r.supported = is_real_admissible(r.nu);
  r.signs = kneading_signs(theta, terms).signs;
  const Series d{r.signs};

  constexpr int kCells = 4000;
  const long double top = kKneadingRootLimit;
  long double x_prev = 0, f_prev = d.value(0);  // = +1
  for (int k = 1; k <= kCells; ++k) {
    const long double x = top * k / kCells;
    const long double f = d.value(x);
    if (f != 0 && (f > 0) == (f_prev > 0)) {
      x_prev = x;
      f_prev = f;
      continue;
    }
    long double lo = x_prev, hi = x;
    if (f != 0) {
      for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi || hi - lo <= tol * 1e-3) break;
        const long double fm = d.value(mid);
        if ((fm > 0) == (f_prev > 0) && fm != 0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    } else {
      lo = hi = x;
    }
    long double t = (lo + hi) / 2;
    for (int it = 0; it < 4; ++it) {
      const long double dv = d.slope(t);
      if (dv == 0) break;
      const long double next = t - d.value(t) / dv;
      if (next < x_prev || next > x) break;
      t = next;
    }
    r.has_root = true;
    r.t_star = static_cast<double>(t);
    r.lambda = static_cast<double>(1.0L / t);
    r.tail_bound = static_cast<double>(std::pow(t, static_cast<long double>(terms + 1)) / (1 - t));
    const long double slope = std::fabs(d.slope(t));
    r.root_error = slope > 0 ? static_cast<double>(r.tail_bound / slope) : INFINITY;
    if (r.root_error > kMaxRootError * t) {
      const double e = r.root_error;
      throw ConvergenceError("kneading series truncated too early to certify the root",
                             1.0 / (r.t_star + e), r.t_star > e ? 1.0 / (r.t_star - e) : INFINITY);
    }
    return r;
  }
  return r;
}

}  // namespace core_entropy
