#include "core_entropy/galois.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "core_entropy/errors.hpp"
#include "core_entropy/parallel.hpp"

namespace core_entropy {

namespace {

using cld = std::complex<long double>;

char sign_char(int c) { return c > 0 ? '+' : (c < 0 ? '-' : '0'); }

// descending coefficients -> polynomial and id
TaggedPolynomial from_descending(const std::vector<int>& desc) {
  std::vector<BigInt> asc(desc.rbegin(), desc.rend());
  std::string id;
  for (int c : desc) id.push_back(sign_char(c));
  return {IntPolynomial(std::move(asc)), id};
}

bool lex_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeff(static_cast<std::size_t>(i));
    const auto& y = b.coeff(static_cast<std::size_t>(i));
    if (x != y) return x < y;
  }
  return false;
}

std::vector<cld> ld_coefficients(const IntPolynomial& f) {
  std::vector<cld> a;
  a.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) a.emplace_back(c.convert_to<long double>(), 0.0L);
  return a;
}

void horner(const std::vector<cld>& a, cld z, cld& f, cld& df) {
  f = 0;
  df = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    df = df * z + f;
    f = f * z + *it;
  }
}

long double residual(const IntPolynomial& f, cld z) {
  const long double scale = f.magnitude(std::abs(z));
  return scale > 0 ? std::abs(f.eval(z)) / scale : 0.0L;
}

void newton_polish(const std::vector<cld>& a, std::vector<cld>& roots) {
  for (auto& z : roots) {
    for (int it = 0; it < 3; ++it) {
      cld f, df;
      horner(a, z, f, df);
      if (std::abs(df) == 0) break;
      const cld next = z - f / df;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      z = next;
    }
  }
}

bool well_separated(const std::vector<cld>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= 1e-9L * std::max(1.0L, std::abs(roots[i]))) return false;
  return true;
}

bool certified(const IntPolynomial& f, const std::vector<cld>& roots, double tol) {
  if (!well_separated(roots)) return false;
  for (const auto& z : roots) {
    if (!(residual(f, z) <= tol)) return false;
  }
  return true;
}

// Aberth-Ehrlich iteration on a square-free polynomial.
std::vector<cld> aberth(const IntPolynomial& f) {
  const auto a = ld_coefficients(f);
  const int n = f.degree();
  const long double ratio = std::abs(a.front() / a.back());
  const long double radius = std::pow(ratio, 1.0L / n);
  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double ang = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  for (int it = 0; it < 500; ++it) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      cld f0, df;
      horner(a, zi, f0, df);
      if (f0 == cld(0)) continue;
      const cld q = f0 / df;
      cld sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (zi - z[static_cast<std::size_t>(j)]);
      }
      const cld w = q / (1.0L - q * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      zi -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(zi)));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

std::vector<cld> companion_roots(const IntPolynomial& f) {
  const int n = f.degree();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  const double lead = f.leading().convert_to<double>();
  for (int i = 0; i < n; ++i) {
    c(0, i) = -f.coeff(static_cast<std::size_t>(n - 1 - i)).convert_to<double>() / lead;
    if (i + 1 < n) c(i + 1, i) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  std::vector<cld> out;
  for (int i = 0; i < n; ++i) {
    const auto v = solver.eigenvalues()[i];
    out.emplace_back(v.real(), v.imag());
  }
  newton_polish(ld_coefficients(f), out);
  return out;
}

std::vector<cld> simple_roots(const IntPolynomial& f, double tol) {
  if (f.degree() == 1) {
    const long double r = -(f.coeff(0).convert_to<long double>()) / f.coeff(1).convert_to<long double>();
    return {cld(r, 0)};
  }
  auto roots = aberth(f);
  newton_polish(ld_coefficients(f), roots);
  if (certified(f, roots, tol)) return roots;
  roots = companion_roots(f);
  if (certified(f, roots, tol)) return roots;
  long double worst = 0;
  for (const auto& z : roots) worst = std::max(worst, residual(f, z));
  throw ConvergenceError("root finder failed for " + f.to_string(), 0.0, static_cast<double>(worst));
}

std::string fmt9(double v) {
  char buf[64];
  if (v == 0) v = 0.0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string to_string(PolySet s) {
  switch (s) {
    case PolySet::M0:
      return "M0";
    case PolySet::M1:
      return "M1";
    case PolySet::M2:
      return "M2";
  }
  return "?";
}

PolySet parse_poly_set(std::string_view text) {
  if (text == "m0" || text == "M0") return PolySet::M0;
  if (text == "m1" || text == "M1") return PolySet::M1;
  if (text == "m2" || text == "M2") return PolySet::M2;
  throw ParseError("unknown polynomial set: " + std::string(text));
}

IntPolynomial kneading_polynomial(std::string_view word) {
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial one{1};
  IntPolynomial cur{-1};
  for (char c : word) {
    const IntPolynomial step = x * cur;
    cur = (c == symbol::kOne ? -step : step) - one;
  }
  return cur.leading() < 0 ? -cur : cur;
}

std::vector<std::string> admissible_star_words(int period) {
  std::vector<std::string> out;
  if (period < 2) return out;
  const int free_bits = period - 2;  // the first symbol is always ONE
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
    std::string w = "1";
    for (int b = free_bits - 1; b >= 0; --b) w.push_back(((mask >> b) & 1) ? '1' : '0');
    if (is_real_admissible({"", w + "*"})) out.push_back(w);
  }
  return out;
}

std::vector<TaggedPolynomial> enumerate_polynomials(PolySet set, int bound,
                                                    const GaloisBudget& budget) {
  if (bound < 1) throw DomainError("bound must be positive");
  std::vector<TaggedPolynomial> out;
  switch (set) {
    case PolySet::M0: {
      if (bound > budget.m0_max_degree)
        throw BudgetError("M0 degree exceeds the cap of " + std::to_string(budget.m0_max_degree));
      for (int d = 1; d <= bound; ++d) {
        // middle digits base 3, constant term last (radix 2)
        std::uint64_t count = 2;
        for (int i = 1; i < d; ++i) count *= 3;
        for (std::uint64_t k = 0; k < count; ++k) {
          std::vector<int> desc(static_cast<std::size_t>(d + 1));
          desc[0] = 1;
          desc[static_cast<std::size_t>(d)] = (k % 2 == 0) ? -1 : 1;
          std::uint64_t rest = k / 2;
          for (int i = d - 1; i >= 1; --i) {
            desc[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3) - 1;
            rest /= 3;
          }
          out.push_back(from_descending(desc));
        }
      }
      break;
    }
    case PolySet::M1: {
      if (bound > budget.m1_max_degree)
        throw BudgetError("M1 degree exceeds the cap of " + std::to_string(budget.m1_max_degree));
      for (int d = 1; d <= bound; ++d) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << d); ++k) {
          std::vector<int> desc(static_cast<std::size_t>(d + 1));
          desc[0] = 1;
          for (int i = 1; i <= d; ++i) desc[static_cast<std::size_t>(i)] = ((k >> (d - i)) & 1) ? 1 : -1;
          out.push_back(from_descending(desc));
        }
      }
      break;
    }
    case PolySet::M2: {
      if (bound > budget.m2_max_period)
        throw BudgetError("M2 period exceeds the cap of " + std::to_string(budget.m2_max_period));
      for (int n = 2; n <= bound; ++n) {
        std::vector<TaggedPolynomial> level;
        for (const auto& w : admissible_star_words(n)) level.push_back({kneading_polynomial(w), w + "*"});
        std::sort(level.begin(), level.end(),
                  [](const auto& a, const auto& b) { return lex_less(a.poly, b.poly); });
        for (auto& t : level) out.push_back(std::move(t));
      }
      break;
    }
  }
  return out;
}

std::vector<ComplexRoot> complex_roots(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no isolated roots");
  if (p.degree() > 64) throw BudgetError("complex_roots is limited to degree 64");
  std::vector<ComplexRoot> out;
  for (const auto& [f, m] : square_free_decomposition(p)) {
    for (const auto& z : simple_roots(f, tol)) out.push_back({z, m, residual(f, z)});
  }
  return out;
}

std::vector<RootPoint> root_cloud(PolySet set, int bound, double tol, const GaloisBudget& budget) {
  const auto polys = enumerate_polynomials(set, bound, budget);
  std::vector<std::vector<ComplexRoot>> roots(polys.size());
  parallel_for(polys.size(), [&](std::size_t i) { roots[i] = complex_roots(polys[i].poly, tol); });
  std::vector<RootPoint> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& r : roots[i]) {
      for (unsigned k = 0; k < r.multiplicity; ++k) {
        out.push_back({static_cast<double>(r.z.real()), static_cast<double>(r.z.imag()),
                       polys[i].poly.degree(), polys[i].id, set});
      }
    }
  }
  return out;
}

void write_cloud_csv(std::ostream& out, const std::vector<RootPoint>& cloud) {
  out << "re,im,degree,poly_id,set\n";
  for (const auto& p : cloud) {
    out << fmt9(p.re) << ',' << fmt9(p.im) << ',' << p.degree << ',' << p.poly_id << ','
        << to_string(p.set) << '\n';
  }
}

}  // namespace core_entropy
