#include "core_entropy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include <Eigen/SparseLU>

#include "core_entropy/errors.hpp"

namespace core_entropy {

NonnegativeMatrix NonnegativeMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  NonnegativeMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("matrix must be square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const long long v = rows[i][j];
      if (v < 0) throw DomainError("matrix entries must be nonnegative");
      if (v > 0) m.add(i, j, static_cast<std::uint32_t>(v));
    }
  }
  return m;
}

void NonnegativeMatrix::add(std::size_t row, std::size_t col, std::uint32_t weight) {
  if (weight == 0) return;
  auto& c = cols_[col];
  for (auto& e : c) {
    if (e.row == row) {
      e.weight += weight;
      return;
    }
  }
  c.push_back({static_cast<std::uint32_t>(row), weight});
}

std::uint64_t NonnegativeMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& e : cols_[col]) {
    if (e.row == row) return e.weight;
  }
  return 0;
}

std::uint64_t NonnegativeMatrix::column_sum(std::size_t j) const {
  std::uint64_t s = 0;
  for (const auto& e : cols_[j]) s += e.weight;
  return s;
}

std::size_t NonnegativeMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

NonnegativeMatrix NonnegativeMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> local(dim(), std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < indices.size(); ++k) local[indices[k]] = k;
  NonnegativeMatrix out(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    for (const auto& e : cols_[indices[k]]) {
      if (local[e.row] != std::numeric_limits<std::size_t>::max()) out.add(local[e.row], k, e.weight);
    }
  }
  return out;
}

NonnegativeMatrix NonnegativeMatrix::permuted(const std::vector<std::size_t>& perm) const {
  NonnegativeMatrix out(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    for (const auto& e : cols_[j]) out.add(perm[e.row], perm[j], e.weight);
  }
  return out;
}

void NonnegativeMatrix::multiply(const std::vector<long double>& v,
                                 std::vector<long double>& out) const {
  out.assign(dim(), 0.0L);
  for (std::size_t j = 0; j < dim(); ++j) {
    const long double x = v[j];
    if (x == 0) continue;
    for (const auto& e : cols_[j]) out[e.row] += x * e.weight;
  }
}

std::string to_string(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::RatioIteration:
      return "ratio-iteration";
    case GrowthMethod::RootBound:
      return "root-bound";
    case GrowthMethod::CharPoly:
      return "char-poly";
  }
  return "unknown";
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const NonnegativeMatrix& m) {
  const std::size_t n = m.dim();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;

  // explicit DFS stack of (vertex, next edge position)
  std::vector<std::pair<std::size_t, std::size_t>> dfs;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    dfs.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!dfs.empty()) {
      auto& [v, pos] = dfs.back();
      const auto& edges = m.column(v);
      if (pos < edges.size()) {
        const std::size_t w = edges[pos++].row;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          dfs.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      dfs.pop_back();
      if (!dfs.empty()) low[dfs.back().first] = std::min(low[dfs.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

std::size_t cyclic_index(const NonnegativeMatrix& m, const std::vector<std::size_t>& component) {
  if (component.empty()) return 0;
  constexpr long long kUnset = -1;
  std::vector<long long> level(m.dim(), kUnset);
  std::vector<bool> inside(m.dim(), false);
  for (auto v : component) inside[v] = true;

  std::deque<std::size_t> queue{component.front()};
  level[component.front()] = 0;
  std::size_t g = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& e : m.column(v)) {
      if (!inside[e.row]) continue;
      if (level[e.row] == kUnset) {
        level[e.row] = level[v] + 1;
        queue.push_back(e.row);
      } else {
        const long long diff = level[v] + 1 - level[e.row];
        g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  return g;
}

namespace {

struct Bracket {
  long double lo;
  long double hi;
};

// Collatz-Wielandt bounds min/max (Bv)_i / v_i for positive v.
Bracket collatz_wielandt(const std::vector<long double>& v, const std::vector<long double>& bv) {
  Bracket b{std::numeric_limits<long double>::max(), 0.0L};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) continue;
    const long double r = bv[i] / v[i];
    b.lo = std::min(b.lo, r);
    b.hi = std::max(b.hi, r);
  }
  return b;
}

// Power iteration on an irreducible block with cyclic index d. Ratios are
// combined over windows whose length is a multiple of d, which removes the
// period-d oscillation of imprimitive blocks.
GrowthResult ratio_iteration(const NonnegativeMatrix& b, std::size_t d, std::size_t max_iter,
                             double tol, bool* converged, Bracket* bracket) {
  const std::size_t n = b.dim();
  const std::size_t window = d * ((8 + d - 1) / d);
  std::vector<long double> v(n, 1.0L / static_cast<long double>(n)), w;
  std::deque<long double> logs;
  std::deque<long double> estimates;
  long double log_sum = 0;

  GrowthResult r;
  r.method = GrowthMethod::RatioIteration;
  *converged = false;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    b.multiply(v, w);
    long double norm = 0;
    for (auto x : w) norm += x;
    if (norm <= 0) {
      r.lambda = 0;
      r.iterations = it;
      *converged = true;
      return r;
    }
    const long double lr = std::log(norm);
    logs.push_back(lr);
    log_sum += lr;
    if (logs.size() > window) {
      log_sum -= logs.front();
      logs.pop_front();
    }
    *bracket = collatz_wielandt(v, w);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;

    r.iterations = it;
    if (logs.size() < window) continue;
    const long double est = std::exp(log_sum / static_cast<long double>(window));
    estimates.push_back(est);
    if (estimates.size() > window) estimates.pop_front();
    r.lambda = static_cast<double>(est);
    if (estimates.size() == window) {
      const auto [mn, mx] = std::minmax_element(estimates.begin(), estimates.end());
      const long double spread = (*mx - *mn) / est;
      r.residual = static_cast<double>(spread);
      if (spread < tol) {
        *converged = true;
        return r;
      }
    }
  }
  return r;
}

// Inverse iteration with a shift mu above the spectral radius. There
// (mu - B)^{-1} = sum B^k / mu^{k+1} is nonnegative, so iterates stay positive
// and each one gives a valid Collatz-Wielandt bracket. Handles blocks whose
// subdominant eigenvalues sit almost on the Perron circle, where plain power
// iteration stalls. The shift is pulled down to the upper bound every step.
bool shifted_inverse_iteration(const NonnegativeMatrix& b, std::size_t max_steps, double tol,
                               Bracket* bracket, GrowthResult* r) {
  const std::size_t n = b.dim();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(b.nonzeros() + n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : b.column(j))
      trips.emplace_back(static_cast<int>(e.row), static_cast<int>(j), -static_cast<double>(e.weight));
  Eigen::SparseMatrix<double> neg_b(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  neg_b.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseMatrix<double> id(neg_b.rows(), neg_b.cols());
  id.setIdentity();

  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  std::vector<long double> v(n), w;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const long double gap = std::max(bracket->hi - bracket->lo, 1e-12L * bracket->hi);
    const double mu = static_cast<double>(bracket->hi + gap);
    const Eigen::SparseMatrix<double> a = neg_b + mu * id;
    lu.compute(a);
    if (lu.info() != Eigen::Success) return false;
    Eigen::VectorXd y = lu.solve(x);
    if (lu.info() != Eigen::Success || !y.allFinite() || y.minCoeff() <= 0) return false;
    x = y / y.sum();
    for (std::size_t i = 0; i < n; ++i) v[i] = x[static_cast<Eigen::Index>(i)];
    b.multiply(v, w);
    const Bracket cw = collatz_wielandt(v, w);
    bracket->lo = std::max(bracket->lo, cw.lo);
    bracket->hi = std::min(bracket->hi, cw.hi);
    r->iterations += 1;
    const long double mid = (bracket->lo + bracket->hi) / 2;
    r->lambda = static_cast<double>(mid);
    r->residual = static_cast<double>((bracket->hi - bracket->lo) / mid);
    if (r->residual < tol) return true;
  }
  return false;
}

GrowthResult block_growth(const NonnegativeMatrix& b, std::size_t d, const GrowthOptions& opt) {
  const std::size_t n = b.dim();
  std::uint64_t cmin = std::numeric_limits<std::uint64_t>::max(), cmax = 0;
  for (std::size_t j = 0; j < n; ++j) {
    cmin = std::min(cmin, b.column_sum(j));
    cmax = std::max(cmax, b.column_sum(j));
  }
  GrowthResult r;
  if (cmin == cmax) {
    // all-ones is a left eigenvector
    r.lambda = static_cast<double>(cmin);
    r.method = GrowthMethod::RootBound;
    return r;
  }

  const bool certify = n <= opt.certify_dim;
  bool converged = false;
  Bracket bracket{static_cast<long double>(cmin), static_cast<long double>(cmax)};
  // Past the certification limit the power phase is kept short; a stalled
  // run hands its remaining budget to inverse iteration.
  const std::size_t cap = std::min<std::size_t>(opt.max_iterations, certify ? 5000 : 20000);
  r = ratio_iteration(b, d, cap, opt.tol, &converged, &bracket);

  if (certify) {
    const IntPolynomial p = char_poly(b);
    const double lambda = largest_real_root(p, static_cast<double>(cmin), static_cast<double>(cmax),
                                            std::min(opt.tol, 1e-13));
    r.lambda = lambda;
    r.method = GrowthMethod::CharPoly;
    r.residual = static_cast<double>(std::fabs(p.eval(static_cast<long double>(lambda))) /
                                     p.magnitude(static_cast<long double>(lambda)));
    return r;
  }
  if (!converged && opt.max_iterations > r.iterations) {
    const std::size_t steps = std::min<std::size_t>(opt.max_iterations - r.iterations, 100);
    converged = shifted_inverse_iteration(b, steps, opt.tol, &bracket, &r);
  }
  if (!converged) {
    throw ConvergenceError("ratio iteration did not converge", static_cast<double>(bracket.lo),
                           static_cast<double>(bracket.hi));
  }
  return r;
}

}  // namespace

std::vector<BlockGrowth> block_growths(const NonnegativeMatrix& m, const GrowthOptions& opt) {
  std::vector<BlockGrowth> out;
  for (auto& comp : strongly_connected_components(m)) {
    const std::size_t d = cyclic_index(m, comp);
    if (d == 0) continue;
    BlockGrowth bg;
    bg.cyclic_index = d;
    bg.growth = block_growth(m.submatrix(comp), d, opt);
    bg.vertices = std::move(comp);
    out.push_back(std::move(bg));
  }
  return out;
}

BlockGrowth dominant_block(const NonnegativeMatrix& m, const GrowthOptions& opt) {
  auto blocks = block_growths(m, opt);
  if (blocks.empty()) throw DomainError("matrix has no cycles (nilpotent or empty)");
  // Values closer than the tolerance count as ties.
  const double slack = std::max(opt.tol, 1e-12) * 10;
  std::size_t best = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const double a = blocks[i].growth.lambda;
    const double b = blocks[best].growth.lambda;
    if (a > b + slack ||
        (std::fabs(a - b) <= slack && blocks[i].vertices.size() > blocks[best].vertices.size()))
      best = i;
  }
  return blocks[best];
}

GrowthResult growth_rate(const NonnegativeMatrix& m, const GrowthOptions& opt) {
  if (!(opt.tol > 0)) throw DomainError("tolerance must be positive");
  auto blocks = block_growths(m, opt);
  if (blocks.empty()) {
    GrowthResult r;
    r.method = GrowthMethod::RootBound;
    return r;
  }
  const BlockGrowth* best = &blocks.front();
  for (const auto& b : blocks) {
    if (b.growth.lambda > best->growth.lambda) best = &b;
  }
  return best->growth;
}

GrowthResult growth_rate(const std::vector<std::vector<long long>>& rows, const GrowthOptions& opt) {
  return growth_rate(NonnegativeMatrix::from_rows(rows), opt);
}

IntPolynomial char_poly(const NonnegativeMatrix& a) {
  const std::size_t n = a.dim();
  if (n > 64) throw BudgetError("characteristic polynomial limited to dimension 64");
  if (n == 0) return IntPolynomial{1};

  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
  using Matrix = std::vector<std::vector<BigInt>>;
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] = 1;
  Matrix mk(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;
  Matrix am(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& row : am) std::fill(row.begin(), row.end(), BigInt(0));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& e : a.column(j)) {
        auto& dst = am[e.row];
        const auto& src = mk[j];
        for (std::size_t col = 0; col < n; ++col) {
          if (src[col] != 0) dst[col] += src[col] * e.weight;
        }
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long long>(k);
    std::swap(mk, am);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k];
  }
  return IntPolynomial(std::move(c));
}

double largest_real_root(const IntPolynomial& p, double lo, double hi, double tol) {
  if (p.is_zero()) throw DomainError("zero polynomial has no isolated roots");
  if (lo > hi) std::swap(lo, hi);
  const IntPolynomial q = square_free_part(p);
  if (q.degree() < 1) throw ConvergenceError("constant polynomial has no root", lo, hi);

  constexpr int kCells = 4096;
  const long double a = lo, b = hi;
  auto sign = [](long double v) { return (v > 0) - (v < 0); };
  long double x_prev = b;
  long double f_prev = q.eval(x_prev);
  if (f_prev == 0) return hi;
  for (int k = 1; k <= kCells; ++k) {
    const long double x = b - (b - a) * k / kCells;
    const long double f = q.eval(x);
    if (f == 0) return static_cast<double>(x);
    if (sign(f) == sign(f_prev)) {
      x_prev = x;
      f_prev = f;
      continue;
    }
    // root in (x, x_prev): bisect, then polish with Newton inside the bracket
    long double l = x, h = x_prev, fl = f;
    for (int it = 0; it < 200; ++it) {
      const long double mid = (l + h) / 2;
      if (mid <= l || mid >= h) break;
      if (h - l <= tol * std::max<long double>(1.0L, std::fabs(mid)) * 1e-3L) break;
      const long double fm = q.eval(mid);
      if (fm == 0) return static_cast<double>(mid);
      if (sign(fm) == sign(fl)) {
        l = mid;
        fl = fm;
      } else {
        h = mid;
      }
    }
    long double r = (l + h) / 2;
    const IntPolynomial dq = q.derivative();
    for (int it = 0; it < 4; ++it) {
      const long double d = dq.eval(r);
      if (d == 0) break;
      const long double next = r - q.eval(r) / d;
      if (next < l || next > h) break;
      r = next;
    }
    return static_cast<double>(r);
  }
  throw ConvergenceError("no real root in bracket", lo, hi);
}

}  // namespace core_entropy
