#include "core_entropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "core_entropy/errors.hpp"
#include "core_entropy/parallel.hpp"
#include "core_entropy/symbolic.hpp"
#include "core_entropy/transition.hpp"

namespace core_entropy {

namespace {

constexpr std::size_t kMaxGraphRows = std::size_t{1} << 20;

std::string fmt9(double v) {
  char buf[64];
  if (v == 0) v = 0.0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

EntropyReport core_entropy(const Angle& theta, const GrowthOptions& opt) {
  EntropyReport r;
  r.theta = theta;
  r.orbit = orbit_structure(theta);
  if (theta.is_zero()) return r;  // main cardioid root

  const PairMatrix pm = build_pair_matrix(theta);
  const GrowthResult g = growth_rate(pm.matrix, opt);
  r.lambda = g.lambda;
  r.matrix_dim = pm.dim();
  r.method = g.method;
  r.iterations = g.iterations;
  r.residual = g.residual;
  r.dimension = std::log2(r.lambda);
  r.entropy = r.dimension * std::log(2.0);
  return r;
}

EntropyReport EntropyEngine::compute(const Angle& theta) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(theta); it != cache_.end()) return it->second;
  }
  EntropyReport r = core_entropy(theta, opt_);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(theta, r);
  return r;
}

std::vector<EntropyReport> EntropyEngine::compute_all(const std::vector<Angle>& thetas) {
  std::vector<EntropyReport> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) { out[i] = compute(thetas[i]); }, 16);
  return out;
}

std::size_t EntropyEngine::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

void EntropyEngine::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.clear();
}

std::vector<Angle> graph_grid(const Angle& lo, const Angle& hi, std::size_t depth) {
  if (!(lo < hi)) throw DomainError("graph range requires lo < hi");
  if (depth > kMaxGraphDepth)
    throw BudgetError("graph depth exceeds the cap of " + std::to_string(kMaxGraphDepth));

  const BigInt scale = BigInt(1) << (depth + 1);
  // first grid index >= lo, last grid index <= hi
  BigInt first = (lo.numerator() * scale + lo.denominator() - 1) / lo.denominator();
  BigInt last = (hi.numerator() * scale) / hi.denominator();
  const BigInt count = last >= first ? BigInt(last - first + 1) : BigInt(0);
  if (count + 2 > kMaxGraphRows) throw BudgetError("graph range holds too many sample angles");

  std::vector<Angle> out;
  out.reserve(static_cast<std::size_t>(count) + 2);
  out.push_back(lo);
  for (BigInt k = first; k <= last; ++k) out.emplace_back(k, scale);
  out.push_back(hi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EntropyReport> graph_samples(const Angle& lo, const Angle& hi, std::size_t depth,
                                         EntropyEngine* engine) {
  const auto grid = graph_grid(lo, hi, depth);
  if (engine) return engine->compute_all(grid);
  EntropyEngine local;
  return local.compute_all(grid);
}

void write_graph_csv(std::ostream& out, const std::vector<EntropyReport>& rows) {
  out << "theta_num,theta_den,preperiod,period,matrix_dim,lambda,dimension,iterations\n";
  for (const auto& r : rows) {
    out << r.theta.numerator().str() << ',' << r.theta.denominator().str() << ','
        << r.orbit.preperiod << ',' << r.orbit.period << ',' << r.matrix_dim << ','
        << fmt9(r.lambda) << ',' << fmt9(r.dimension) << ',' << r.iterations << '\n';
  }
}

double dimension_estimate_real(const Angle& theta, std::size_t depth) {
  if (depth < 1) throw DomainError("depth must be at least 1");
  const std::size_t half = depth / 2;
  const auto full = static_cast<double>(real_tree_survivors(theta, depth));
  const double part = half == 0 ? 1.0 : static_cast<double>(real_tree_survivors(theta, half));
  return std::log2(full / part) / static_cast<double>(depth - half);
}

}  // namespace core_entropy
