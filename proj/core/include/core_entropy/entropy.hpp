#pragma once

#include <cstddef>
#include <mutex>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "core_entropy/angle.hpp"
#include "core_entropy/spectral.hpp"

namespace core_entropy {

struct EntropyReport {
  Angle theta;
  double lambda = 1.0;
  double entropy = 0.0;    // log lambda, nats
  double dimension = 0.0;  // log2 lambda
  OrbitStructure orbit;
  std::size_t matrix_dim = 0;
  GrowthMethod method = GrowthMethod::RootBound;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// lambda from the pair matrix of theta; theta = 0 gives lambda = 1.
EntropyReport core_entropy(const Angle& theta, const GrowthOptions& opt = {});

// Thread-safe memo of core_entropy keyed by the reduced angle.
class EntropyEngine {
 public:
  explicit EntropyEngine(GrowthOptions opt = {}) : opt_(opt) {}

  EntropyReport compute(const Angle& theta);
  // Results in input order regardless of scheduling.
  std::vector<EntropyReport> compute_all(const std::vector<Angle>& thetas);

  std::size_t cache_size() const;
  void clear();

 private:
  GrowthOptions opt_;
  mutable std::mutex mutex_;
  std::unordered_map<Angle, EntropyReport, AngleHash> cache_;
};

inline constexpr std::size_t kMaxGraphDepth = 24;

// Angles on the grid of spacing 2^-(depth+1) inside [lo, hi], plus the
// endpoints, sorted and without duplicates.
std::vector<Angle> graph_grid(const Angle& lo, const Angle& hi, std::size_t depth);

// One report per angle of graph_grid. Throws DomainError unless lo < hi and
// BudgetError if depth exceeds kMaxGraphDepth.
std::vector<EntropyReport> graph_samples(const Angle& lo, const Angle& hi, std::size_t depth,
                                         EntropyEngine* engine = nullptr);

// theta_num,theta_den,preperiod,period,matrix_dim,lambda,dimension,iterations
void write_graph_csv(std::ostream& out, const std::vector<EntropyReport>& rows);

// Matrix-free estimate of the dimension of a real-admissible theta <= 1/2
// from survivor counts at depths d and floor(d/2):
//   log2(S(d) / S(d/2)) / (d - d/2).
// The two-depth slope cancels the constant prefactor of S(d) ~ C lambda^d.
double dimension_estimate_real(const Angle& theta, std::size_t depth);

}  // namespace core_entropy
