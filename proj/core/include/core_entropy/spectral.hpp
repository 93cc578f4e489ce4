#pragma once

// Spectral radius of sparse nonnegative integer matrices.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core_entropy/polynomial.hpp"

namespace core_entropy {

// Square matrix stored by columns; column j lists (row, weight) entries with
// weight > 0. Acting on column vectors, (M v)_i = sum_j M_ij v_j.
class NonnegativeMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t weight;
  };

  NonnegativeMatrix() = default;
  explicit NonnegativeMatrix(std::size_t dim) : cols_(dim) {}
  // Dense row-major input; throws DomainError on negative entries or a
  // non-square shape.
  static NonnegativeMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t dim() const { return cols_.size(); }
  // Adds weight to entry (row, col).
  void add(std::size_t row, std::size_t col, std::uint32_t weight = 1);
  const std::vector<Entry>& column(std::size_t j) const { return cols_[j]; }
  std::uint64_t at(std::size_t row, std::size_t col) const;
  std::uint64_t column_sum(std::size_t j) const;
  std::size_t nonzeros() const;

  // Principal submatrix on the given (sorted or not) index list.
  NonnegativeMatrix submatrix(const std::vector<std::size_t>& indices) const;
  NonnegativeMatrix permuted(const std::vector<std::size_t>& perm) const;

  void multiply(const std::vector<long double>& v, std::vector<long double>& out) const;

 private:
  std::vector<std::vector<Entry>> cols_;
};

enum class GrowthMethod { RatioIteration, RootBound, CharPoly };
std::string to_string(GrowthMethod m);

struct GrowthResult {
  double lambda = 0.0;
  GrowthMethod method = GrowthMethod::RatioIteration;
  std::size_t iterations = 0;
  double residual = 0.0;
};

struct GrowthOptions {
  double tol = 1e-10;
  std::size_t max_iterations = 100000;
  // Blocks up to this dimension are certified through the characteristic
  // polynomial.
  std::size_t certify_dim = 64;
};

// Strongly connected components of the digraph j -> i for M_ij > 0, in
// reverse topological order (Tarjan). Vertices within a component are sorted.
std::vector<std::vector<std::size_t>> strongly_connected_components(const NonnegativeMatrix& m);

// gcd of cycle lengths inside the component; 0 for a single vertex without a
// loop.
std::size_t cyclic_index(const NonnegativeMatrix& m, const std::vector<std::size_t>& component);

struct BlockGrowth {
  std::vector<std::size_t> vertices;
  std::size_t cyclic_index = 0;
  GrowthResult growth;
};

// Growth of every nontrivial strongly connected block.
std::vector<BlockGrowth> block_growths(const NonnegativeMatrix& m, const GrowthOptions& opt = {});

// The block realizing the spectral radius (the largest one on ties, then the
// first). Throws DomainError if the matrix is nilpotent or empty.
BlockGrowth dominant_block(const NonnegativeMatrix& m, const GrowthOptions& opt = {});

// Spectral radius. Throws ConvergenceError with the best bracket when an
// uncertified block does not converge within the iteration cap.
GrowthResult growth_rate(const NonnegativeMatrix& m, const GrowthOptions& opt = {});
GrowthResult growth_rate(const std::vector<std::vector<long long>>& rows,
                         const GrowthOptions& opt = {});

// Exact det(xI - M). Throws BudgetError above dimension 64.
IntPolynomial char_poly(const NonnegativeMatrix& m);

// Largest real root of p in [lo, hi]. Roots of even multiplicity are found
// through the square-free part. Throws ConvergenceError if there is none.
double largest_real_root(const IntPolynomial& p, double lo, double hi, double tol = 1e-12);

}  // namespace core_entropy
