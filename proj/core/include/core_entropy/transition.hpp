#pragma once

// Transition matrix on unordered pairs of postcritical angles.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "core_entropy/angle.hpp"
#include "core_entropy/spectral.hpp"

namespace core_entropy {

struct PairBasis {
  // a_j = 2^{j-1} theta for j = 1..k+p, stored 0-based.
  std::vector<Angle> postcritical;
  OrbitStructure orbit;
  // (i, j) with i < j, 0-based, in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  std::size_t points() const { return postcritical.size(); }
  // Successor index; the last point wraps to the start of the cycle.
  std::size_t succ(std::size_t j) const { return j + 1 < points() ? j + 1 : orbit.preperiod; }
  std::size_t index_of(std::size_t i, std::size_t j) const;
  // "{1,3}" with 1-based indices.
  std::string label(std::size_t pair_index) const;
};

struct PairMatrix {
  PairBasis basis;
  NonnegativeMatrix matrix;  // column = source pair, rows = target pairs

  std::size_t dim() const { return matrix.dim(); }
};

// Throws DomainError for theta = 0.
std::vector<Angle> postcritical_angles(const Angle& theta);

// True iff phi and psi lie in opposite open halves cut by theta/2 and
// (theta+1)/2; a point on the boundary is never separated.
bool is_separated(const Angle& phi, const Angle& psi, const Angle& theta);

// Throws DomainError for theta = 0 and BudgetError when the orbit has more
// than max_points points.
PairMatrix build_pair_matrix(const Angle& theta, std::size_t max_points = 2048);

struct DominantComponent {
  std::vector<std::size_t> vertices;  // pair indices
  bool primitive = false;
  std::size_t cyclic_index = 0;
  GrowthResult growth;
};

DominantComponent dominant_component(const PairMatrix& m, const GrowthOptions& opt = {});

// Basis followed by one line per column: "{1,2} -> {2,3}" or
// "{1,3} -> {1,2} + {1,3}", multiplicities as "2*{1,3}".
void dump(const PairMatrix& m, std::ostream& out);

}  // namespace core_entropy
