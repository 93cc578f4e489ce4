#include "core_entropy/transition.hpp"

#include "core_entropy/errors.hpp"
#include "core_entropy/symbolic.hpp"

namespace core_entropy {

std::size_t PairBasis::index_of(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t n = points();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::string PairBasis::label(std::size_t pair_index) const {
  const auto& [i, j] = pairs[pair_index];
  return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

std::vector<Angle> postcritical_angles(const Angle& theta) {
  if (theta.is_zero()) throw DomainError("postcritical orbit undefined for theta = 0");
  return doubling_orbit(theta);
}

bool is_separated(const Angle& phi, const Angle& psi, const Angle& theta) {
  const char a = itinerary(phi, theta, 1)[0];
  const char b = itinerary(psi, theta, 1)[0];
  if (a == symbol::kStar || b == symbol::kStar) return false;
  return a != b;
}

PairMatrix build_pair_matrix(const Angle& theta, std::size_t max_points) {
  if (theta.is_zero()) throw DomainError("pair matrix undefined for theta = 0");
  const auto orbit = orbit_structure(theta);
  if (orbit.preperiod + orbit.period > max_points)
    throw BudgetError("postcritical orbit of " + theta.to_string() + " exceeds " +
                      std::to_string(max_points) + " points");

  PairMatrix pm;
  pm.basis.orbit = orbit;
  pm.basis.postcritical = doubling_orbit(theta);
  const std::size_t n = pm.basis.points();

  std::vector<char> sides(n);
  for (std::size_t i = 0; i < n; ++i) sides[i] = itinerary(pm.basis.postcritical[i], theta, 1)[0];

  pm.basis.pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      pm.basis.pairs.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));

  pm.matrix = NonnegativeMatrix(pm.basis.pairs.size());
  const auto& basis = pm.basis;
  auto target = [&](std::size_t col, std::size_t a, std::size_t b) {
    if (a != b) pm.matrix.add(basis.index_of(a, b), col);
  };
  for (std::size_t col = 0; col < basis.pairs.size(); ++col) {
    const auto [i, j] = basis.pairs[col];
    const bool separated = sides[i] != symbol::kStar && sides[j] != symbol::kStar &&
                           sides[i] != sides[j];
    if (separated) {
      target(col, 0, basis.succ(i));
      target(col, 0, basis.succ(j));
    } else {
      target(col, basis.succ(i), basis.succ(j));
    }
  }
  return pm;
}

DominantComponent dominant_component(const PairMatrix& m, const GrowthOptions& opt) {
  const BlockGrowth b = dominant_block(m.matrix, opt);
  DominantComponent out;
  out.vertices = b.vertices;
  out.cyclic_index = b.cyclic_index;
  out.primitive = b.cyclic_index == 1;
  out.growth = b.growth;
  return out;
}

void dump(const PairMatrix& m, std::ostream& out) {
  const auto& basis = m.basis;
  out << "points";
  for (std::size_t i = 0; i < basis.points(); ++i)
    out << ' ' << (i + 1) << ':' << basis.postcritical[i].to_string();
  out << '\n';
  out << "basis " << basis.pairs.size() << '\n';
  for (std::size_t col = 0; col < m.dim(); ++col) {
    out << basis.label(col) << " ->";
    const auto& entries = m.matrix.column(col);
    if (entries.empty()) out << " 0";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      out << (k == 0 ? " " : " + ");
      if (entries[k].weight != 1) out << entries[k].weight << '*';
      out << basis.label(entries[k].row);
    }
    out << '\n';
  }
}

}  // namespace core_entropy
