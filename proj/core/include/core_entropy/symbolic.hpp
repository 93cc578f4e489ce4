#pragma once

// Itineraries under doubling with respect to the partition of the circle by
// the two preimages of theta, kneading sequences and real admissibility.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "core_entropy/angle.hpp"

namespace core_entropy {

// Symbols are stored as characters so words print directly.
namespace symbol {
inline constexpr char kZero = '0';
inline constexpr char kOne = '1';
inline constexpr char kStar = '*';
}  // namespace symbol

struct KneadingSequence {
  std::string preperiodic;
  std::string periodic;

  bool has_star() const { return periodic.find(symbol::kStar) != std::string::npos; }
  std::size_t length() const { return preperiodic.size() + periodic.size(); }
  // Symbol at 0-based position i of the infinite sequence.
  char at(std::size_t i) const;
  std::string prefix(std::size_t n) const;
  // "11|(0)"; an empty preperiodic part renders as "|(1*)".
  std::string render() const;

  friend bool operator==(const KneadingSequence&, const KneadingSequence&) = default;
};

// Symbols of phi, 2 phi, ..., 2^{n-1} phi. ONE marks the open half-circle
// (theta/2, (theta+1)/2) that contains theta, STAR marks its two endpoints.
std::string itinerary(const Angle& phi, const Angle& theta, std::size_t n);

// Throws DomainError for theta = 0.
KneadingSequence kneading_sequence(const Angle& theta);

// Replaces the STAR so that the period carries an even number of ONEs, e.g.
// (1*) -> (11), (10*) -> (101). Identity on STAR-free sequences.
KneadingSequence resolve_star(const KneadingSequence& nu);
// Both STAR-free resolutions, (STAR -> ZERO, STAR -> ONE).
std::pair<KneadingSequence, KneadingSequence> star_resolutions(const KneadingSequence& nu);

// Unimodal order on STAR-free words: at the first difference, ONE is the
// larger symbol iff the common prefix holds an even number of ONEs.
// Returns -1, 0 or 1 comparing the first n symbols.
int twisted_compare(const KneadingSequence& a, const KneadingSequence& b, std::size_t n);
KneadingSequence shifted(const KneadingSequence& nu, std::size_t k);

// nu >= sigma^k(nu) for every k >= 1. STAR-free input.
bool is_shift_maximal(const KneadingSequence& nu);

// STAR-free sequences: shift maximality. STAR-periodic sequences: both
// resolutions must be shift maximal.
bool is_real_admissible(const KneadingSequence& nu);

// Convenience: theta != 0 and its kneading sequence is real-admissible.
bool is_real_angle(const Angle& theta);

// Number of depth-`depth` dyadic intervals of [0,1) whose midpoint phi has
// ||2^n phi|| <= theta for n = 0..depth-1. Requires a real-admissible
// theta <= 1/2 (DomainError otherwise) and 1 <= depth <= 40 (BudgetError).
std::uint64_t real_tree_survivors(const Angle& theta, std::size_t depth);

}  // namespace core_entropy
