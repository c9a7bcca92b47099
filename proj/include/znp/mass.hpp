#pragma once

#include <map>
#include <optional>

#include "znp/cover_search.hpp"

namespace znp {

/// Homological mass of a class and the least number of connected components
/// (closed walks) among the mass-minimizing representatives.
struct MassEntry {
  Rational mass;
  std::int64_t parts = 0;

  friend bool operator==(const MassEntry& a, const MassEntry& b) { return a.mass == b.mass && a.parts == b.parts; }
};

/// Single class. Decomposes gamma into closed-walk classes delta with
/// L(delta) <= d(gamma) and runs a lexicographic (mass, parts) Dijkstra over
/// lattice points.
MassEntry mass(const QuotientGraph& g, const LatticeVector& gamma, std::size_t node_budget = kDefaultNodeBudget);

/// Masses of every class with mass < bound, from one search over states
/// "between walks at x" and "inside a walk started at u, now at v, with
/// partial class x". Starting a walk costs one part; it must return to u.
class MassTable {
 public:
  MassTable(const QuotientGraph& g, const Rational& strict_bound, std::size_t node_budget = kDefaultNodeBudget);

  const Rational& strict_bound() const { return bound_; }
  /// Empty when mass(gamma) >= strict_bound.
  std::optional<MassEntry> lookup(const LatticeVector& gamma) const;
  const std::map<LatticeVector, MassEntry>& entries() const { return entries_; }

 private:
  Rational bound_;
  std::map<LatticeVector, MassEntry> entries_;
};

/// v(k) = #{gamma : k Delta <= mass(gamma) < (k+1) Delta} for k = 0..kmax.
/// Throws PreconditionError when the table does not reach (kmax+1) Delta.
std::vector<std::int64_t> annuli_counts(const MassTable& table, const Rational& delta, std::int64_t kmax);
std::vector<std::int64_t> annuli_counts(const QuotientGraph& g, const Rational& delta, std::int64_t kmax,
                                        std::size_t node_budget = kDefaultNodeBudget);

}  // namespace znp
