#pragma once

#include <vector>

#include "znp/cover_search.hpp"
#include "znp/stable_ball.hpp"

namespace znp {

inline constexpr std::size_t kDefaultCycleCap = 200'000;

struct SimpleCycle {
  LatticeVector voltage;
  Rational length;
};

/// Every simple cycle of the underlying multigraph (loops and parallel-edge
/// digons included), once per orientation, in DFS order from the smallest
/// vertex. Throws BudgetExceeded past `cap` cycles.
std::vector<SimpleCycle> simple_cycles(const QuotientGraph& g, std::size_t cap = kDefaultCycleCap);

/// conv{voltage(c) / length(c)} over the simple cycles.
StableBall stable_unit_ball(const QuotientGraph& g, std::size_t cap = kDefaultCycleCap);

/// orbit_distance(k gamma) / k.
Rational stable_norm_empirical(const QuotientGraph& g, const LatticeVector& gamma, std::int64_t k,
                               std::size_t node_budget = kDefaultNodeBudget);

}  // namespace znp
