#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "znp/lattice_vector.hpp"
#include "znp/quotient_graph.hpp"

namespace znp {

/// Hard cap on the number of cover nodes a single search may create.
inline constexpr std::size_t kDefaultNodeBudget = 4'000'000;

/// Lazy Dijkstra on the abelian cover of a quotient graph. Cover nodes are
/// (vertex, sheet) pairs created on first touch; distances are in the graph's
/// scaled integer units.
class CoverDijkstra {
 public:
  struct Settled {
    std::size_t vertex;
    const LatticeVector& sheet;
    std::int64_t distance;
  };

  explicit CoverDijkstra(const QuotientGraph& g, std::size_t node_budget = kDefaultNodeBudget);

  void add_source(std::size_t vertex, const LatticeVector& sheet);
  /// Nodes farther than `limit` (inclusive bound) are never created.
  void set_limit(std::int64_t limit) { limit_ = limit; }
  /// Once a tentative distance to `target` is known, nothing farther is
  /// expanded; the search stops when the target settles.
  void set_target(std::size_t vertex, const LatticeVector& sheet);

  /// Settles nodes in nondecreasing distance order, calling `visit` on each.
  /// `visit` returns false to stop. Throws BudgetExceeded past the node cap.
  void run(const std::function<bool(const Settled&)>& visit);

  std::size_t nodes_created() const { return dist_.size(); }

 private:
  std::size_t touch(std::size_t vertex, const LatticeVector& sheet, std::int64_t d);
  LatticeVector key(std::size_t vertex, const LatticeVector& sheet) const;

  const QuotientGraph& g_;
  std::size_t budget_;
  std::optional<std::int64_t> limit_;
  std::optional<LatticeVector> target_key_;
  std::optional<std::int64_t> incumbent_;
  std::unordered_map<LatticeVector, std::uint32_t, LatticeVectorHash> index_;
  std::vector<std::uint32_t> vertex_;
  std::vector<LatticeVector> sheet_;
  std::vector<std::int64_t> dist_;
  std::vector<bool> done_;
  using QueueItem = std::pair<std::int64_t, std::uint32_t>;
  std::vector<QueueItem> heap_;
};

/// Exact length of a shortest cover path from (base, 0) to (base, gamma).
Rational orbit_distance(const QuotientGraph& g, const LatticeVector& gamma,
                        std::size_t node_budget = kDefaultNodeBudget);

/// Orbit distances to several targets from one search, in input order.
std::vector<Rational> orbit_distances(const QuotientGraph& g, const std::vector<LatticeVector>& targets,
                                      std::size_t node_budget = kDefaultNodeBudget);

/// {gamma : orbit_distance(gamma) < radius} with exact distances.
std::map<LatticeVector, Rational> orbit_ball(const QuotientGraph& g, const Rational& radius,
                                             std::size_t node_budget = kDefaultNodeBudget);

/// Same set in scaled integer units, sorted by lattice vector.
std::vector<std::pair<LatticeVector, std::int64_t>> orbit_ball_scaled(const QuotientGraph& g,
                                                                      const Rational& radius,
                                                                      std::size_t node_budget = kDefaultNodeBudget);

/// For every delta with L(delta) <= limit, the scaled length L(delta) of a
/// shortest closed walk with voltage delta (minimum over start vertices).
/// Includes delta = 0 with L = 0.
std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> closed_walk_lengths(
    const QuotientGraph& g, std::int64_t scaled_limit, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace znp
