#pragma once

#include <cstdint>

#include "znp/quotient_graph.hpp"

namespace znp {

struct RandomCaps {
  std::size_t rank = 2;
  std::size_t max_vertices = 4;
  std::size_t max_edges = 8;
  std::int64_t max_numerator = 9;    // lengths p/q with 1 <= p <= this
  std::int64_t max_denominator = 4;  // and 1 <= q <= this
  std::size_t max_attempts = 1000;
};

struct RandomDraw {
  QuotientGraph graph;
  /// Invalid draws discarded before this one.
  std::size_t discarded = 0;
};

/// A valid random voltage graph, deterministic in `seed` on every platform:
/// a random spanning tree plus extra edges (loops allowed), voltages in
/// {-1, 0, 1}^n. Throws PreconditionError for caps outside n <= 3, <= 6
/// vertices, <= 12 edges, and BudgetExceeded after max_attempts invalid draws.
RandomDraw random_instance(std::uint64_t seed, const RandomCaps& caps = {});

}  // namespace znp
