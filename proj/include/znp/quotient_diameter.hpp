#pragma once

#include <cstdint>
#include <vector>

#include "znp/quotient_graph.hpp"

namespace znp {

/// All-pairs vertex distances in the quotient graph (voltages ignored), in
/// scaled integer units.
std::vector<std::vector<std::int64_t>> quotient_vertex_distances(const QuotientGraph& g);

/// Exact diameter of the quotient metric graph over all points, including
/// edge interiors.
Rational quotient_diameter(const QuotientGraph& g);

}  // namespace znp
