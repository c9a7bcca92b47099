#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "znp/lattice_vector.hpp"
#include "znp/rational.hpp"

namespace znp {

/// One stored orientation of an edge of the quotient graph. Traversing it
/// backwards negates the voltage and keeps the length.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational length;
  LatticeVector voltage;
};

/// A directed traversal of an edge, as seen from its start vertex. Lengths
/// are pre-scaled to integers by the graph's common denominator.
struct Dart {
  std::size_t to = 0;
  std::size_t edge = 0;
  bool forward = true;
  std::int64_t scaled_length = 0;
  LatticeVector voltage;
};

/// Finite graph with Z^n voltages on its edges. The derived graph (the abelian
/// cover) is the Z^n-periodic metric graph every metric query works on; its
/// vertices are pairs (vertex, sheet).
class QuotientGraph {
 public:
  QuotientGraph(std::size_t rank, std::vector<std::string> vertex_names, std::vector<Edge> edges,
                std::size_t base = 0);

  std::size_t rank() const { return rank_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t base() const { return base_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_index(const std::string& name) const;

  const std::vector<Dart>& darts(std::size_t vertex) const { return adjacency_[vertex]; }

  /// All lengths times this integer are integers; distances are computed in
  /// these units and divided back at the end.
  const Integer& length_scale() const { return scale_; }
  Rational unscale(std::int64_t scaled) const { return ratio(Integer(static_cast<long>(scaled)), scale_); }
  /// Largest integer strictly below r * scale, i.e. the scaled bound for "< r".
  std::int64_t scaled_strict_bound(const Rational& r) const;
  /// Largest integer at most r * scale.
  std::int64_t scaled_bound(const Rational& r) const;

  Rational max_edge_length() const;
  Rational min_edge_length() const;

  /// Same graph with every length multiplied by `factor` (> 0).
  QuotientGraph scaled(const Rational& factor) const;
  /// Every edge split into `parts` equal pieces; voltage carried by the first.
  QuotientGraph subdivided(std::size_t parts) const;

 private:
  std::size_t rank_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::size_t base_;
  Integer scale_{1};
  std::vector<std::vector<Dart>> adjacency_;
};

/// Structural and metric invariant violations; empty means valid.
std::vector<std::string> validate(const QuotientGraph& g);

/// Throws InvalidModel listing every violation when `g` is not valid.
void require_valid(const QuotientGraph& g);

/// Rank over Q of the voltages of a cycle basis (spanning-tree fundamental
/// cycles).
std::size_t cycle_voltage_rank(const QuotientGraph& g);

/// Index in Z^n of the lattice generated by the cycle voltages; 0 when the
/// rank is deficient. The cover is connected exactly when this is 1.
Integer cycle_voltage_index(const QuotientGraph& g);

/// Rank over Q of a list of integer vectors.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace znp
