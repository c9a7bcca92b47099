#include "znp/quotient_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "znp/errors.hpp"

namespace znp {

QuotientGraph::QuotientGraph(std::size_t rank, std::vector<std::string> vertex_names, std::vector<Edge> edges,
                             std::size_t base)
    : rank_(rank), names_(std::move(vertex_names)), edges_(std::move(edges)), base_(base) {
  if (rank_ == 0) throw InvalidModel("rank must be positive");
  if (names_.empty()) throw InvalidModel("graph has no vertices");
  if (base_ >= names_.size()) throw InvalidModel("base vertex out of range");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidModel("duplicate vertex id");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail >= names_.size() || e.head >= names_.size()) {
      throw InvalidModel("edge " + std::to_string(i) + " references an unknown vertex");
    }
    if (e.voltage.rank() != rank_) {
      throw InvalidModel("edge " + std::to_string(i) + " voltage has dimension " +
                         std::to_string(e.voltage.rank()) + ", expected " + std::to_string(rank_));
    }
  }
  for (const Edge& e : edges_) {
    Integer den = e.length.get_den();
    mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), den.get_mpz_t());
  }
  adjacency_.resize(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    Rational scaled = e.length * scale_;
    const std::int64_t len = to_int64(scaled.get_num());
    adjacency_[e.tail].push_back({e.head, i, true, len, e.voltage});
    adjacency_[e.head].push_back({e.tail, i, false, len, -e.voltage});
  }
}

std::size_t QuotientGraph::vertex_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidModel("unknown vertex id '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

std::int64_t QuotientGraph::scaled_strict_bound(const Rational& r) const {
  return to_int64(Integer(ceil(Rational(r * scale_)) - 1));
}

std::int64_t QuotientGraph::scaled_bound(const Rational& r) const { return to_int64(floor(Rational(r * scale_))); }

Rational QuotientGraph::max_edge_length() const {
  Rational m(0);
  for (const auto& e : edges_) m = std::max(m, e.length);
  return m;
}

Rational QuotientGraph::min_edge_length() const {
  if (edges_.empty()) return 0;
  Rational m = edges_.front().length;
  for (const auto& e : edges_) m = std::min(m, e.length);
  return m;
}

QuotientGraph QuotientGraph::scaled(const Rational& factor) const {
  if (factor <= 0) throw PreconditionError("scale factor must be positive");
  auto edges = edges_;
  for (auto& e : edges) e.length *= factor;
  return QuotientGraph(rank_, names_, std::move(edges), base_);
}

QuotientGraph QuotientGraph::subdivided(std::size_t parts) const {
  if (parts == 0) throw PreconditionError("subdivision needs at least one part");
  auto names = names_;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const Rational piece = e.length / Rational(static_cast<long>(parts));
    std::size_t prev = e.tail;
    for (std::size_t k = 0; k < parts; ++k) {
      std::size_t next = e.head;
      if (k + 1 < parts) {
        names.push_back(names_[e.tail] + "~e" + std::to_string(i) + "." + std::to_string(k + 1));
        next = names.size() - 1;
      }
      edges.push_back({prev, next, piece, k == 0 ? e.voltage : LatticeVector(rank_)});
      prev = next;
    }
  }
  return QuotientGraph(rank_, std::move(names), std::move(edges), base_);
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& input) {
  auto rows = input;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

// BFS spanning forest; potential[v] is the voltage of the tree path base -> v.
struct SpanningTree {
  std::vector<bool> reached;
  std::vector<LatticeVector> potential;
  std::vector<bool> tree_edge;
};

SpanningTree spanning_tree(const QuotientGraph& g) {
  SpanningTree t;
  t.reached.assign(g.vertex_count(), false);
  t.potential.assign(g.vertex_count(), LatticeVector(g.rank()));
  t.tree_edge.assign(g.edges().size(), false);
  std::queue<std::size_t> q;
  q.push(g.base());
  t.reached[g.base()] = true;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    for (const Dart& d : g.darts(v)) {
      if (t.reached[d.to]) continue;
      t.reached[d.to] = true;
      t.tree_edge[d.edge] = true;
      t.potential[d.to] = t.potential[v] + d.voltage;
      q.push(d.to);
    }
  }
  return t;
}

}  // namespace

namespace {

std::vector<LatticeVector> cycle_voltages(const QuotientGraph& g) {
  const SpanningTree t = spanning_tree(g);
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (t.tree_edge[i]) continue;
    const Edge& e = g.edges()[i];
    if (!t.reached[e.tail]) continue;
    out.push_back(t.potential[e.tail] + e.voltage - t.potential[e.head]);
  }
  return out;
}

}  // namespace

Integer cycle_voltage_index(const QuotientGraph& g) {
  // Integer row echelon by repeated Euclidean steps; the product of the
  // pivots is the index of the generated sublattice.
  std::vector<std::vector<Integer>> rows;
  for (const auto& c : cycle_voltages(g)) {
    std::vector<Integer> row(g.rank());
    for (std::size_t k = 0; k < g.rank(); ++k) row[k] = Integer(static_cast<long>(c[k]));
    rows.push_back(std::move(row));
  }
  Integer index(1);
  std::size_t top = 0;
  for (std::size_t c = 0; c < g.rank(); ++c) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (pivot == rows.size() || abs(rows[r][c]) < abs(rows[pivot][c]))) pivot = r;
      if (pivot == rows.size()) return 0;
      std::swap(rows[pivot], rows[top]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const Integer f = rows[r][c] / rows[top][c];
        for (std::size_t k = c; k < g.rank(); ++k) rows[r][k] -= f * rows[top][k];
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    index *= abs(rows[top][c]);
    ++top;
  }
  return index;
}

std::size_t cycle_voltage_rank(const QuotientGraph& g) {
  std::vector<std::vector<Rational>> rows;
  for (const LatticeVector& cyc : cycle_voltages(g)) {
    std::vector<Rational> row(g.rank());
    for (std::size_t k = 0; k < g.rank(); ++k) row[k] = Rational(static_cast<long>(cyc[k]));
    rows.push_back(std::move(row));
  }
  return rational_rank(rows);
}

std::vector<std::string> validate(const QuotientGraph& g) {
  std::vector<std::string> issues;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (g.edges()[i].length <= 0) {
      issues.push_back("nonpositive length on edge " + std::to_string(i));
    }
  }
  const SpanningTree t = spanning_tree(g);
  const auto unreached = std::count(t.reached.begin(), t.reached.end(), false);
  if (unreached > 0) {
    issues.push_back("disconnected: " + std::to_string(unreached) + " vertices unreachable from base");
  }
  const std::size_t rank = cycle_voltage_rank(g);
  if (rank < g.rank()) {
    issues.push_back("voltage rank " + std::to_string(rank) + " < " + std::to_string(g.rank()));
  } else if (const Integer index = cycle_voltage_index(g); index != 1) {
    issues.push_back("voltage lattice has index " + index.get_str() + " in Z^" + std::to_string(g.rank()) +
                     " (cover is disconnected)");
  }
  return issues;
}

void require_valid(const QuotientGraph& g) {
  const auto issues = validate(g);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid quotient graph:";
  for (const auto& s : issues) os << ' ' << s << ';';
  throw InvalidModel(os.str());
}

}  // namespace znp
