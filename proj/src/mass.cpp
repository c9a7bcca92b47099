#include "znp/mass.hpp"

#include <queue>
#include <tuple>

#include "znp/errors.hpp"

namespace znp {

namespace {

// Lexicographic (mass, parts) cost with a node id, smallest first.
using Item = std::tuple<std::int64_t, std::int64_t, std::uint32_t>;
using MinQueue = std::priority_queue<Item, std::vector<Item>, std::greater<>>;

struct LexDijkstra {
  std::unordered_map<LatticeVector, std::uint32_t, LatticeVectorHash> index;
  std::vector<LatticeVector> keys;
  std::vector<std::pair<std::int64_t, std::int64_t>> cost;
  std::vector<bool> done;
  MinQueue queue;
  std::size_t budget;

  void relax(const LatticeVector& key, std::int64_t m, std::int64_t p) {
    auto [it, inserted] = index.emplace(key, static_cast<std::uint32_t>(keys.size()));
    if (inserted) {
      if (keys.size() >= budget) throw BudgetExceeded("mass search exceeded node budget");
      keys.push_back(key);
      cost.emplace_back(m, p);
      done.push_back(false);
    } else {
      auto& c = cost[it->second];
      if (done[it->second] || std::make_pair(m, p) >= c) return;
      c = {m, p};
    }
    queue.emplace(m, p, it->second);
  }

  // Next settled node id, or nullopt when exhausted.
  std::optional<std::uint32_t> pop() {
    while (!queue.empty()) {
      auto [m, p, id] = queue.top();
      queue.pop();
      if (done[id] || cost[id] != std::make_pair(m, p)) continue;
      done[id] = true;
      return id;
    }
    return std::nullopt;
  }
};

}  // namespace

MassEntry mass(const QuotientGraph& g, const LatticeVector& gamma, std::size_t node_budget) {
  require_valid(g);
  if (gamma.rank() != g.rank()) throw PreconditionError("mass: rank mismatch");
  if (gamma.is_zero()) return {Rational(0), 0};
  const Rational upper = orbit_distance(g, gamma, node_budget);
  const std::int64_t u = g.scaled_bound(upper);
  std::vector<std::pair<LatticeVector, std::int64_t>> steps;
  for (auto& [delta, len] : closed_walk_lengths(g, u, node_budget))
    if (!delta.is_zero()) steps.emplace_back(delta, len);
  std::sort(steps.begin(), steps.end());

  LexDijkstra search{{}, {}, {}, {}, {}, node_budget};
  search.relax(LatticeVector(g.rank()), 0, 0);
  while (auto id = search.pop()) {
    const LatticeVector x = search.keys[*id];
    const auto [m, p] = search.cost[*id];
    if (x == gamma) return {g.unscale(m), p};
    for (const auto& [delta, len] : steps)
      if (m + len <= u) search.relax(x + delta, m + len, p + 1);
  }
  throw std::logic_error("mass: target unreachable within its own orbit distance");
}

MassTable::MassTable(const QuotientGraph& g, const Rational& strict_bound, std::size_t node_budget)
    : bound_(strict_bound) {
  require_valid(g);
  if (strict_bound <= 0) throw PreconditionError("MassTable: bound must be positive");
  const std::int64_t limit = g.scaled_strict_bound(strict_bound);
  const std::size_t n = g.rank();
  // Key: lattice coordinates followed by (start + 1, current), with start
  // + 1 = 0 meaning "between walks".
  auto key = [](const LatticeVector& x, std::int64_t start, std::int64_t at) {
    LatticeVector::Storage c(x.coords().begin(), x.coords().end());
    c.push_back(start);
    c.push_back(at);
    return LatticeVector(std::move(c));
  };
  LexDijkstra search{{}, {}, {}, {}, {}, node_budget};
  search.relax(key(LatticeVector(n), 0, 0), 0, 0);
  while (auto id = search.pop()) {
    const LatticeVector k = search.keys[*id];
    const auto [m, p] = search.cost[*id];
    LatticeVector::Storage xs(k.coords().begin(), k.coords().begin() + static_cast<std::ptrdiff_t>(n));
    const LatticeVector x(std::move(xs));
    const std::int64_t start = k[n], at = k[n + 1];
    if (start == 0) {
      entries_.emplace(x, MassEntry{g.unscale(m), p});
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto vi = static_cast<std::int64_t>(v);
        search.relax(key(x, vi + 1, vi), m, p + 1);
      }
      continue;
    }
    if (at + 1 == start) search.relax(key(x, 0, 0), m, p);
    for (const Dart& d : g.darts(static_cast<std::size_t>(at))) {
      if (m + d.scaled_length > limit) continue;
      search.relax(key(x + d.voltage, start, static_cast<std::int64_t>(d.to)), m + d.scaled_length, p);
    }
  }
}

std::optional<MassEntry> MassTable::lookup(const LatticeVector& gamma) const {
  auto it = entries_.find(gamma);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> annuli_counts(const MassTable& table, const Rational& delta, std::int64_t kmax) {
  if (delta <= 0) throw PreconditionError("annuli_counts: Delta must be positive");
  if (kmax < 0) throw PreconditionError("annuli_counts: kmax must be >= 0");
  if (Rational(kmax + 1) * delta > table.strict_bound())
    throw PreconditionError("annuli_counts: shell " + std::to_string(kmax) + " lies beyond the enumerated region");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(kmax + 1), 0);
  for (const auto& [gamma, e] : table.entries()) {
    const Integer k = floor(e.mass / delta);
    if (k <= kmax) ++counts[static_cast<std::size_t>(k.get_si())];
  }
  return counts;
}

std::vector<std::int64_t> annuli_counts(const QuotientGraph& g, const Rational& delta, std::int64_t kmax,
                                        std::size_t node_budget) {
  if (delta <= 0) throw PreconditionError("annuli_counts: Delta must be positive");
  if (kmax < 0) throw PreconditionError("annuli_counts: kmax must be >= 0");
  return annuli_counts(MassTable(g, Rational(kmax + 1) * delta, node_budget), delta, kmax);
}

}  // namespace znp
