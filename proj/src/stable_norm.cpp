#include "znp/stable_norm.hpp"

#include "znp/errors.hpp"

namespace znp {

std::vector<SimpleCycle> simple_cycles(const QuotientGraph& g, std::size_t cap) {
  require_valid(g);
  std::vector<SimpleCycle> out;
  const std::size_t nv = g.vertex_count();
  std::vector<bool> on_path(nv, false);
  std::vector<bool> edge_used(g.edges().size(), false);

  for (std::size_t s = 0; s < nv; ++s) {
    // Depth-first over simple paths from s through vertices > s.
    LatticeVector volt(g.rank());
    std::int64_t len = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t v) {
      for (const Dart& d : g.darts(v)) {
        if (edge_used[d.edge]) continue;
        if (d.to == s) {
          out.push_back({volt + d.voltage, g.unscale(len + d.scaled_length)});
          if (out.size() > cap) throw BudgetExceeded("simple_cycles: more than " + std::to_string(cap) + " cycles");
          continue;
        }
        if (d.to < s || on_path[d.to]) continue;
        on_path[d.to] = true;
        edge_used[d.edge] = true;
        volt += d.voltage;
        len += d.scaled_length;
        extend(d.to);
        len -= d.scaled_length;
        volt -= d.voltage;
        edge_used[d.edge] = false;
        on_path[d.to] = false;
      }
    };
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  return out;
}

StableBall stable_unit_ball(const QuotientGraph& g, std::size_t cap) {
  std::vector<Point> pts;
  for (const auto& c : simple_cycles(g, cap)) {
    if (c.voltage.is_zero()) continue;
    pts.push_back(scale(to_point(c.voltage), 1 / c.length));
  }
  return StableBall::hull(g.rank(), std::move(pts));
}

Rational stable_norm_empirical(const QuotientGraph& g, const LatticeVector& gamma, std::int64_t k,
                               std::size_t node_budget) {
  if (k <= 0) throw PreconditionError("stable_norm_empirical: k must be positive");
  return orbit_distance(g, k * gamma, node_budget) / Rational(static_cast<long>(k));
}

}  // namespace znp
