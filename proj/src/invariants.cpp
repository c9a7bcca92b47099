#include "znp/invariants.hpp"

#include "znp/errors.hpp"
#include "znp/stable_norm.hpp"

namespace znp {

SystoleResult systole(const QuotientGraph& g, std::size_t node_budget) {
  require_valid(g);
  std::optional<std::int64_t> best;
  SystoleResult out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    CoverDijkstra search(g, node_budget);
    if (best) search.set_limit(*best);
    search.add_source(v, LatticeVector(g.rank()));
    std::optional<std::int64_t> found;
    LatticeVector gamma;
    search.run([&](const CoverDijkstra::Settled& s) {
      if (found && s.distance > *found) return false;
      if (s.vertex != v || s.sheet.is_zero()) return true;
      if (!found || canonical_less(s.sheet, gamma)) gamma = s.sheet;
      found = s.distance;
      return true;
    });
    if (found && (!best || *found < *best)) {
      best = found;
      out.vertex = v;
      out.gamma = gamma;
    }
  }
  if (!best) throw std::logic_error("systole: no essential loop found");
  out.value = g.unscale(*best);
  return out;
}

Rational asymptotic_volume_exact(const QuotientGraph& g) { return ball_volume(stable_unit_ball(g)); }

Rational asymptotic_volume_empirical(const QuotientGraph& g, const Rational& R, std::size_t node_budget) {
  const auto ball = orbit_ball_scaled(g, R, node_budget);
  return Rational(static_cast<long>(ball.size())) / pow(R, static_cast<long>(g.rank()));
}

QbdDeviation qbd_deviation(const QuotientGraph& g, const StableBall& ball, const Rational& R,
                           std::size_t node_budget) {
  const auto points = orbit_ball_scaled(g, R, node_budget);
  QbdDeviation out{Rational(0), LatticeVector(g.rank()), points.size()};
  for (const auto& [gamma, d] : points) {
    const Rational dev = abs(g.unscale(d) - gauge(ball, gamma));
    if (dev > out.value || (dev == out.value && canonical_less(gamma, out.argmax))) {
      out.value = dev;
      out.argmax = gamma;
    }
  }
  return out;
}

QbdDeviation qbd_deviation(const QuotientGraph& g, const Rational& R, std::size_t node_budget) {
  return qbd_deviation(g, stable_unit_ball(g), R, node_budget);
}

}  // namespace znp
