#include "znp/quotient_diameter.hpp"

#include <limits>
#include <optional>

namespace znp {

namespace {

// a + bs * s + bt * t
struct Affine {
  Rational a, bs, bt;
  Rational at(const Rational& s, const Rational& t) const { return a + bs * s + bt * t; }
};

// alpha * s + beta * t = gamma (as a line) or <= gamma (as a half-plane).
struct Line {
  Rational alpha, beta, gamma;
};

std::optional<std::pair<Rational, Rational>> intersect(const Line& p, const Line& q) {
  const Rational det = p.alpha * q.beta - p.beta * q.alpha;
  if (det == 0) return std::nullopt;
  return std::make_pair((p.gamma * q.beta - p.beta * q.gamma) / det, (p.alpha * q.gamma - p.gamma * q.alpha) / det);
}

// Max over the polygon {halfplanes} of min_i f_i. The optimum of this
// concave piecewise-affine function sits at a vertex of the arrangement
// formed by the polygon sides and the pairwise tie lines f_i = f_j.
Rational max_of_min(const std::vector<Affine>& fs, const std::vector<Line>& halfplanes) {
  std::vector<Line> lines = halfplanes;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      Line l{fs[i].bs - fs[j].bs, fs[i].bt - fs[j].bt, fs[j].a - fs[i].a};
      if (l.alpha != 0 || l.beta != 0) lines.push_back(l);
    }
  }
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto pt = intersect(lines[i], lines[j]);
      if (!pt) continue;
      const auto& [s, t] = *pt;
      bool inside = true;
      for (const auto& h : halfplanes) {
        if (h.alpha * s + h.beta * t > h.gamma) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      Rational v = fs.front().at(s, t);
      for (const auto& f : fs) v = std::min(v, f.at(s, t));
      if (!best || *best < v) best = v;
    }
  }
  return best.value_or(Rational(0));
}

}  // namespace

std::vector<std::vector<std::int64_t>> quotient_vertex_distances(const QuotientGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (const Dart& dart : g.darts(v)) d[v][dart.to] = std::min(d[v][dart.to], dart.scaled_length);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

Rational quotient_diameter(const QuotientGraph& g) {
  require_valid(g);
  const auto dist = quotient_vertex_distances(g);
  const auto& edges = g.edges();
  auto len = [&](const Edge& e) { return Rational(e.length * g.length_scale()); };
  auto dv = [&](std::size_t a, std::size_t b) { return Rational(Integer(static_cast<long>(dist[a][b]))); };

  const std::vector<Line> square = {{-1, 0, 0}, {1, 0, 1}, {0, -1, 0}, {0, 1, 1}};
  Rational best(0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const Rational le = len(e), lf = len(f);
      // p at parameter s on e (distance s*le from e.tail), q at t on f.
      std::vector<Affine> routes = {
          {dv(e.tail, f.tail), le, lf},
          {dv(e.tail, f.head) + lf, le, -lf},
          {dv(e.head, f.tail) + le, -le, lf},
          {dv(e.head, f.head) + le + lf, -le, -lf},
      };
      if (i != j) {
        best = std::max(best, max_of_min(routes, square));
        continue;
      }
      // Same edge: the direct route |s - t| * le splits the square in two.
      auto upper = routes;
      upper.push_back({0, le, -le});
      auto lower = routes;
      lower.push_back({0, -le, le});
      auto tri_upper = square;
      tri_upper.push_back({-1, 1, 0});  // t <= s
      auto tri_lower = square;
      tri_lower.push_back({1, -1, 0});  // s <= t
      best = std::max(best, max_of_min(upper, tri_upper));
      best = std::max(best, max_of_min(lower, tri_lower));
    }
  }
  return best / g.length_scale();
}

}  // namespace znp
