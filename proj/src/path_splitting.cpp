#include "znp/path_splitting.hpp"

#include "znp/errors.hpp"
#include "znp/lp.hpp"

namespace znp {

namespace {

std::size_t segment_of(const Polyline& p, const Rational& t) {
  std::size_t s = 0;
  while (s + 2 < p.params.size() && p.params[s + 1] < t) ++s;
  return s;
}

Point velocity(const Polyline& p, std::size_t s) {
  return scale(p.points[s + 1] - p.points[s], 1 / (p.params[s + 1] - p.params[s]));
}

Point half_displacement(const Polyline& p) { return scale(p.points.back() - p.points.front(), Rational(1, 2)); }

}  // namespace

Point Polyline::at(const Rational& t) const {
  const std::size_t s = segment_of(*this, t);
  const Point v = velocity(*this, s);
  Point out = points[s];
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += (t - params[s]) * v[i];
  return out;
}

void require_valid(const Polyline& path) {
  if (path.params.size() < 2 || path.params.size() != path.points.size())
    throw PreconditionError("polyline needs matching params and points, at least two");
  if (path.params.front() != 0) throw PreconditionError("polyline must start at parameter 0");
  const std::size_t n = path.points.front().size();
  if (n == 0) throw PreconditionError("polyline points must have positive dimension");
  for (std::size_t i = 0; i + 1 < path.params.size(); ++i) {
    if (path.points[i + 1].size() != n) throw PreconditionError("polyline points differ in dimension");
    const Rational dt = path.params[i + 1] - path.params[i];
    if (dt <= 0) throw PreconditionError("polyline params must increase strictly");
    const Point d = path.points[i + 1] - path.points[i];
    if (dot(d, d) > dt * dt) throw PreconditionError("polyline is faster than unit speed");
  }
}

bool bp_verify(const Polyline& path, const IntervalSelection& sel, const Rational& tol) {
  require_valid(path);
  for (const auto& [a, b] : sel)
    if (a < 0 || b > path.length() || a >= b) throw PreconditionError("malformed interval selection");
  if (sel.size() > path.dimension()) return false;
  Rational measure(0);
  Point sum(path.dimension(), Rational(0));
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (i > 0 && sel[i].first < sel[i - 1].second) return false;
    measure += sel[i].second - sel[i].first;
    const Point d = path.at(sel[i].second) - path.at(sel[i].first);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += d[k];
  }
  if (measure * 2 > path.length()) return false;
  const Point target = half_displacement(path);
  for (std::size_t k = 0; k < sum.size(); ++k)
    if (abs(sum[k] - target[k]) > tol) return false;
  return true;
}

std::optional<IntervalSelection> bp_search(const Polyline& path, std::size_t budget) {
  require_valid(path);
  const std::size_t n = path.dimension();
  const std::size_t segs = path.params.size() - 1;
  const Point target = half_displacement(path);
  std::vector<Point> vel;
  for (std::size_t s = 0; s < segs; ++s) vel.push_back(velocity(path, s));
  std::size_t spent = 0;

  for (std::size_t m = 0; m <= n; ++m) {
    const std::size_t k = 2 * m;
    std::vector<std::size_t> seg(k, 0);
    while (true) {
      if (spent++ >= budget) return std::nullopt;
      LpModel lp;
      std::vector<std::size_t> u(k);
      for (std::size_t j = 0; j < k; ++j) {
        u[j] = lp.add_variable();
        lp.add_constraint({{u[j], 1}}, LpModel::Relation::ge, path.params[seg[j]]);
        lp.add_constraint({{u[j], 1}}, LpModel::Relation::le, path.params[seg[j] + 1]);
        if (j > 0) lp.add_constraint({{u[j - 1], 1}, {u[j], -1}}, LpModel::Relation::le, Rational(0));
      }
      LpModel::Terms measure;
      for (std::size_t j = 0; j < k; ++j) measure.emplace_back(u[j], j % 2 == 1 ? Rational(1) : Rational(-1));
      if (k > 0) lp.add_constraint(measure, LpModel::Relation::le, path.length() / 2);
      // c(u) = points[s] + (u - params[s]) v_s on segment s, so the sum is
      // linear in the endpoints.
      bool impossible = false;
      for (std::size_t c = 0; c < n && !impossible; ++c) {
        LpModel::Terms row;
        Rational rhs = target[c];
        for (std::size_t j = 0; j < k; ++j) {
          const Rational sign = j % 2 == 1 ? Rational(1) : Rational(-1);
          const std::size_t s = seg[j];
          if (vel[s][c] != 0) row.emplace_back(u[j], sign * vel[s][c]);
          rhs -= sign * (path.points[s][c] - path.params[s] * vel[s][c]);
        }
        if (row.empty()) {
          impossible = rhs != 0;
          continue;
        }
        lp.add_constraint(row, LpModel::Relation::eq, rhs);
      }
      if (!impossible) {
        const LpResult r = lp.feasible_point();
        if (r.status != LpStatus::infeasible) {
          IntervalSelection sel;
          for (std::size_t i = 0; i < m; ++i) {
            const Rational& a = r.x[u[2 * i]];
            const Rational& b = r.x[u[2 * i + 1]];
            if (a < b) sel.emplace_back(a, b);
          }
          return sel;
        }
      }
      // Next nondecreasing sequence over segments 0..segs-1.
      std::size_t j = k;
      while (j > 0 && seg[j - 1] == segs - 1) --j;
      if (j == 0) break;
      ++seg[j - 1];
      for (std::size_t i = j; i < k; ++i) seg[i] = seg[j - 1];
    }
  }
  return std::nullopt;
}

}  // namespace znp
