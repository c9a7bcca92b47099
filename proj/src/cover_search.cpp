#include "znp/cover_search.hpp"

#include <algorithm>
#include <functional>

#include "znp/errors.hpp"

namespace znp {

namespace {

std::int64_t add_lengths(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("path length overflow");
  return r;
}

}  // namespace

CoverDijkstra::CoverDijkstra(const QuotientGraph& g, std::size_t node_budget) : g_(g), budget_(node_budget) {}

LatticeVector CoverDijkstra::key(std::size_t vertex, const LatticeVector& sheet) const {
  LatticeVector::Storage coords(sheet.coords());
  coords.push_back(static_cast<std::int64_t>(vertex));
  return LatticeVector(std::move(coords));
}

void CoverDijkstra::add_source(std::size_t vertex, const LatticeVector& sheet) { touch(vertex, sheet, 0); }

void CoverDijkstra::set_target(std::size_t vertex, const LatticeVector& sheet) { target_key_ = key(vertex, sheet); }

std::size_t CoverDijkstra::touch(std::size_t vertex, const LatticeVector& sheet, std::int64_t d) {
  if (limit_ && d > *limit_) return SIZE_MAX;
  if (incumbent_ && d > *incumbent_) return SIZE_MAX;
  LatticeVector k = key(vertex, sheet);
  auto it = index_.find(k);
  std::uint32_t id;
  if (it == index_.end()) {
    if (dist_.size() >= budget_) {
      throw BudgetExceeded("cover search exceeded node budget of " + std::to_string(budget_));
    }
    id = static_cast<std::uint32_t>(dist_.size());
    if (target_key_ && k == *target_key_) incumbent_ = d;
    index_.emplace(std::move(k), id);
    vertex_.push_back(static_cast<std::uint32_t>(vertex));
    sheet_.push_back(sheet);
    dist_.push_back(d);
    done_.push_back(false);
  } else {
    id = it->second;
    if (done_[id] || dist_[id] <= d) return id;
    dist_[id] = d;
    if (target_key_ && it->first == *target_key_) incumbent_ = d;
  }
  heap_.emplace_back(d, id);
  std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
  return id;
}

void CoverDijkstra::run(const std::function<bool(const Settled&)>& visit) {
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
    const auto [d, id] = heap_.back();
    heap_.pop_back();
    if (done_[id] || d != dist_[id]) continue;
    done_[id] = true;
    const std::size_t v = vertex_[id];
    const LatticeVector sheet = sheet_[id];
    if (!visit(Settled{v, sheet, d})) return;
    for (const Dart& dart : g_.darts(v)) {
      touch(dart.to, sheet + dart.voltage, add_lengths(d, dart.scaled_length));
    }
  }
}

Rational orbit_distance(const QuotientGraph& g, const LatticeVector& gamma, std::size_t node_budget) {
  return orbit_distances(g, {gamma}, node_budget).front();
}

std::vector<Rational> orbit_distances(const QuotientGraph& g, const std::vector<LatticeVector>& targets,
                                      std::size_t node_budget) {
  require_valid(g);
  std::unordered_map<LatticeVector, std::vector<std::size_t>, LatticeVectorHash> wanted;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].rank() != g.rank()) throw PreconditionError("target rank does not match the model");
    wanted[targets[i]].push_back(i);
  }
  std::vector<Rational> out(targets.size());
  std::size_t remaining = wanted.size();
  if (remaining == 0) return out;
  CoverDijkstra search(g, node_budget);
  if (targets.size() == 1) search.set_target(g.base(), targets.front());
  search.add_source(g.base(), LatticeVector(g.rank()));
  search.run([&](const CoverDijkstra::Settled& s) {
    if (s.vertex != g.base()) return true;
    auto it = wanted.find(s.sheet);
    if (it == wanted.end()) return true;
    for (auto i : it->second) out[i] = g.unscale(s.distance);
    wanted.erase(it);
    return --remaining > 0;
  });
  if (remaining > 0) throw std::logic_error("cover search ended before reaching every target");
  return out;
}

std::vector<std::pair<LatticeVector, std::int64_t>> orbit_ball_scaled(const QuotientGraph& g, const Rational& radius,
                                                                      std::size_t node_budget) {
  require_valid(g);
  if (radius <= 0) throw PreconditionError("ball radius must be positive");
  std::vector<std::pair<LatticeVector, std::int64_t>> out;
  CoverDijkstra search(g, node_budget);
  search.set_limit(g.scaled_strict_bound(radius));
  search.add_source(g.base(), LatticeVector(g.rank()));
  search.run([&](const CoverDijkstra::Settled& s) {
    if (s.vertex == g.base()) out.emplace_back(s.sheet, s.distance);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<LatticeVector, Rational> orbit_ball(const QuotientGraph& g, const Rational& radius, std::size_t node_budget) {
  std::map<LatticeVector, Rational> out;
  for (auto& [gamma, d] : orbit_ball_scaled(g, radius, node_budget)) out.emplace(gamma, g.unscale(d));
  return out;
}

std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> closed_walk_lengths(const QuotientGraph& g,
                                                                                       std::int64_t scaled_limit,
                                                                                       std::size_t node_budget) {
  require_valid(g);
  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> best;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    CoverDijkstra search(g, node_budget);
    search.set_limit(scaled_limit);
    search.add_source(v, LatticeVector(g.rank()));
    search.run([&](const CoverDijkstra::Settled& s) {
      if (s.vertex != v) return true;
      auto [it, inserted] = best.emplace(s.sheet, s.distance);
      if (!inserted && s.distance < it->second) it->second = s.distance;
      return true;
    });
  }
  return best;
}

}  // namespace znp
