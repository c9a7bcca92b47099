#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "znp/linalg.hpp"

namespace znp {

/// Piecewise-linear path c : [0, l] -> Q^n through points[i] at params[i],
/// with params[0] = 0 strictly increasing and Euclidean speed at most 1.
struct Polyline {
  std::vector<Rational> params;
  std::vector<Point> points;

  std::size_t dimension() const { return points.front().size(); }
  const Rational& length() const { return params.back(); }
  Point at(const Rational& t) const;
};

/// Throws PreconditionError when `path` breaks the Polyline invariants.
void require_valid(const Polyline& path);

/// Open intervals (a_i, b_i), sorted.
using IntervalSelection = std::vector<std::pair<Rational, Rational>>;

/// sum_i (c(b_i) - c(a_i)) == (c(l) - c(0)) / 2 within `tol` per coordinate,
/// total measure <= l/2, at most n pairwise disjoint intervals. Throws
/// PreconditionError on intervals with a >= b or outside [0, l].
bool bp_verify(const Polyline& path, const IntervalSelection& sel, const Rational& tol = Rational(0));

inline constexpr std::size_t kDefaultBpBudget = 100'000;

/// Exact search. For m = 0..n intervals and every nondecreasing assignment
/// of the 2m endpoints to segments, an LP decides whether endpoints exist
/// there; the first feasible one (in that order) is returned. Empty only
/// when `budget` LPs were spent first.
std::optional<IntervalSelection> bp_search(const Polyline& path, std::size_t budget = kDefaultBpBudget);

}  // namespace znp
