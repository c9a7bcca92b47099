#pragma once

#include "znp/cover_search.hpp"
#include "znp/stable_ball.hpp"

namespace znp {

struct SystoleResult {
  Rational value;
  std::size_t vertex = 0;
  LatticeVector gamma;
};

/// min over vertices v and gamma != 0 of d((v,0), (v,gamma)). Ties go to the
/// smallest vertex index, then the canonical gamma.
SystoleResult systole(const QuotientGraph& g, std::size_t node_budget = kDefaultNodeBudget);

/// Volume of the stable unit ball (the deck lattice is Z^n, covolume 1).
Rational asymptotic_volume_exact(const QuotientGraph& g);

/// #{gamma : d(gamma) < R} / R^n.
Rational asymptotic_volume_empirical(const QuotientGraph& g, const Rational& R,
                                     std::size_t node_budget = kDefaultNodeBudget);

struct QbdDeviation {
  Rational value;
  LatticeVector argmax;
  std::size_t orbit_points = 0;
};

/// max over the open orbit ball of radius R of |d(gamma) - |gamma|_st|.
QbdDeviation qbd_deviation(const QuotientGraph& g, const StableBall& ball, const Rational& R,
                           std::size_t node_budget = kDefaultNodeBudget);
QbdDeviation qbd_deviation(const QuotientGraph& g, const Rational& R, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace znp
