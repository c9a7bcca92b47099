#pragma once

#include <string>

#include "znp/stable_ball.hpp"

namespace znp {

/// A lattice in (R^n, norm) with a polytope unit ball. The codiameter (the
/// covering radius in the norm) is supplied by the builder: every builder
/// below knows it in closed form.
struct NormedLatticeSpace {
  std::string name;
  StableBall ball;
  LatticeBasis basis;
  Rational codiameter;

  std::size_t rank() const { return ball.rank(); }
};

/// ([-1,1]^n, Z^n); codiameter 1/2.
NormedLatticeSpace linf_lattice(std::size_t n);
/// |x| = sum w_i |x_i| with the lattice prod s_i Z; codiameter sum w_i s_i / 2.
NormedLatticeSpace weighted_l1_lattice(const std::vector<Rational>& weights, const std::vector<Rational>& spacing);
/// conv{+-(1,0), +-(0,1), +-(1,1)} with the lattice <(2,1),(1,2)>, which it
/// tiles; codiameter 1.
NormedLatticeSpace hexagon_lattice();

}  // namespace znp
