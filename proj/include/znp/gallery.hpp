#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "znp/explicit_metric.hpp"
#include "znp/normed_lattice.hpp"
#include "znp/quotient_graph.hpp"

namespace znp {

using GalleryObject = std::variant<QuotientGraph, NormedLatticeSpace, ExplicitOrbitMetric>;

/// A named example with the invariant values it is known to have
/// (keys: sys, stsys, codiam, omega, ...).
struct GalleryInstance {
  std::string name;
  GalleryObject object;
  std::map<std::string, Rational> expected;
};

/// One vertex, n loops e_i of length 1: the word metric of the standard
/// generators on Z^n.
GalleryInstance build_rose(std::size_t n);
/// One vertex, one loop per (voltage, length) generator on Z.
GalleryInstance build_cayley_Z(const std::vector<std::pair<std::int64_t, Rational>>& gens);
/// Loops of voltage 1 and k, length 1: codiam 1, sys 1, stsys 1/k, omega 2k.
GalleryInstance build_collapsing(std::int64_t k);
/// Loops of voltage 1 and p, length k: diam k, sys k, stsys k/p, omega 2p/k.
GalleryInstance build_scaled(std::int64_t k, std::int64_t p);
/// Centre vertex joined by spokes of length l (voltage 0) to n pendant
/// vertices, each carrying a loop of voltage e_i and length sigma.
GalleryInstance build_star_of_loops(std::size_t n, const Rational& l, const Rational& sigma);
GalleryInstance build_sqrt_metric();
GalleryInstance build_normed_lattice(NormedLatticeSpace space);

/// The standing gallery, in a fixed order.
std::vector<GalleryInstance> gallery();

struct ExpectationResult {
  std::string key;
  Rational expected;
  Rational actual;
  bool ok = false;
};

/// Recomputes every expected value of `inst` from scratch.
std::vector<ExpectationResult> check_expectations(const GalleryInstance& inst);

}  // namespace znp
