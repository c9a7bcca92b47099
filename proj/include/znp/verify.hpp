#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "znp/constants.hpp"
#include "znp/interval.hpp"
#include "znp/mass.hpp"
#include "znp/normed_lattice.hpp"

namespace znp {

/// Outcome of one inequality, with whether both sides were exactly equal.
struct Check {
  std::string name;
  Verdict verdict = Verdict::undecided;
  bool equal = false;
};

struct MargulisInputs {
  unsigned long n = 1;
  Rational stsys;
  Rational D;
  Rational omega;
  /// Optional upper bound for omega; both sides are then also evaluated with it.
  std::optional<Rational> Omega;
};

/// (2/n!) / (D^(n-1) omega) <= stsys <= 2 / omega^(1/n), and the same with
/// Omega when given.
std::vector<Check> verify_margulis(const MargulisInputs& in, unsigned bits = kDefaultPrecisionBits,
                                   unsigned max_bits = kMaxPrecisionBits);

struct AnnuliCheck {
  Rational A, B;
  std::vector<std::int64_t> counts;  // index k = 0..kmax
  std::vector<Check> shells;         // k = 1..kmax
  bool symbolic_ok = false;          // c_hat <= c_simplified(n, D, omega)
};

struct AnnuliInputs {
  unsigned long n = 1;
  Rational D;
  Rational omega;
  /// Measured QBD deviation used in place of the closed-form constant.
  Rational c_hat;
};

/// Required: Delta > 4nD + (11/10) c_hat. Throws PreconditionError otherwise.
/// Checks A (k Delta)^(n-1) <= v(k) <= B (k Delta)^(n-1) for 1 <= k <= kmax.
AnnuliCheck verify_annuli(const QuotientGraph& g, const AnnuliInputs& in, const Rational& delta, std::int64_t kmax,
                          std::size_t node_budget = kDefaultNodeBudget);
/// Same, against precomputed shell counts.
AnnuliCheck verify_annuli(const std::vector<std::int64_t>& counts, const AnnuliInputs& in, const Rational& delta);

struct ComponentsInputs {
  unsigned long n = 1;
  Rational sys;
  Rational D;
  Rational omega;
  /// Defaults to omega.
  std::optional<Rational> Omega;
};

struct ComponentsCheck {
  MassEntry mass;
  std::vector<Check> checks;  // trivial, refined, sublinear
};

/// N(gamma) against |gamma|/sys, the refined bound and the sublinear bound.
ComponentsCheck verify_components(const MassEntry& m, const ComponentsInputs& in,
                                  unsigned bits = kDefaultPrecisionBits, unsigned max_bits = kMaxPrecisionBits);
ComponentsCheck verify_components(const QuotientGraph& g, const LatticeVector& gamma, const ComponentsInputs& in,
                                  std::size_t node_budget = kDefaultNodeBudget);

/// Every invariant of an instance with its inequality flags.
struct InvariantReport {
  std::string name;
  unsigned long n = 1;
  Rational sys, stsys, codiam, omega;
  std::optional<Rational> omega_empirical;
  std::optional<Rational> radius;
  std::optional<Rational> c_hat;
  std::optional<LatticeVector> c_hat_argmax;
  Rational c_bound;  // c_simplified(n, D, omega)
  MargulisBounds margulis;
  std::vector<Check> checks;

  /// Worst flag: fails beats undecided beats holds.
  Verdict overall() const;
};

InvariantReport invariant_report(const std::string& name, const QuotientGraph& g, std::optional<Rational> radius,
                                 unsigned bits = kDefaultPrecisionBits, std::size_t node_budget = kDefaultNodeBudget);
InvariantReport invariant_report(const NormedLatticeSpace& space, unsigned bits = kDefaultPrecisionBits);

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const InvariantReport& r);

Verdict worst(const std::vector<Check>& checks);

}  // namespace znp
