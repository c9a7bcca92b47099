#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "znp/interval.hpp"

namespace znp {

/// A Z-invariant metric on Z given directly by its norm function
/// m -> |||m|||. Values may be irrational, so they come as enclosures.
struct ExplicitOrbitMetric {
  std::string name;
  std::function<RationalInterval(const Integer& m, unsigned bits)> norm;
  /// lim |||k m||| / (k |m|) when known in closed form.
  std::optional<Rational> stable_slope;
  bool length_space = false;
};

/// |||m||| = |m| + sqrt|m|: invariant but not a length metric on the orbit.
ExplicitOrbitMetric sqrt_metric();
/// |||m||| = |m|.
ExplicitOrbitMetric abs_metric();

/// Violations of norm(0) = 0, symmetry and the triangle inequality over all
/// triples in [-range, range]. Empty means none found.
std::vector<std::string> check_explicit_metric(const ExplicitOrbitMetric& m, long range,
                                               unsigned bits = kDefaultPrecisionBits);

/// Enclosure of the stable norm at m. Uses the closed-form slope when
/// present, otherwise |||K m||| / K for K = 2^(2 bits), which is an upper
/// estimate by subadditivity.
RationalInterval explicit_stable_value(const ExplicitOrbitMetric& m, const Integer& x,
                                       unsigned bits = kDefaultPrecisionBits);

struct ExplicitDeviation {
  /// Encloses max_{|x| <= M} | |||x||| - stable(x) |.
  RationalInterval sup;
  /// A maximizer; the positive one of +-x when both attain it.
  Integer argmax;
};

ExplicitDeviation explicit_metric_deviation(const ExplicitOrbitMetric& m, long M,
                                            unsigned bits = kDefaultPrecisionBits);

/// Chain step length ceil(4 / eps^2) + 1.
Integer inner_chain_step(const Rational& eps);

/// For each |x| <= M, walks 0, l, 2l, ..., N l, x (signed) and checks that
/// the chain length is at most (1 + eps) |||x|||. Undecided comparisons count
/// as failures.
bool inner_property_check(const ExplicitOrbitMetric& m, const Rational& eps, long M);

}  // namespace znp
