#pragma once

#include <optional>
#include <utility>

#include <json.hpp>

#include "znp/interval.hpp"

namespace znp {

/// Parameters of the explicit constants: rank n, codiameter bound D, volume
/// bound Omega and (for M only) a systole lower bound sigma.
struct ParamSet {
  unsigned long n = 1;
  Rational D{1};
  Rational Omega{1};
  std::optional<Rational> sigma;
};

/// Throws PreconditionError unless n >= 1 and D, Omega (and sigma if set) > 0.
void require_valid(const ParamSet& p);

/// Omega * D^n, the scale-invariant size parameter.
Rational omega_dn(const ParamSet& p);

Rational index_bound(const ParamSet& p);
Rational coset_distance_bound(const ParamSet& p);
Rational sub_codiameter_bound(const ParamSet& p);
Rational L_bound(const ParamSet& p);

/// Needs p.sigma.
Rational M_const(const ParamSet& p);
RationalInterval M_prime(const ParamSet& p, unsigned bits = kDefaultPrecisionBits);
RationalInterval M_dprime(const ParamSet& p, unsigned bits = kDefaultPrecisionBits);
/// M''' and c_full involve M' M'' only, whose sqrt(n) factors multiply to n;
/// both come out as exact point intervals.
RationalInterval M_tprime(const ParamSet& p);
RationalInterval c_full(const ParamSet& p);

Rational c_simplified(const ParamSet& p);
/// Lower end of c_simplified's range: 2^(n^2+6n+8) n^2 (n!)^n D.
Rational c_floor(const ParamSet& p);

struct MargulisBounds {
  RationalInterval lower;
  RationalInterval upper;
};
/// (2/n!) / (D^(n-1) Omega) and 2 / Omega^(1/n).
MargulisBounds margulis_bounds(const ParamSet& p, unsigned bits = kDefaultPrecisionBits);

/// lambda (c + 2D).
Rational gh_bound(const Rational& lambda, const Rational& c, const Rational& D);

Integer N_threshold(const ParamSet& p);
/// 2 3^(2n) Omega^(1/(n+1)) l^(n/(n+1)).
RationalInterval sublinear_bound(unsigned long n, const Rational& Omega, const Rational& l,
                                 unsigned bits = kDefaultPrecisionBits);
/// 3^(2n) ((1+1/n)^n omega l^n)^(1/(n+1)).
RationalInterval refined_bound(unsigned long n, const Rational& omega, const Rational& l,
                               unsigned bits = kDefaultPrecisionBits);
/// omega (9nD + c)^n.
Rational small_case_bound(unsigned long n, const Rational& D, const Rational& omega, const Rational& c);

/// A = n omega Delta, B = 3^n A.
std::pair<Rational, Rational> annuli_constants(unsigned long n, const Rational& omega, const Rational& delta);
/// 4nD + c.
Rational qbd_delta_min(unsigned long n, const Rational& D, const Rational& c);

/// Every constant for `p` as exact strings plus digit counts.
nlohmann::json constants_report(const ParamSet& p, unsigned bits = kDefaultPrecisionBits);

}  // namespace znp
