#include "znp/constants.hpp"

#include "znp/errors.hpp"

namespace znp {

namespace {

Rational pow2(unsigned long e) {
  Integer r(1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return Rational(r);
}

Rational rpow(const Rational& x, unsigned long e) { return pow(x, static_cast<long>(e)); }
Rational fact(unsigned long n) { return Rational(factorial(n)); }

RationalInterval sqrt_n(const ParamSet& p, unsigned bits) { return nth_root(Rational(p.n), 2, bits); }

Rational M_prime_over_sqrt_n(const ParamSet& p) {
  return 8 * rpow(Rational(3, 2), p.n) * fact(p.n) * p.Omega * rpow(p.D, p.n + 1);
}

}  // namespace

void require_valid(const ParamSet& p) {
  if (p.n < 1) throw PreconditionError("n must be >= 1");
  if (p.D <= 0) throw PreconditionError("D must be > 0");
  if (p.Omega <= 0) throw PreconditionError("Omega must be > 0");
  if (p.sigma && *p.sigma <= 0) throw PreconditionError("sigma must be > 0");
}

Rational omega_dn(const ParamSet& p) {
  require_valid(p);
  return p.Omega * rpow(p.D, p.n);
}

Rational index_bound(const ParamSet& p) {
  require_valid(p);
  return fact(p.n) / pow2(p.n) * p.Omega * rpow(3 * p.D, p.n);
}

Rational coset_distance_bound(const ParamSet& p) { return index_bound(p) * 3 * p.D; }

Rational sub_codiameter_bound(const ParamSet& p) { return p.D + coset_distance_bound(p); }

Rational L_bound(const ParamSet& p) {
  const Rational w = omega_dn(p);
  const unsigned long n = p.n;
  return pow2(n * n + 4 * n + 3) * rpow(fact(n), n + 1) * w * rpow(w + 1, n);
}

Rational M_const(const ParamSet& p) {
  require_valid(p);
  if (!p.sigma) throw PreconditionError("M needs sigma");
  return 2 * L_bound(p) / *p.sigma;
}

RationalInterval M_prime(const ParamSet& p, unsigned bits) {
  require_valid(p);
  return sqrt_n(p, bits) * RationalInterval(M_prime_over_sqrt_n(p));
}

RationalInterval M_dprime(const ParamSet& p, unsigned bits) {
  return sqrt_n(p, bits) * RationalInterval(M_const(p));
}

RationalInterval M_tprime(const ParamSet& p) {
  const Rational prod = Rational(p.n) * M_prime_over_sqrt_n(p) * M_const(p);  // M' M''
  return RationalInterval(2 * Rational(p.n) * (prod + 1) * sub_codiameter_bound(p));
}

RationalInterval c_full(const ParamSet& p) {
  const Rational prod = Rational(p.n) * M_prime_over_sqrt_n(p) * M_const(p);
  return RationalInterval(2 * sub_codiameter_bound(p) * (Rational(p.n) * prod + p.n + 1));
}

Rational c_simplified(const ParamSet& p) {
  const Rational w = omega_dn(p);
  const unsigned long n = p.n;
  return pow2(n * n + 6 * n + 10) * Rational(n * n) * rpow(fact(n), n + 2) * p.D * rpow(w + 1, n + 4);
}

Rational c_floor(const ParamSet& p) {
  require_valid(p);
  const unsigned long n = p.n;
  return pow2(n * n + 6 * n + 8) * Rational(n * n) * rpow(fact(n), n) * p.D;
}

MargulisBounds margulis_bounds(const ParamSet& p, unsigned bits) {
  require_valid(p);
  const Rational lower = 2 / fact(p.n) / (rpow(p.D, p.n - 1) * p.Omega);
  return {RationalInterval(lower), RationalInterval(Rational(2)) / nth_root(p.Omega, p.n, bits)};
}

Rational gh_bound(const Rational& lambda, const Rational& c, const Rational& D) {
  if (lambda <= 0) throw PreconditionError("lambda must be > 0");
  return lambda * (c + 2 * D);
}

Integer N_threshold(const ParamSet& p) {
  const Rational w = omega_dn(p);
  const unsigned long n = p.n;
  const Rational v = pow2(18 * n * n * n) * rpow(Rational(n), 2 * n) * rpow(fact(n), n * (n + 2)) *
                     rpow(w + 1, 6 * n * n);
  return ceil(v);
}

RationalInterval sublinear_bound(unsigned long n, const Rational& Omega, const Rational& l, unsigned bits) {
  if (n < 1 || Omega <= 0 || l < 0) throw PreconditionError("sublinear_bound: bad arguments");
  return RationalInterval(2 * rpow(Rational(9), n)) * nth_root(Omega * rpow(l, n), n + 1, bits);
}

RationalInterval refined_bound(unsigned long n, const Rational& omega, const Rational& l, unsigned bits) {
  if (n < 1 || omega <= 0 || l < 0) throw PreconditionError("refined_bound: bad arguments");
  const Rational inner = rpow(1 + Rational(1, n), n) * omega * rpow(l, n);
  return RationalInterval(rpow(Rational(9), n)) * nth_root(inner, n + 1, bits);
}

Rational small_case_bound(unsigned long n, const Rational& D, const Rational& omega, const Rational& c) {
  return omega * rpow(9 * Rational(n) * D + c, n);
}

std::pair<Rational, Rational> annuli_constants(unsigned long n, const Rational& omega, const Rational& delta) {
  if (delta <= 0) throw PreconditionError("Delta must be > 0");
  if (omega <= 0) throw PreconditionError("omega must be > 0");
  const Rational a = Rational(n) * omega * delta;
  return {a, rpow(Rational(3), n) * a};
}

Rational qbd_delta_min(unsigned long n, const Rational& D, const Rational& c) { return 4 * Rational(n) * D + c; }

nlohmann::json constants_report(const ParamSet& p, unsigned bits) {
  require_valid(p);
  auto exact = [](const Rational& q) {
    return nlohmann::json{{"value", to_string(q)}, {"digits", decimal_digits(q.get_num())}};
  };
  auto interval = [](const RationalInterval& x) {
    return nlohmann::json{{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}, {"exact", x.is_point()}};
  };
  nlohmann::json doc;
  doc["params"] = {{"n", p.n}, {"D", to_string(p.D)}, {"Omega", to_string(p.Omega)}};
  if (p.sigma) doc["params"]["sigma"] = to_string(*p.sigma);
  doc["omega_Dn"] = exact(omega_dn(p));
  doc["index_bound"] = exact(index_bound(p));
  doc["coset_distance_bound"] = exact(coset_distance_bound(p));
  doc["sub_codiameter_bound"] = exact(sub_codiameter_bound(p));
  doc["L_bound"] = exact(L_bound(p));
  doc["M_prime"] = interval(M_prime(p, bits));
  if (p.sigma) {
    doc["M"] = exact(M_const(p));
    doc["M_dprime"] = interval(M_dprime(p, bits));
    doc["M_tprime"] = interval(M_tprime(p));
    doc["c_full"] = interval(c_full(p));
  }
  doc["c_simplified"] = exact(c_simplified(p));
  doc["c_floor"] = exact(c_floor(p));
  doc["N_threshold"] = exact(Rational(N_threshold(p)));
  const auto mb = margulis_bounds(p, bits);
  doc["margulis_lower"] = interval(mb.lower);
  doc["margulis_upper"] = interval(mb.upper);
  return doc;
}

}  // namespace znp
