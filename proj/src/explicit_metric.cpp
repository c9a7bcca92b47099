#include "znp/explicit_metric.hpp"

#include "znp/errors.hpp"

namespace znp {

namespace {

Rational abs_q(const Integer& m) { return Rational(abs(m)); }

RationalInterval abs_interval(const RationalInterval& x) {
  if (x.lo() >= 0) return x;
  if (x.hi() <= 0) return -x;
  return {Rational(0), std::max(Rational(-x.lo()), x.hi())};
}

}  // namespace

ExplicitOrbitMetric sqrt_metric() {
  ExplicitOrbitMetric m;
  m.name = "sqrt";
  m.norm = [](const Integer& x, unsigned bits) {
    const Rational a = abs_q(x);
    return RationalInterval(a) + nth_root(a, 2, bits);
  };
  m.stable_slope = Rational(1);
  m.length_space = false;
  return m;
}

ExplicitOrbitMetric abs_metric() {
  ExplicitOrbitMetric m;
  m.name = "abs";
  m.norm = [](const Integer& x, unsigned) { return RationalInterval(abs_q(x)); };
  m.stable_slope = Rational(1);
  m.length_space = true;
  return m;
}

std::vector<std::string> check_explicit_metric(const ExplicitOrbitMetric& m, long range, unsigned bits) {
  std::vector<std::string> out;
  if (!m.norm(Integer(0), bits).is_point() || m.norm(Integer(0), bits).lo() != 0) out.push_back("norm(0) != 0");
  std::vector<RationalInterval> values;
  for (long x = -2 * range; x <= 2 * range; ++x) values.push_back(m.norm(Integer(x), bits));
  auto at = [&](long x) -> const RationalInterval& { return values[static_cast<std::size_t>(x + 2 * range)]; };
  for (long x = 0; x <= range; ++x) {
    if (at(x).lo() != at(-x).lo() || at(x).hi() != at(-x).hi()) out.push_back("asymmetric at " + std::to_string(x));
  }
  for (long x = -range; x <= range; ++x) {
    for (long y = -range; y <= range; ++y) {
      // Certain violation only: |||x+y||| > |||x||| + |||y||| on enclosures.
      if (at(x + y).lo() > at(x).hi() + at(y).hi())
        out.push_back("triangle fails at " + std::to_string(x) + "," + std::to_string(y));
    }
  }
  return out;
}

RationalInterval explicit_stable_value(const ExplicitOrbitMetric& m, const Integer& x, unsigned bits) {
  if (m.stable_slope) return RationalInterval(*m.stable_slope * abs_q(x));
  Integer k(1);
  mpz_mul_2exp(k.get_mpz_t(), k.get_mpz_t(), 2 * bits);
  const RationalInterval v = m.norm(k * x, bits);
  return {v.lo() / k, v.hi() / k};
}

ExplicitDeviation explicit_metric_deviation(const ExplicitOrbitMetric& m, long M, unsigned bits) {
  if (M < 0) throw PreconditionError("explicit_metric_deviation: M must be >= 0");
  ExplicitDeviation best{RationalInterval(Rational(0)), Integer(0)};
  for (long x = 0; x <= M; ++x) {
    for (long s : {1L, -1L}) {
      if (x == 0 && s < 0) continue;
      const Integer xi(s * x);
      const RationalInterval dev = abs_interval(m.norm(xi, bits) - explicit_stable_value(m, xi, bits));
      // The supremum lies between the largest lower and largest upper end.
      Rational lo = std::max(best.sup.lo(), dev.lo());
      Rational hi = std::max(best.sup.hi(), dev.hi());
      if (dev.hi() > best.sup.hi() || (x == 0)) best.argmax = xi;
      best.sup = RationalInterval(lo, hi);
    }
  }
  return best;
}

Integer inner_chain_step(const Rational& eps) {
  if (eps <= 0) throw PreconditionError("inner_property_check: eps must be > 0");
  return ceil(Rational(4) / (eps * eps)) + 1;
}

bool inner_property_check(const ExplicitOrbitMetric& m, const Rational& eps, long M) {
  const Integer step = inner_chain_step(eps);
  for (long x = -M; x <= M; ++x) {
    const Integer ax = abs(Integer(x));
    const Integer count = ax / step;
    if (count == 0) continue;  // single step: the chain is x itself
    const Integer rest = ax - count * step;
    IntervalFn lhs = [&](unsigned bits) {
      return RationalInterval(Rational(count)) * m.norm(step, bits) + m.norm(rest, bits);
    };
    IntervalFn rhs = [&](unsigned bits) { return RationalInterval(Rational(1) + eps) * m.norm(Integer(x), bits); };
    if (compare_le(lhs, rhs).verdict != Verdict::holds) return false;
  }
  return true;
}

}  // namespace znp
