#include "znp/interval.hpp"

#include <stdexcept>

namespace znp {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  Rational lo = p[0], hi = p[0];
  for (const auto& x : p) {
    if (x < lo) lo = x;
    if (hi < x) hi = x;
  }
  return {lo, hi};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing zero");
  return a * RationalInterval(Rational(1) / b.hi_, Rational(1) / b.lo_);
}

std::string RationalInterval::to_string() const {
  if (is_point()) return znp::to_string(lo_);
  return "[" + znp::to_string(lo_) + ", " + znp::to_string(hi_) + "]";
}

RationalInterval nth_root(const Rational& x, unsigned long k, unsigned bits) {
  if (x < 0) throw std::domain_error("root of a negative number");
  if (k == 0) throw std::domain_error("zeroth root");
  if (x == 0 || k == 1) return x;
  // (p/q)^(1/k) = (p q^(k-1))^(1/k) / q. Try the exact root first.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer radicand = p * pow(q, k - 1);
  Integer root;
  if (mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), k) != 0) {
    Rational r(root, q);
    r.canonicalize();
    return r;
  }
  // Scale by 2^(k*bits) so the integer root carries `bits` fractional bits.
  Integer scaled = radicand << static_cast<mp_bitcnt_t>(k * bits);
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k);
  Integer den = q << static_cast<mp_bitcnt_t>(bits);
  Rational lo(root, den);
  Rational hi(Integer(root + 1), den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

RationalInterval rational_power(const Rational& x, unsigned long p, unsigned long q, unsigned bits) {
  if (q == 0) throw std::domain_error("zero denominator in exponent");
  return nth_root(pow(x, static_cast<long>(p)), q, bits);
}

RationalInterval nth_root(const RationalInterval& x, unsigned long k, unsigned bits) {
  if (x.is_point()) return nth_root(x.lo(), k, bits);
  // x -> x^(1/k) is monotone on [0, inf).
  return {nth_root(x.lo(), k, bits).lo(), nth_root(x.hi(), k, bits).hi()};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "pass";
    case Verdict::fails:
      return "fail";
    case Verdict::undecided:
      return "undecided";
  }
  return "undecided";
}

namespace {

Comparison refine(const IntervalFn& lhs, const IntervalFn& rhs, unsigned start_bits, unsigned max_bits,
                  bool strict) {
  Comparison out;
  for (unsigned bits = start_bits == 0 ? 1 : start_bits;; bits *= 2) {
    if (bits > max_bits) bits = max_bits;
    const RationalInterval a = lhs(bits);
    const RationalInterval b = rhs(bits);
    out.bits_used = bits;
    if (a.is_point() && b.is_point() && a.lo() == b.lo()) {
      out.equal = true;
      out.verdict = strict ? Verdict::fails : Verdict::holds;
      return out;
    }
    if (strict ? a.hi() < b.lo() : a.hi() <= b.lo()) {
      out.verdict = Verdict::holds;
      return out;
    }
    if (strict ? a.lo() >= b.hi() : a.lo() > b.hi()) {
      out.verdict = Verdict::fails;
      return out;
    }
    if (bits >= max_bits) return out;
  }
}

}  // namespace

Comparison compare_le(const IntervalFn& lhs, const IntervalFn& rhs, unsigned start_bits, unsigned max_bits) {
  return refine(lhs, rhs, start_bits, max_bits, false);
}

Comparison compare_lt(const IntervalFn& lhs, const IntervalFn& rhs, unsigned start_bits, unsigned max_bits) {
  return refine(lhs, rhs, start_bits, max_bits, true);
}

}  // namespace znp
