#pragma once

#include <functional>
#include <string>

#include "znp/rational.hpp"

namespace znp {

/// Default working precision, in bits, for irrational quantities.
inline constexpr unsigned kDefaultPrecisionBits = 64;
/// Refinement stops at this precision; comparisons still open there are
/// reported as undecided.
inline constexpr unsigned kMaxPrecisionBits = 128;

/// Closed interval [lo, hi] with rational endpoints. Every operation returns
/// an interval containing all exact results, so verdicts drawn from
/// interval endpoints are sound.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit by intent
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const RationalInterval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
  RationalInterval operator-() const { return {-hi_, -lo_}; }

  std::string to_string() const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Enclosure of x^(1/k) for rational x >= 0. Width is at most 2^-bits; the
/// result is a point interval exactly when the root is rational.
RationalInterval nth_root(const Rational& x, unsigned long k, unsigned bits = kDefaultPrecisionBits);

/// Enclosure of x^(p/q) for rational x >= 0 and p >= 0, q >= 1.
RationalInterval rational_power(const Rational& x, unsigned long p, unsigned long q,
                                unsigned bits = kDefaultPrecisionBits);

RationalInterval nth_root(const RationalInterval& x, unsigned long k, unsigned bits = kDefaultPrecisionBits);

enum class Verdict { holds, fails, undecided };

const char* to_string(Verdict v);

/// Outcome of a refined "lhs <= rhs" comparison. `equal` is set only when
/// both sides collapsed to the same exact rational.
struct Comparison {
  Verdict verdict = Verdict::undecided;
  bool equal = false;
  unsigned bits_used = 0;
};

using IntervalFn = std::function<RationalInterval(unsigned bits)>;

/// Decides lhs <= rhs, doubling precision from `start_bits` up to
/// `max_bits`. Never reports `holds` or `fails` without an exact certificate.
Comparison compare_le(const IntervalFn& lhs, const IntervalFn& rhs, unsigned start_bits = kDefaultPrecisionBits,
                      unsigned max_bits = kMaxPrecisionBits);

/// Strict variant: decides lhs < rhs.
Comparison compare_lt(const IntervalFn& lhs, const IntervalFn& rhs, unsigned start_bits = kDefaultPrecisionBits,
                      unsigned max_bits = kMaxPrecisionBits);

}  // namespace znp
