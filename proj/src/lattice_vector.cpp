#include "znp/lattice_vector.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace znp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

void require_same_rank(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lattice vectors of different rank");
}

}  // namespace

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t axis) {
  LatticeVector v(rank);
  v[axis] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::int64_t LatticeVector::norm_inf() const {
  std::int64_t m = 0;
  for (auto c : coords_) m = std::max(m, c < 0 ? checked_sub(0, c) : c);
  return m;
}

std::int64_t LatticeVector::norm_1() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked_add(s, c < 0 ? checked_sub(0, c) : c);
  return s;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = checked_sub(0, coords_[i]);
  return r;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
  LatticeVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r[i] = checked_mul(k, v[i]);
  return r;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

bool canonical_less(const LatticeVector& a, const LatticeVector& b) {
  const auto na = a.norm_1();
  const auto nb = b.norm_1();
  if (na != nb) return na < nb;
  auto leading_negative = [](const LatticeVector& v) {
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (v[i] != 0) return v[i] < 0;
    }
    return false;
  };
  const bool la = leading_negative(a);
  const bool lb = leading_negative(b);
  if (la != lb) return !la;
  return b < a;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.rank();
  for (std::size_t i = 0; i < v.rank(); ++i) {
    h ^= static_cast<std::uint64_t>(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace znp
