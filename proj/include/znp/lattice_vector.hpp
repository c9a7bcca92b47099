#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>

#include "znp/rational.hpp"

namespace znp {

/// An element of the deck group Z^n. Coordinates are 64-bit with checked
/// arithmetic: every operation that would overflow throws std::overflow_error.
class LatticeVector {
 public:
  using Storage = boost::container::small_vector<std::int64_t, 4>;

  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticeVector(Storage coords) : coords_(std::move(coords)) {}

  static LatticeVector unit(std::size_t rank, std::size_t axis);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const Storage& coords() const { return coords_; }

  bool is_zero() const;
  std::int64_t norm_inf() const;
  std::int64_t norm_1() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector operator-() const;
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

 private:
  Storage coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Deterministic "nicest representative" order used to break ties between
/// lattice vectors: smaller l1 norm first, then vectors whose first nonzero
/// coordinate is positive, then lexicographically larger first (so e1
/// precedes e2).
bool canonical_less(const LatticeVector& a, const LatticeVector& b);

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

}  // namespace znp
