#pragma once

#include <optional>
#include <vector>

#include "znp/lattice_vector.hpp"
#include "znp/rational.hpp"

namespace znp {

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

Point to_point(const LatticeVector& v);
Rational dot(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& s);

std::size_t matrix_rank(Matrix rows);
Rational determinant(Matrix m);
/// Solution of m x = rhs when m is square and nonsingular.
std::optional<Point> solve(Matrix m, Point rhs);
/// Inverse of a square nonsingular matrix.
std::optional<Matrix> inverse(const Matrix& m);
/// A nonzero vector orthogonal to every row, if the rows do not span.
std::optional<Point> orthogonal_complement_vector(const Matrix& rows, std::size_t dim);

}  // namespace znp
