#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "znp/linalg.hpp"

namespace znp {

/// Centrally symmetric, full-dimensional rational polytope with the origin in
/// its interior, kept in both representations:
///   V: its vertices, sorted lexicographically;
///   H: facet normals a with the ball equal to {x : a.x <= 1 for all a},
///      sorted lexicographically.
class StableBall {
 public:
  /// Convex hull of `points`. The set is symmetrized (p and -p both added);
  /// throws PreconditionError when the hull is not full-dimensional.
  static StableBall hull(std::size_t rank, std::vector<Point> points);
  /// Ball given by facet normals; vertices are derived.
  static StableBall from_facets(std::size_t rank, std::vector<Point> normals);

  std::size_t rank() const { return rank_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Point>& facets() const { return facets_; }
  /// Largest |coordinate| over the vertices: the ball sits in [-r, r]^n.
  Rational sup_radius() const;

 private:
  StableBall(std::size_t rank, std::vector<Point> vertices, std::vector<Point> facets)
      : rank_(rank), vertices_(std::move(vertices)), facets_(std::move(facets)) {}

  std::size_t rank_ = 0;
  std::vector<Point> vertices_;
  std::vector<Point> facets_;
};

/// Minkowski gauge min{t >= 0 : x in tB}.
Rational gauge(const StableBall& b, const Point& x);
Rational gauge(const StableBall& b, const LatticeVector& x);

/// Exact Lebesgue volume (fan triangulation from the origin over a
/// triangulation of every facet).
Rational ball_volume(const StableBall& b);

struct MonteCarloVolume {
  double estimate = 0;
  double standard_error = 0;
};

/// Hit-or-miss estimate over the bounding box; deterministic in `seed`.
MonteCarloVolume monte_carlo_volume(const StableBall& b, std::size_t samples, std::uint64_t seed = 1);

/// Lattice generators b_1..b_n, one per row.
using LatticeBasis = std::vector<Point>;

LatticeBasis standard_basis(std::size_t rank);
Rational covolume(const LatticeBasis& basis);

/// Calls `visit(coefficients, point)` for every lattice point with gauge at
/// most `bound` (and possibly a few more: callers filter by gauge).
void for_each_lattice_point(const StableBall& b, const LatticeBasis& basis, const Rational& bound,
                            const std::function<void(const LatticeVector&, const Point&)>& visit);

struct StableSystole {
  Rational value;
  /// Coefficients in the basis; canonical among the minimizers.
  LatticeVector argmin;
};

StableSystole stable_systole(const StableBall& b, const LatticeBasis& basis);

/// Whether int(B) and int(shift + B) meet, decided by an exact LP.
bool interiors_overlap(const StableBall& b, const Point& shift);

/// True iff vol(B) equals the covolume and no nonzero lattice translate of B
/// overlaps B in interior: exactly the condition for B to tile by the lattice.
bool parallelohedron_check(const StableBall& b, const LatticeBasis& basis);

enum class DirichletClass { interior, boundary, exterior };
const char* to_string(DirichletClass c);

/// Position of p relative to the open Dirichlet domain
/// {p : |p| < |p - g| for all lattice g != 0} and its closure.
DirichletClass dirichlet_membership(const StableBall& b, const LatticeBasis& basis, const Point& p);

nlohmann::json ball_to_json(const StableBall& b, bool with_facets = false);
StableBall ball_from_json(const nlohmann::json& doc);
/// Polygon drawing for rank 2; throws PreconditionError otherwise.
std::string ball_to_svg(const StableBall& b);

}  // namespace znp
