#include "znp/normed_lattice.hpp"

#include "znp/errors.hpp"

namespace znp {

NormedLatticeSpace linf_lattice(std::size_t n) {
  std::vector<Point> normals;
  for (std::size_t i = 0; i < n; ++i) {
    Point a(n, Rational(0));
    a[i] = 1;
    normals.push_back(a);
  }
  return {"linf-" + std::to_string(n), StableBall::from_facets(n, std::move(normals)), standard_basis(n),
          Rational(1, 2)};
}

NormedLatticeSpace weighted_l1_lattice(const std::vector<Rational>& weights, const std::vector<Rational>& spacing) {
  const std::size_t n = weights.size();
  if (n == 0 || spacing.size() != n) throw PreconditionError("weighted_l1_lattice: size mismatch");
  std::vector<Point> verts;
  LatticeBasis basis(n, Point(n, Rational(0)));
  Rational codiam(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i] <= 0 || spacing[i] <= 0) throw PreconditionError("weighted_l1_lattice: nonpositive parameter");
    Point v(n, Rational(0));
    v[i] = 1 / weights[i];
    verts.push_back(v);
    basis[i][i] = spacing[i];
    codiam += weights[i] * spacing[i] / 2;
  }
  return {"weighted-l1-" + std::to_string(n), StableBall::hull(n, std::move(verts)), std::move(basis), codiam};
}

NormedLatticeSpace hexagon_lattice() {
  std::vector<Point> verts = {{1, 0}, {0, 1}, {1, 1}};
  LatticeBasis basis = {{2, 1}, {1, 2}};
  return {"hexagon", StableBall::hull(2, std::move(verts)), std::move(basis), Rational(1)};
}

}  // namespace znp
