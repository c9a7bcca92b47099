#include "znp/stable_ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "znp/errors.hpp"
#include "znp/lp.hpp"

namespace znp {

namespace {

// Calls f on every k-subset of {0..m-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facet normals {a : a.x <= 1} of conv(pts); pts must contain the origin in
// the interior of their hull.
std::set<Point> facets_of(const std::vector<Point>& pts, std::size_t n) {
  std::set<Point> out;
  for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (auto i : idx) m.push_back(pts[i]);
    auto a = solve(m, Point(n, Rational(1)));
    if (!a || out.count(*a)) return;
    for (const auto& p : pts)
      if (dot(*a, p) > 1) return;
    out.insert(*a);
  });
  return out;
}

// Vertices of {x : a.x <= 1} from its facet normals.
std::set<Point> vertices_of(const std::vector<Point>& normals, std::size_t n) {
  std::set<Point> out;
  for_each_subset(normals.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (auto i : idx) m.push_back(normals[i]);
    auto v = solve(m, Point(n, Rational(1)));
    if (!v || out.count(*v)) return;
    for (const auto& a : normals)
      if (dot(a, *v) > 1) return;
    out.insert(*v);
  });
  return out;
}

// Lexicographically largest maximizer of dir.x over pts.
const Point& argmax(const std::vector<Point>& pts, const Point& dir) {
  const Point* best = &pts.front();
  Rational best_value = dot(dir, *best);
  for (const auto& p : pts) {
    const Rational v = dot(dir, p);
    if (v > best_value || (v == best_value && *best < p)) {
      best = &p;
      best_value = v;
    }
  }
  return *best;
}

Point negated(const Point& p) { return scale(p, Rational(-1)); }

std::size_t affine_dim(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  Matrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(pts[idx[i]] - pts[idx[0]]);
  return matrix_rank(std::move(diffs));
}

// Triangulates the face spanned by vertex indices `face` (sorted) of
// affine dimension d by pulling its first vertex.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<Point>& verts,
                                                  const std::vector<std::vector<std::size_t>>& incidences,
                                                  const std::vector<std::size_t>& face, std::size_t d) {
  if (d == 0) return {{face.front()}};
  const std::size_t v0 = face.front();
  std::set<std::vector<std::size_t>> ridges;
  for (const auto& facet : incidences) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(), std::back_inserter(sub));
    if (sub.size() < d || sub.size() == face.size()) continue;
    if (std::binary_search(sub.begin(), sub.end(), v0)) continue;
    if (affine_dim(verts, sub) != d - 1) continue;
    ridges.insert(std::move(sub));
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& r : ridges) {
    for (auto s : triangulate(verts, incidences, r, d - 1)) {
      s.push_back(v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

StableBall StableBall::hull(std::size_t rank, std::vector<Point> points) {
  if (rank == 0) throw PreconditionError("StableBall: rank must be positive");
  std::set<Point> uniq;
  for (auto& p : points) {
    if (p.size() != rank) throw PreconditionError("StableBall: point of wrong dimension");
    if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) continue;
    uniq.insert(negated(p));
    uniq.insert(std::move(p));
  }
  if (uniq.empty()) throw PreconditionError("StableBall: hull is not full-dimensional");
  const std::vector<Point> pts(uniq.begin(), uniq.end());

  // Seed with extreme points in the coordinate directions, then extend until
  // the seed spans; symmetry keeps the origin interior.
  std::set<Point> seed;
  auto add = [&](const Point& p) {
    seed.insert(p);
    seed.insert(negated(p));
  };
  for (std::size_t i = 0; i < rank; ++i) {
    Point e(rank, Rational(0));
    e[i] = 1;
    add(argmax(pts, e));
  }
  while (true) {
    auto dir = orthogonal_complement_vector(Matrix(seed.begin(), seed.end()), rank);
    if (!dir) break;
    const Point& p = argmax(pts, *dir);
    if (dot(*dir, p) == 0) throw PreconditionError("StableBall: hull is not full-dimensional");
    add(p);
  }

  // Grow the seed by the most violating point per facet until it is the hull.
  std::set<Point> normals;
  while (true) {
    const std::vector<Point> current(seed.begin(), seed.end());
    normals = facets_of(current, rank);
    bool grew = false;
    for (const auto& a : normals) {
      const Point& p = argmax(pts, a);
      if (dot(a, p) > 1 && !seed.count(p)) {
        add(p);
        grew = true;
      }
    }
    if (!grew) break;
  }

  std::vector<Point> facets(normals.begin(), normals.end());
  std::vector<Point> vertices;
  for (const auto& s : seed) {
    Matrix active;
    for (const auto& a : facets)
      if (dot(a, s) == 1) active.push_back(a);
    if (matrix_rank(std::move(active)) == rank) vertices.push_back(s);
  }
  return StableBall(rank, std::move(vertices), std::move(facets));
}

StableBall StableBall::from_facets(std::size_t rank, std::vector<Point> normals) {
  std::set<Point> uniq;
  for (auto& a : normals) {
    if (a.size() != rank) throw PreconditionError("StableBall: normal of wrong dimension");
    uniq.insert(negated(a));
    uniq.insert(std::move(a));
  }
  const std::vector<Point> ns(uniq.begin(), uniq.end());
  const auto verts = vertices_of(ns, rank);
  if (verts.empty()) throw PreconditionError("StableBall: facets do not bound a polytope");
  // Rebuild through the hull so that redundant inequalities drop out.
  return hull(rank, std::vector<Point>(verts.begin(), verts.end()));
}

Rational StableBall::sup_radius() const {
  Rational r(0);
  for (const auto& v : vertices_)
    for (const auto& x : v) r = std::max(r, abs(x));
  return r;
}

Rational gauge(const StableBall& b, const Point& x) {
  Rational g(0);
  for (const auto& a : b.facets()) g = std::max(g, dot(a, x));
  return g;
}

Rational gauge(const StableBall& b, const LatticeVector& x) { return gauge(b, to_point(x)); }

Rational ball_volume(const StableBall& b) {
  const std::size_t n = b.rank();
  const auto& verts = b.vertices();
  std::vector<std::vector<std::size_t>> incidences;
  for (const auto& a : b.facets()) {
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(a, verts[i]) == 1) inc.push_back(i);
    incidences.push_back(std::move(inc));
  }
  Rational total(0);
  for (const auto& facet : incidences) {
    for (const auto& simplex : triangulate(verts, incidences, facet, n - 1)) {
      Matrix m;
      for (auto i : simplex) m.push_back(verts[i]);
      total += abs(determinant(std::move(m)));
    }
  }
  return total / Rational(factorial(n));
}

MonteCarloVolume monte_carlo_volume(const StableBall& b, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = b.rank();
  std::vector<std::vector<double>> normals;
  for (const auto& a : b.facets()) {
    std::vector<double> row;
    for (const auto& x : a) row.push_back(x.get_d());
    normals.push_back(std::move(row));
  }
  const double r = b.sup_radius().get_d();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-r, r);
  std::size_t hits = 0;
  std::vector<double> x(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& xi : x) xi = coord(rng);
    bool inside = true;
    for (const auto& a : normals) {
      double v = 0;
      for (std::size_t i = 0; i < n; ++i) v += a[i] * x[i];
      if (v > 1) {
        inside = false;
        break;
      }
    }
    hits += inside;
  }
  const double box = std::pow(2 * r, static_cast<double>(n));
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {box * p, box * std::sqrt(p * (1 - p) / static_cast<double>(samples))};
}

LatticeBasis standard_basis(std::size_t rank) {
  LatticeBasis basis(rank, Point(rank, Rational(0)));
  for (std::size_t i = 0; i < rank; ++i) basis[i][i] = 1;
  return basis;
}

Rational covolume(const LatticeBasis& basis) { return abs(determinant(basis)); }

void for_each_lattice_point(const StableBall& b, const LatticeBasis& basis, const Rational& bound,
                            const std::function<void(const LatticeVector&, const Point&)>& visit) {
  const std::size_t n = b.rank();
  if (basis.size() != n) throw PreconditionError("lattice basis has wrong size");
  // x = B^T c, so c = (B^T)^{-1} x and |c_j| <= sum_i |inv_ji| * max|x_i|.
  Matrix bt(n, Point(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bt[i][j] = basis[j][i];
  const auto inv = inverse(bt);
  if (!inv) throw PreconditionError("lattice basis is singular");
  const Rational box = bound * b.sup_radius();
  std::vector<std::int64_t> lim(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i) s += abs((*inv)[j][i]);
    lim[j] = to_int64(floor(s * box));
  }
  LatticeVector c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = -lim[j];
  while (true) {
    Point x(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] != 0)
        for (std::size_t i = 0; i < n; ++i) x[i] += Rational(static_cast<long>(c[j])) * basis[j][i];
    visit(c, x);
    std::size_t j = 0;
    while (j < n && c[j] == lim[j]) {
      c[j] = -lim[j];
      ++j;
    }
    if (j == n) return;
    ++c[j];
  }
}

StableSystole stable_systole(const StableBall& b, const LatticeBasis& basis) {
  Rational u = gauge(b, basis.front());
  for (const auto& v : basis) u = std::min(u, gauge(b, v));
  std::optional<StableSystole> best;
  for_each_lattice_point(b, basis, u, [&](const LatticeVector& c, const Point& x) {
    if (c.is_zero()) return;
    const Rational g = gauge(b, x);
    if (!best || g < best->value || (g == best->value && canonical_less(c, best->argmin))) best = {g, c};
  });
  return *best;
}

bool interiors_overlap(const StableBall& b, const Point& shift) {
  const std::size_t n = b.rank();
  LpModel lp;
  std::vector<std::size_t> x(n);
  for (auto& xi : x) xi = lp.add_variable(true);
  const std::size_t t = lp.add_variable();
  for (const auto& a : b.facets()) {
    LpModel::Terms terms;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) terms.emplace_back(x[i], a[i]);
    terms.emplace_back(t, Rational(1));
    lp.add_constraint(terms, LpModel::Relation::le, Rational(1));
    lp.add_constraint(terms, LpModel::Relation::le, Rational(1) + dot(a, shift));
  }
  lp.add_constraint({{t, Rational(1)}}, LpModel::Relation::le, Rational(1));
  lp.set_objective({{t, Rational(1)}});
  const LpResult r = lp.maximize();
  return r.status == LpStatus::optimal && r.value > 0;
}

bool parallelohedron_check(const StableBall& b, const LatticeBasis& basis) {
  if (ball_volume(b) != covolume(basis)) return false;
  bool overlap = false;
  for_each_lattice_point(b, basis, Rational(2), [&](const LatticeVector& c, const Point& x) {
    if (overlap || c.is_zero() || gauge(b, x) >= 2) return;
    overlap = interiors_overlap(b, x);
  });
  return !overlap;
}

const char* to_string(DirichletClass c) {
  switch (c) {
    case DirichletClass::interior:
      return "interior";
    case DirichletClass::boundary:
      return "boundary";
    case DirichletClass::exterior:
      return "exterior";
  }
  return "?";
}

DirichletClass dirichlet_membership(const StableBall& b, const LatticeBasis& basis, const Point& p) {
  const Rational gp = gauge(b, p);
  if (gp == 0) return DirichletClass::interior;
  // |p - g| <= |p| forces |g| <= 2|p|, so no other g can compete.
  bool tie = false, beaten = false;
  for_each_lattice_point(b, basis, 2 * gp, [&](const LatticeVector& c, const Point& x) {
    if (c.is_zero()) return;
    const Rational gq = gauge(b, p - x);
    if (gq < gp) beaten = true;
    if (gq == gp) tie = true;
  });
  if (beaten) return DirichletClass::exterior;
  return tie ? DirichletClass::boundary : DirichletClass::interior;
}

nlohmann::json ball_to_json(const StableBall& b, bool with_facets) {
  auto rows = [](const std::vector<Point>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : pts) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : p) row.push_back(to_string(x));
      out.push_back(std::move(row));
    }
    return out;
  };
  nlohmann::json doc = {{"rank", b.rank()}, {"vertices", rows(b.vertices())}};
  if (with_facets) doc["facets"] = rows(b.facets());
  return doc;
}

StableBall ball_from_json(const nlohmann::json& doc) {
  try {
    for (const auto& [key, _] : doc.items())
      if (key != "rank" && key != "vertices" && key != "facets") throw InvalidModel("unknown key '" + key + "'");
    const auto rank = doc.at("rank").get<std::size_t>();
    std::vector<Point> pts;
    for (const auto& row : doc.at("vertices")) {
      Point p;
      for (const auto& x : row) p.push_back(parse_rational(x.get<std::string>()));
      pts.push_back(std::move(p));
    }
    return StableBall::hull(rank, std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidModel(std::string("stable ball document: ") + e.what());
  }
}

std::string ball_to_svg(const StableBall& b) {
  if (b.rank() != 2) throw PreconditionError("SVG output needs rank 2");
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : b.vertices()) pts.emplace_back(v[0].get_d(), v[1].get_d());
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) {
    return std::atan2(p.second, p.first) < std::atan2(q.second, q.first);
  });
  const double r = b.sup_radius().get_d();
  const double size = 400, margin = 20, s = (size / 2 - margin) / r;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  os << "<line x1=\"0\" y1=\"" << size / 2 << "\" x2=\"" << size << "\" y2=\"" << size / 2
     << "\" stroke=\"#bbb\"/>\n";
  os << "<line x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2 << "\" y2=\"" << size
     << "\" stroke=\"#bbb\"/>\n";
  os << "<polygon fill=\"#cde\" stroke=\"#235\" points=\"";
  for (const auto& [x, y] : pts) os << size / 2 + s * x << "," << size / 2 - s * y << " ";
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace znp
