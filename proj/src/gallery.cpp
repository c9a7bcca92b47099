#include "znp/gallery.hpp"

#include "znp/errors.hpp"
#include "znp/invariants.hpp"
#include "znp/quotient_diameter.hpp"
#include "znp/stable_norm.hpp"

namespace znp {

GalleryInstance build_rose(std::size_t n) {
  if (n < 1) throw PreconditionError("rose: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({0, 0, Rational(1), LatticeVector::unit(n, i)});
  const Rational omega = pow(Rational(2), static_cast<long>(n)) / Rational(factorial(n));
  return {"rose-" + std::to_string(n),
          QuotientGraph(n, {"v0"}, std::move(edges)),
          {{"sys", 1}, {"stsys", 1}, {"omega", omega}, {"codiam", n == 1 ? Rational(1, 2) : Rational(1)}}};
}

GalleryInstance build_cayley_Z(const std::vector<std::pair<std::int64_t, Rational>>& gens) {
  if (gens.empty()) throw PreconditionError("cayley_Z: need at least one generator");
  std::vector<Edge> edges;
  std::string name = "cayley-Z";
  for (const auto& [v, len] : gens) {
    if (len <= 0) throw PreconditionError("cayley_Z: lengths must be positive");
    edges.push_back({0, 0, len, LatticeVector{v}});
    name += "-" + std::to_string(v);
  }
  return {name, QuotientGraph(1, {"v0"}, std::move(edges)), {}};
}

GalleryInstance build_collapsing(std::int64_t k) {
  if (k < 2) throw PreconditionError("collapsing example needs k >= 2");
  GalleryInstance g = build_cayley_Z({{1, Rational(1)}, {k, Rational(1)}});
  g.name = "collapsing-" + std::to_string(k);
  g.expected = {{"codiam", 1}, {"sys", 1}, {"stsys", ratio(1, k)}, {"omega", Rational(2 * k)}};
  return g;
}

GalleryInstance build_scaled(std::int64_t k, std::int64_t p) {
  if (k < 1 || p < 2) throw PreconditionError("scaled example needs k >= 1, p >= 2");
  GalleryInstance g = build_cayley_Z({{1, Rational(k)}, {p, Rational(k)}});
  g.name = "scaled-" + std::to_string(k) + "-" + std::to_string(p);
  g.expected = {{"codiam", Rational(k)},
                {"sys", Rational(k)},
                {"stsys", ratio(k, p)},
                {"omega", ratio(2 * p, k)}};
  return g;
}

GalleryInstance build_star_of_loops(std::size_t n, const Rational& l, const Rational& sigma) {
  if (n < 1 || l <= 0 || sigma <= 0) throw PreconditionError("star_of_loops: bad parameters");
  std::vector<std::string> names = {"c"};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i + 1));
    edges.push_back({0, i + 1, l, LatticeVector(n)});
    edges.push_back({i + 1, i + 1, sigma, LatticeVector::unit(n, i)});
  }
  const Rational omega =
      pow(2 / sigma, static_cast<long>(n)) / Rational(factorial(n));
  const Rational codiam = n == 1 ? Rational(l + sigma / 2) : Rational(2 * l + sigma);
  return {"star-" + std::to_string(n) + "-" + to_string(l) + "-" + to_string(sigma),
          QuotientGraph(n, std::move(names), std::move(edges), 0),
          {{"sys", sigma}, {"stsys", sigma}, {"omega", omega}, {"codiam", codiam}}};
}

GalleryInstance build_sqrt_metric() { return {"sqrt-metric", sqrt_metric(), {{"deviation_10000", 100}}}; }

GalleryInstance build_normed_lattice(NormedLatticeSpace space) {
  std::string name = space.name;
  return {name, std::move(space), {}};
}

std::vector<GalleryInstance> gallery() {
  std::vector<GalleryInstance> out;
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(build_rose(n));
  for (std::int64_t k : {2, 3, 5}) out.push_back(build_collapsing(k));
  {
    GalleryInstance g = build_cayley_Z({{1, Rational(1)}, {8, Rational(1)}});
    g.expected = {{"sys", 1}, {"stsys", Rational(1, 8)}, {"omega", 16}, {"codiam", 1}};
    out.push_back(std::move(g));
  }
  out.push_back(build_scaled(4, 2));
  out.push_back(build_scaled(3, 5));
  out.push_back(build_star_of_loops(2, Rational(5), Rational(1)));
  out.push_back(build_star_of_loops(3, Rational(5), Rational(1)));
  out.push_back(build_sqrt_metric());

  GalleryInstance linf2 = build_normed_lattice(linf_lattice(2));
  linf2.expected = {{"stsys", 1}, {"omega", 4}, {"codiam", Rational(1, 2)}};
  out.push_back(std::move(linf2));
  GalleryInstance linf3 = build_normed_lattice(linf_lattice(3));
  linf3.expected = {{"stsys", 1}, {"omega", 8}, {"codiam", Rational(1, 2)}};
  out.push_back(std::move(linf3));
  GalleryInstance hex = build_normed_lattice(hexagon_lattice());
  hex.expected = {{"stsys", 2}, {"omega", 1}, {"codiam", 1}};
  out.push_back(std::move(hex));
  // sigma Z x 2D Z with the l1 norm, sigma = 1, D = 1.
  GalleryInstance l1 = build_normed_lattice(weighted_l1_lattice({Rational(1), Rational(1)}, {Rational(1), Rational(2)}));
  l1.expected = {{"stsys", 1}, {"omega", 1}, {"codiam", Rational(3, 2)}};
  out.push_back(std::move(l1));
  return out;
}

std::vector<ExpectationResult> check_expectations(const GalleryInstance& inst) {
  std::map<std::string, Rational> actual;
  if (const auto* g = std::get_if<QuotientGraph>(&inst.object)) {
    std::optional<StableBall> ball;
    auto get_ball = [&]() -> const StableBall& {
      if (!ball) ball = stable_unit_ball(*g);
      return *ball;
    };
    for (const auto& [key, _] : inst.expected) {
      if (key == "sys") actual[key] = systole(*g).value;
      else if (key == "stsys") actual[key] = stable_systole(get_ball(), standard_basis(g->rank())).value;
      else if (key == "codiam") actual[key] = quotient_diameter(*g);
      else if (key == "omega") actual[key] = ball_volume(get_ball());
    }
  } else if (const auto* s = std::get_if<NormedLatticeSpace>(&inst.object)) {
    for (const auto& [key, _] : inst.expected) {
      if (key == "stsys" || key == "sys") actual[key] = stable_systole(s->ball, s->basis).value;
      else if (key == "codiam") actual[key] = s->codiameter;
      else if (key == "omega") actual[key] = ball_volume(s->ball) / covolume(s->basis);
    }
  } else if (const auto* m = std::get_if<ExplicitOrbitMetric>(&inst.object)) {
    for (const auto& [key, _] : inst.expected) {
      if (key == "deviation_10000") {
        const auto dev = explicit_metric_deviation(*m, 10000);
        if (dev.sup.is_point()) actual[key] = dev.sup.lo();
      }
    }
  }
  std::vector<ExpectationResult> out;
  for (const auto& [key, want] : inst.expected) {
    auto it = actual.find(key);
    if (it == actual.end()) {
      out.push_back({key, want, Rational(-1), false});
      continue;
    }
    out.push_back({key, want, it->second, it->second == want});
  }
  return out;
}

}  // namespace znp
