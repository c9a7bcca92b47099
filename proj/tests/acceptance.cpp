// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Tolerances and sample sizes are fixed here and nowhere else.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "znp/constants.hpp"
#include "znp/cover_search.hpp"
#include "znp/explicit_metric.hpp"
#include "znp/gallery.hpp"
#include "znp/invariants.hpp"
#include "znp/mass.hpp"
#include "znp/path_splitting.hpp"
#include "znp/quotient_diameter.hpp"
#include "znp/random_instance.hpp"
#include "znp/stable_norm.hpp"
#include "znp/verify.hpp"

using namespace znp;

namespace {

// Criterion 1: brute-force limit scale and tolerance.
constexpr long kLimitScale = 1000;
const Rational kLimitTol(1, 500);
// Criterion 3.
constexpr unsigned kMargulisStartBits = 64;
constexpr unsigned kMargulisMaxBits = 128;
constexpr std::uint64_t kMargulisRandom = 100;
// Criterion 4: stabilization ratio and slack, plus the cover-node budget that
// caps the largest doubling rung per instance.
const Rational kStabRatio(105, 100);
const Rational kStabSlack(1, 1000000000);
constexpr std::size_t kStabNodeBudget = 1'000'000;
constexpr int kStabMaxDoublings = 8;
constexpr long kSqrtM = 10000;
// Criterion 5.
constexpr std::int64_t kAnnuliKmax = 20;
// Criterion 6.
constexpr std::uint64_t kMassRandom = 50;
constexpr std::int64_t kMassBox = 2;
// Criterion 8.
constexpr std::uint64_t kFeketeRandom = 25;
constexpr std::int64_t kFeketeK = 64;
constexpr std::size_t kMonteCarloSamples = 100'000;
constexpr double kMonteCarloSigmas = 3.0;
// Criterion 9.
constexpr int kPolylines = 50;

struct Outcome {
  bool ok = true;
  long cases = 0;
  std::string note;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

std::string str(const Rational& r) { return to_string(r); }

std::string str(const LatticeVector& v) { return v.to_string(); }

struct NamedGraph {
  std::string name;
  QuotientGraph g;
};

std::vector<NamedGraph> gallery_graphs() {
  std::vector<NamedGraph> out;
  for (auto& inst : gallery())
    if (auto* g = std::get_if<QuotientGraph>(&inst.object)) out.push_back({inst.name, *g});
  return out;
}

std::vector<NamedGraph> random_graphs(std::uint64_t count, const std::function<RandomCaps(std::uint64_t)>& caps) {
  std::vector<NamedGraph> out;
  for (std::uint64_t seed = 1; seed <= count; ++seed)
    out.push_back({"random-" + std::to_string(seed), random_instance(seed, caps(seed)).graph});
  return out;
}

RandomCaps ranked(std::size_t rank) {
  RandomCaps c;
  c.rank = rank;
  return c;
}

// Every nonzero vector with coordinates in [-box, box].
std::vector<LatticeVector> box_vectors(std::size_t n, std::int64_t box) {
  std::vector<LatticeVector> out;
  LatticeVector x(LatticeVector::Storage(n, -box));
  while (true) {
    if (!x.is_zero()) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) return out;
    ++x[i];
  }
}

// ---------------------------------------------------------------------------

Outcome collapsing_exactness() {
  Outcome o;
  for (std::int64_t k = 2; k <= 20; ++k) {
    const auto inst = build_collapsing(k);
    const auto& g = std::get<QuotientGraph>(inst.object);
    const std::string tag = "k=" + std::to_string(k);
    o.expect(quotient_diameter(g) == 1, tag + " codiam");
    o.expect(systole(g).value == 1, tag + " sys");
    const auto ball = stable_unit_ball(g);
    o.expect(stable_systole(ball, standard_basis(1)).value == ratio(1, k), tag + " stsys");
    o.expect(ball_volume(ball) == Rational(2 * k), tag + " omega");
    // Brute-force limit with the naive oracle.
    const long m = k * kLimitScale;
    const Rational lim = oracle::orbit_distance(g, LatticeVector{m}) / Rational(m);
    o.expect(abs(lim - ratio(1, k)) <= kLimitTol, tag + " limit " + str(lim));
    const Rational omega_emp = asymptotic_volume_empirical(g, Rational(m));
    o.expect(abs(omega_emp - Rational(2 * k)) <= Rational(2 * k) * kLimitTol, tag + " empirical omega " + str(omega_emp));

    const auto cay = build_cayley_Z({{1, Rational(1)}, {2 * k, Rational(1)}});
    const auto& c = std::get<QuotientGraph>(cay.object);
    o.expect(orbit_distance(c, LatticeVector{k}) == Rational(k), tag + " d(0,k)");
    o.expect(gauge(stable_unit_ball(c), LatticeVector{k}) == Rational(1, 2), tag + " gauge(k)");
  }
  o.note = "k=2..20, limit at m=" + std::to_string(kLimitScale);
  return o;
}

Outcome scaled_exactness() {
  Outcome o;
  for (std::int64_t k = 2; k <= 10; ++k) {
    for (std::int64_t p = 2; p <= 10; ++p) {
      const auto inst = build_scaled(k, p);
      const auto& g = std::get<QuotientGraph>(inst.object);
      const std::string tag = "(k,p)=(" + std::to_string(k) + "," + std::to_string(p) + ")";
      const auto ball = stable_unit_ball(g);
      const Rational omega = ball_volume(ball);
      o.expect(stable_systole(ball, standard_basis(1)).value == ratio(k, p), tag + " stsys");
      o.expect(quotient_diameter(g) == Rational(k), tag + " diam");
      o.expect(omega == ratio(2 * p, k), tag + " omega");
      o.expect(ratio(p, k) <= omega && omega <= ratio(2 * p, k), tag + " bracket");
    }
  }
  o.note = "81 instances";
  return o;
}

Outcome margulis() {
  Outcome o;
  long equalities = 0;
  auto run = [&](const std::string& name, unsigned long n, const Rational& stsys, const Rational& D,
                 const Rational& omega, bool tiles) {
    const auto checks = verify_margulis({n, stsys, D, omega, std::nullopt}, kMargulisStartBits, kMargulisMaxBits);
    for (const auto& c : checks) {
      o.expect(c.verdict == Verdict::holds, name + " " + c.name + " " + to_string(c.verdict));
      equalities += c.equal;
    }
    const bool want_lower = n == 1;
    const bool want_upper = n == 1 || tiles;
    o.expect(checks.at(0).equal == want_lower, name + " lower equality flag");
    o.expect(checks.at(1).equal == want_upper, name + " upper equality flag");
  };
  auto run_graph = [&](const std::string& name, const QuotientGraph& g) {
    const auto ball = stable_unit_ball(g);
    run(name, g.rank(), stable_systole(ball, standard_basis(g.rank())).value, quotient_diameter(g),
        ball_volume(ball), false);
  };
  long instances = 0;
  for (const auto& inst : gallery()) {
    if (const auto* g = std::get_if<QuotientGraph>(&inst.object)) {
      run_graph(inst.name, *g);
      ++instances;
    } else if (const auto* s = std::get_if<NormedLatticeSpace>(&inst.object)) {
      const auto r = invariant_report(*s);
      // The upper side is tight when balls of radius stsys/2 tile: the cube
      // lattices and the hexagonal norm.
      const bool tiles = inst.name.rfind("linf", 0) == 0 || inst.name == "hexagon";
      run(inst.name, r.n, r.stsys, r.codiam, r.omega, tiles);
      ++instances;
    }
  }
  for (const auto& [name, g] : random_graphs(kMargulisRandom, [](std::uint64_t s) { return ranked(1 + s % 3); })) {
    run_graph(name, g);
    ++instances;
  }
  o.note = std::to_string(instances) + " instances, " + std::to_string(equalities) + " equalities";
  return o;
}

// Deviation profile of one graph over the largest affordable doubling rung.
struct QbdProfile {
  Rational R_top;
  Rational c_half;  // max deviation over d < R_top/2
  Rational c_top;   // max deviation over d < R_top
  Rational R0;      // first distance at which c_half is attained
  std::size_t points = 0;
};

QbdProfile qbd_profile(const QuotientGraph& g, const StableBall& ball) {
  const std::size_t per_class = g.vertex_count() << g.rank();
  Rational R = g.max_edge_length();
  auto points = orbit_ball_scaled(g, R);
  for (int j = 0; j < kStabMaxDoublings && points.size() * per_class * 2 <= kStabNodeBudget; ++j) {
    R *= 2;
    points = orbit_ball_scaled(g, R);
  }
  QbdProfile p{R, 0, 0, 0, points.size()};
  const std::int64_t half = g.scaled_strict_bound(R / 2);
  std::vector<std::pair<std::int64_t, Rational>> devs;
  for (const auto& [gamma, d] : points) {
    Rational dev = abs(g.unscale(d) - gauge(ball, gamma));
    if (p.c_top < dev) p.c_top = dev;
    if (d <= half && p.c_half < dev) p.c_half = dev;
    devs.emplace_back(d, std::move(dev));
  }
  std::int64_t first = half;
  for (const auto& [d, dev] : devs)
    if (d <= half && dev == p.c_half && d < first) first = d;
  p.R0 = g.unscale(first);
  return p;
}

struct GraphFacts {
  std::string name;
  QuotientGraph g;
  StableBall ball;
  Rational D;
  Rational omega;
  QbdProfile qbd;
};

GraphFacts facts(const NamedGraph& ng) {
  StableBall ball = stable_unit_ball(ng.g);
  GraphFacts f{ng.name, ng.g, ball, quotient_diameter(ng.g), ball_volume(ball), {}};
  f.qbd = qbd_profile(ng.g, ball);
  return f;
}

std::vector<GraphFacts> qbd_instances() {
  std::vector<GraphFacts> out;
  for (const auto& ng : gallery_graphs()) out.push_back(facts(ng));
  for (const auto& ng : random_graphs(kFeketeRandom, [](std::uint64_t s) { return ranked(1 + s % 2); }))
    out.push_back(facts(ng));
  return out;
}

Outcome qbd(const std::vector<GraphFacts>& all) {
  Outcome o;
  std::string worst;
  Rational worst_c(-1);
  for (const auto& f : all) {
    const auto& q = f.qbd;
    o.expect(q.c_top <= kStabRatio * q.c_half + kStabSlack,
             f.name + " c(" + str(q.R_top) + ")=" + str(q.c_top) + " vs c(" + str(q.R_top / 2) + ")=" + str(q.c_half));
    const Rational bound = c_simplified(ParamSet{f.g.rank(), f.D, f.omega, std::nullopt});
    o.expect(q.c_top <= bound, f.name + " c_hat above c_simplified");
    if (worst_c < q.c_top) {
      worst_c = q.c_top;
      worst = f.name + " c_hat=" + str(q.c_top) + " R0=" + str(q.R0) + " R=" + str(q.R_top);
    }
  }
  const auto dev = explicit_metric_deviation(sqrt_metric(), kSqrtM);
  o.expect(dev.sup.is_point() && dev.sup.lo() == 100, "sqrt metric deviation " + dev.sup.to_string());
  o.note = std::to_string(all.size()) + " graphs, largest " + worst + "; sqrt metric sup " + dev.sup.to_string();
  return o;
}

Outcome annuli() {
  Outcome o;
  std::ostringstream note;
  for (std::size_t n : {1, 2}) {
    const auto inst = build_rose(n);
    const auto& g = std::get<QuotientGraph>(inst.object);
    const auto ball = stable_unit_ball(g);
    const Rational D = quotient_diameter(g);
    const Rational omega = ball_volume(ball);
    const Rational c_hat = qbd_deviation(g, ball, Rational(20)).value;
    const Rational delta = 4 * Rational(n) * D + c_hat + 1;
    const auto res = verify_annuli(g, {n, D, omega, c_hat}, delta, kAnnuliKmax);
    const std::string tag = inst.name;
    o.expect(delta.get_den() == 1, tag + " integral Delta");
    const long step = delta.get_num().get_si();
    for (std::int64_t k = 0; k <= kAnnuliKmax; ++k) {
      const long expect = oracle::l1_count(n, k * step, (k + 1) * step);
      o.expect(res.counts.at(static_cast<std::size_t>(k)) == expect,
               tag + " count k=" + std::to_string(k) + " " + std::to_string(res.counts[k]) + " vs " +
                   std::to_string(expect));
    }
    o.expect(res.shells.size() == static_cast<std::size_t>(kAnnuliKmax), tag + " shell count");
    for (const auto& s : res.shells) o.expect(s.verdict == Verdict::holds, tag + " " + s.name);
    o.expect(res.symbolic_ok, tag + " c_hat <= c_simplified");
    note << tag << " Delta=" << str(delta) << " ";
  }
  note << "k<=" << kAnnuliKmax;
  o.note = note.str();
  return o;
}

Outcome mass_components() {
  Outcome o;
  long classes = 0;
  auto components = [&](const std::string& tag, const QuotientGraph& g, const MassEntry& m) {
    const auto ball = stable_unit_ball(g);
    const Rational omega = ball_volume(ball);
    const ComponentsInputs in{g.rank(), systole(g).value, quotient_diameter(g), omega, omega};
    for (const auto& c : verify_components(m, in).checks)
      o.expect(c.verdict == Verdict::holds, tag + " " + c.name + " " + to_string(c.verdict));
  };
  for (std::uint64_t seed = 1; seed <= kMassRandom; ++seed) {
    RandomCaps caps;
    caps.rank = 1 + seed % 3;
    caps.max_vertices = 3;
    caps.max_edges = caps.rank + 3;
    caps.max_numerator = 3;
    caps.max_denominator = 1;
    const QuotientGraph g = random_instance(seed, caps).graph;
    const auto targets = box_vectors(g.rank(), kMassBox);
    const auto dists = orbit_distances(g, targets);
    Rational limit(0);
    for (const auto& d : dists) limit = std::max(limit, d);
    const oracle::MassEnumerator enumerate(g, limit);
    for (const auto& gamma : targets) {
      const MassEntry dp = mass(g, gamma);
      const MassEntry ex = enumerate(gamma);
      const std::string tag = "random-" + std::to_string(seed) + " " + str(gamma);
      o.expect(dp == ex, tag + " dp (" + str(dp.mass) + "," + std::to_string(dp.parts) + ") vs enumeration (" +
                             str(ex.mass) + "," + std::to_string(ex.parts) + ")");
      components(tag, g, dp);
      ++classes;
    }
  }
  for (std::size_t n : {2, 3, 4}) {
    const auto inst = build_star_of_loops(n, Rational(5), Rational(1));
    const auto& g = std::get<QuotientGraph>(inst.object);
    const LatticeVector ones(LatticeVector::Storage(n, 1));
    const MassEntry m = mass(g, ones);
    o.expect(m.parts == static_cast<std::int64_t>(n) && m.mass == Rational(static_cast<long>(n)),
             inst.name + " mass/parts");
    components(inst.name, g, m);
  }
  o.note = std::to_string(classes) + " random classes, star n=2,3,4";
  return o;
}

Outcome constants() {
  Outcome o;
  auto P = [](unsigned long n, Rational D, Rational Om) { return ParamSet{n, std::move(D), std::move(Om), std::nullopt}; };
  auto fact = [](unsigned long n) {
    Integer f = 1;
    for (unsigned long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  auto ipow = [](const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  };
  auto two = [&](unsigned long e) { return ipow(Integer(2), e); };

  // Direct integer evaluation for integral D and Omega.
  for (unsigned long n = 1; n <= 3; ++n) {
    for (long D = 1; D <= 3; ++D) {
      for (long Om = 1; Om <= 3; ++Om) {
        const Integer w1 = Integer(Om) * ipow(Integer(D), n) + 1;
        const Integer c = two(n * n + 6 * n + 10) * Integer(n * n) * ipow(fact(n), n + 2) * D * ipow(w1, n + 4);
        const Integer N = two(18 * n * n * n) * ipow(Integer(n), 2 * n) * ipow(fact(n), n * (n + 2)) * ipow(w1, 6 * n * n);
        const Integer floor_c = two(n * n + 6 * n + 8) * Integer(n * n) * ipow(fact(n), n) * D;
        const ParamSet p = P(n, Rational(D), Rational(Om));
        const std::string tag = "(n,D,Om)=(" + std::to_string(n) + "," + std::to_string(D) + "," + std::to_string(Om) + ")";
        o.expect(c_simplified(p) == Rational(c), tag + " c_simplified");
        o.expect(N_threshold(p) == N, tag + " N_threshold");
        o.expect(c_floor(p) == Rational(floor_c), tag + " c_floor");
        o.expect(c_simplified(p) >= Rational(floor_c), tag + " floor");
      }
    }
  }
  o.expect(c_simplified(P(1, 1, 2)) == Rational(31850496), "c_simplified(1,1,2)");
  o.expect(N_threshold(P(1, 1, 2)) == Integer(191102976), "N_threshold(1,1,2)");

  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const unsigned long n = 1 + rng() % 3;
    const Rational lam = ratio(static_cast<long>(rng() % 17) + 1, static_cast<long>(rng() % 13) + 1);
    const Rational D = ratio(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
    const Rational Om = ratio(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5) + 1);
    const Rational sig = ratio(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 4) + 1);
    const Rational l(static_cast<long>(rng() % 30) + 1);
    const Rational ln = pow(lam, static_cast<long>(n));
    const ParamSet a{n, D, Om, sig};
    const ParamSet b{n, lam * D, Om / ln, lam * sig};
    const std::string tag = "homogeneity t=" + std::to_string(t);
    o.expect(c_simplified(b) == lam * c_simplified(a), tag + " c_simplified");
    o.expect(c_full(b).lo() == lam * c_full(a).lo() && c_full(b).hi() == lam * c_full(a).hi(), tag + " c_full");
    o.expect(sub_codiameter_bound(b) == lam * sub_codiameter_bound(a), tag + " sub-codiameter");
    o.expect(N_threshold(b) == N_threshold(a), tag + " N_threshold");
    o.expect(M_const(b) == M_const(a) / lam, tag + " M");
    const auto r1 = refined_bound(n, Om / ln, lam * l), r0 = refined_bound(n, Om, l);
    o.expect(r1.lo() == r0.lo() && r1.hi() == r0.hi(), tag + " refined bound");
    const auto s1 = sublinear_bound(n, Om / ln, lam * l), s0 = sublinear_bound(n, Om, l);
    o.expect(s1.lo() == s0.lo() && s1.hi() == s0.hi(), tag + " sublinear bound");
    o.expect(c_simplified(a) >= c_floor(a) && c_simplified(b) >= c_floor(b), tag + " floor");
  }
  o.note = "27 integer grids, 100 rescalings";
  return o;
}

Outcome stable_ball_consistency(const std::vector<GraphFacts>& all) {
  Outcome o;
  long pairs = 0;
  auto volume = [&](const std::string& tag, const StableBall& ball) {
    const double exact = ball_volume(ball).get_d();
    const auto mc = monte_carlo_volume(ball, kMonteCarloSamples);
    o.expect(std::abs(mc.estimate - exact) <= kMonteCarloSigmas * mc.standard_error,
             tag + " volume " + std::to_string(exact) + " vs MC " + std::to_string(mc.estimate) + " +- " +
                 std::to_string(mc.standard_error));
  };
  for (const auto& f : all) {
    const std::size_t n = f.g.rank();
    std::vector<LatticeVector> gammas;
    for (const auto& v : box_vectors(n, 1)) {
      std::size_t i = 0;
      while (v[i] == 0) ++i;
      if (v[i] > 0 && (n <= 2 || v.norm_1() == 1)) gammas.push_back(v);
    }
    for (const auto& gamma : gammas) {
      std::vector<LatticeVector> multiples;
      for (std::int64_t k = 1; k <= kFeketeK; ++k) multiples.push_back(k * gamma);
      const auto d = orbit_distances(f.g, multiples);
      const Rational st = gauge(f.ball, gamma);
      const std::string tag = f.name + " " + str(gamma);
      for (std::int64_t k = 1; k <= kFeketeK; ++k)
        o.expect(st <= d[k - 1] / Rational(k), tag + " Fekete k=" + std::to_string(k));
      o.expect(abs(d.back() / Rational(kFeketeK) - st) <= f.qbd.c_top / Rational(kFeketeK),
               tag + " d(64g)/64=" + str(d.back() / Rational(kFeketeK)) + " gauge=" + str(st));
      ++pairs;
    }
    volume(f.name, f.ball);
  }
  long lattices = 0;
  for (const auto& inst : gallery()) {
    if (const auto* s = std::get_if<NormedLatticeSpace>(&inst.object)) {
      volume(inst.name, s->ball);
      ++lattices;
    }
  }
  o.note = std::to_string(all.size()) + " graphs (" + std::to_string(pairs) + " directions), " +
           std::to_string(lattices) + " normed lattices";
  return o;
}

Outcome interval_selection() {
  Outcome o;
  std::mt19937_64 rng(9);
  long segments = 0;
  for (int t = 0; t < kPolylines; ++t) {
    const std::size_t n = 1 + rng() % 2;
    const std::size_t segs = 1 + rng() % 6;
    Polyline p{{Rational(0)}, {Point(n, Rational(0))}};
    for (std::size_t s = 0; s < segs; ++s) {
      Point step(n);
      for (auto& x : step) x = ratio(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
      // |step|_1 + 1 dominates the Euclidean step, so the parametrization stays 1-Lipschitz.
      Rational dt(1);
      for (const auto& x : step) dt += abs(x);
      Point next = p.points.back();
      for (std::size_t i = 0; i < n; ++i) next[i] += step[i];
      p.params.push_back(p.params.back() + dt);
      p.points.push_back(next);
    }
    segments += static_cast<long>(segs);
    const auto sel = bp_search(p);
    o.expect(sel.has_value(), "polyline " + std::to_string(t) + ": search found no selection");
    if (sel) o.expect(bp_verify(p, *sel), "polyline " + std::to_string(t) + ": verification failed");
  }
  o.note = std::to_string(kPolylines) + " polylines, " + std::to_string(segments) + " segments";
  return o;
}

}  // namespace

int main() {
  bool all_ok = true;
  std::optional<std::vector<GraphFacts>> shared;
  auto graphs = [&]() -> const std::vector<GraphFacts>& {
    if (!shared) shared = qbd_instances();
    return *shared;
  };
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, collapsing_exactness},
      {2, scaled_exactness},
      {3, margulis},
      {4, [&] { return qbd(graphs()); }},
      {5, annuli},
      {6, mass_components},
      {7, constants},
      {8, [&] { return stable_ball_consistency(graphs()); }},
      {9, interval_selection},
  };
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS " : "FAIL ") << id << ": " << o.cases << " checks";
    if (!o.note.empty()) line << "; " << o.note;
    if (!o.ok) line << "; first failure: " << o.first_failure;
    line << " [" << std::fixed;
    line.precision(1);
    line << secs << " s]";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
