#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "znp/errors.hpp"
#include "znp/invariants.hpp"
#include "znp/quotient_diameter.hpp"
#include "znp/random_instance.hpp"
#include "znp/stable_norm.hpp"
#include "znp/verify.hpp"

using namespace znp;
using testing::q;
using testing::rose_Z;

namespace {

QuotientGraph star(std::size_t n) { return testing::graph_of(build_star_of_loops(n, q(5), q(1))); }

LatticeVector ones(std::size_t n) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("systole examples") {
  CHECK(systole(rose_Z({1, 4})).value == 1);
  const auto s = systole(testing::graph_of(build_rose(3)));
  CHECK(s.value == 1);
  CHECK(s.gamma == LatticeVector{1, 0, 0});
  CHECK(systole(rose_Z({1, 3}, q(6))).value == 6);
  // The shortest essential loop avoids the base vertex here.
  CHECK(systole(star(2)).value == 1);
}

TEST_CASE("systole is unchanged by subdividing edges") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RandomCaps caps;
    caps.rank = 1 + seed % 3;
    caps.max_vertices = 4;
    caps.max_edges = caps.rank + 5;
    const QuotientGraph g = random_instance(seed, caps).graph;
    CHECK(systole(g.subdivided(4)).value == systole(g).value);
  }
}

TEST_CASE("asymptotic volume") {
  CHECK(asymptotic_volume_exact(testing::graph_of(build_rose(3))) == q(4, 3));
  CHECK(asymptotic_volume_exact(rose_Z({1, 7})) == 14);
  CHECK(asymptotic_volume_exact(rose_Z({1, 3}, q(5))) == q(6, 5));
  CHECK(asymptotic_volume_empirical(rose_Z({1}), q(100)) == q(199, 100));
  CHECK(asymptotic_volume_empirical(rose_Z({1}), q(1)) == 1);
  CHECK(asymptotic_volume_empirical(testing::graph_of(build_rose(2)), q(50)) == q(4901, 2500));
}

TEST_CASE("empirical volume approaches the exact one") {
  for (const auto& inst : {build_rose(2), build_collapsing(3), build_star_of_loops(2, q(2), q(1))}) {
    const QuotientGraph g = testing::graph_of(inst);
    const Rational exact = asymptotic_volume_exact(g);
    const Rational emp = asymptotic_volume_empirical(g, q(200));
    CHECK(abs(emp - exact) <= exact / 10);
  }
  const QuotientGraph g3 = testing::graph_of(build_rose(3));
  const Rational exact = asymptotic_volume_exact(g3);
  CHECK(abs(asymptotic_volume_empirical(g3, q(60)) - exact) <= exact / 5);
}

TEST_CASE("QBD deviation examples") {
  CHECK(qbd_deviation(testing::graph_of(build_rose(2)), q(15)).value == 0);
  const auto d = qbd_deviation(rose_Z({1, 3}), q(20));
  CHECK(d.value == q(4, 3));
  CHECK(d.argmax == LatticeVector{2});
  const QuotientGraph s3 = star(3);
  const Rational d111 = orbit_distance(s3, ones(3));
  CHECK(d111 == 33);
  CHECK(d111 - gauge(stable_unit_ball(s3), ones(3)) == 30);
}

TEST_CASE("mass examples") {
  CHECK(mass(rose_Z({1, 3}), LatticeVector{5}) == MassEntry{q(3), 1});
  CHECK(mass(rose_Z({1, 3}), LatticeVector{0}) == MassEntry{q(0), 0});
  for (std::size_t n : {2u, 3u}) CHECK(mass(star(n), ones(n)) == MassEntry{q(static_cast<long>(n)), static_cast<std::int64_t>(n)});
  // Single vertex: mass is the orbit distance.
  const QuotientGraph r2 = testing::graph_of(build_rose(2));
  for (const LatticeVector& g : {LatticeVector{2, -1}, LatticeVector{0, 3}})
    CHECK(mass(r2, g).mass == orbit_distance(r2, g));
}

TEST_CASE("mass DP, mass table and brute force agree; mass sits between gauge and distance") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    RandomCaps caps;
    caps.rank = 1 + seed % 3;
    caps.max_vertices = 3;
    caps.max_edges = caps.rank + 3;
    const QuotientGraph g = random_instance(seed, caps).graph;
    const StableBall b = stable_unit_ball(g);
    const std::int64_t r = caps.rank == 3 ? 1 : 2;
    std::vector<LatticeVector> gammas;
    LatticeVector x(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) x[i] = -r;
    while (true) {
      gammas.push_back(x);
      std::size_t i = 0;
      while (i < g.rank() && x[i] == r) x[i++] = -r;
      if (i == g.rank()) break;
      ++x[i];
    }
    Rational top(0);
    std::map<LatticeVector, MassEntry> m;
    for (const auto& gamma : gammas) {
      m[gamma] = mass(g, gamma);
      top = std::max(top, m[gamma].mass);
    }
    const MassTable table(g, top + 1);
    for (const auto& gamma : gammas) {
      CAPTURE(seed);
      CAPTURE(gamma);
      CHECK(m[gamma] == oracle::partial_sum_mass(g, gamma));
      CHECK(table.lookup(gamma) == std::optional<MassEntry>(m[gamma]));
      CHECK(m[gamma] == m[-gamma]);
      CHECK(gauge(b, gamma) <= m[gamma].mass);
      CHECK(m[gamma].mass <= orbit_distance(g, gamma));
    }
    for (const auto& a : gammas)
      for (const auto& c : gammas) {
        if (!m.count(a + c)) continue;
        CHECK(m[a + c].mass <= m[a].mass + m[c].mass);
        if (m[a + c].mass == m[a].mass + m[c].mass) CHECK(m[a + c].parts <= m[a].parts + m[c].parts);
      }
  }
}

TEST_CASE("annuli counts") {
  const auto c1 = annuli_counts(rose_Z({1}), q(2), 3);
  CHECK(c1 == std::vector<std::int64_t>{3, 4, 4, 4});
  const auto c2 = annuli_counts(testing::graph_of(build_rose(2)), q(3), 2);
  CHECK(c2[1] == oracle::l1_count(2, 3, 6));
  CHECK(c2[1] == 48);
  const MassTable small(rose_Z({1}), q(5));
  CHECK_THROWS_AS(annuli_counts(small, q(2), 3), PreconditionError);
}

TEST_CASE("Margulis inequalities") {
  auto run = [](unsigned long n, Rational stsys, Rational D, Rational w) {
    return verify_margulis({n, std::move(stsys), std::move(D), std::move(w), std::nullopt});
  };
  // Rank one: both sides equal 2/omega.
  auto r1 = run(1, q(1, 3), q(1), q(6));
  CHECK(worst(r1) == Verdict::holds);
  CHECK(r1[0].equal);
  CHECK(r1[1].equal);
  // Standard rose of rank 2: stsys 1, omega 2, D 1.
  auto r2 = run(2, q(1), q(1), q(2));
  CHECK(worst(r2) == Verdict::holds);
  CHECK_FALSE(r2[1].equal);
  // l-infinity lattice: equality on the upper side.
  auto r3 = run(2, q(1), q(1, 2), q(4));
  CHECK(worst(r3) == Verdict::holds);
  CHECK(r3[1].equal);
  // A violated upper bound is caught.
  CHECK(run(2, q(2), q(1), q(2))[1].verdict == Verdict::fails);
  auto with_omega = verify_margulis({2, q(1), q(1), q(2), q(3)});
  CHECK(with_omega.size() == 3);
  CHECK(worst(with_omega) == Verdict::holds);
}

TEST_CASE("annuli verification") {
  const AnnuliInputs in1{1, q(1, 2), q(2), q(0)};
  const AnnuliCheck a = verify_annuli(rose_Z({1}), in1, q(3), 5);
  CHECK(a.A == 6);
  CHECK(a.B == 18);
  CHECK(a.counts[1] == 6);
  CHECK(worst(a.shells) == Verdict::holds);
  CHECK(a.shells.size() == 5);
  CHECK(a.symbolic_ok);
  CHECK_THROWS_AS(verify_annuli(rose_Z({1}), in1, q(2), 5), PreconditionError);
  const AnnuliInputs in2{2, q(1), q(2), q(0)};
  CHECK(worst(verify_annuli(testing::graph_of(build_rose(2)), in2, q(9), 6).shells) == Verdict::holds);
}

TEST_CASE("component bounds") {
  const ComponentsInputs star_in{3, q(1), q(11), q(4, 3), std::nullopt};
  const auto c = verify_components(star(3), ones(3), star_in);
  CHECK(c.mass == MassEntry{q(3), 3});
  CHECK(worst(c.checks) == Verdict::holds);
  CHECK(c.checks[0].equal);  // N = |gamma| / sys

  const auto zero = verify_components(star(3), LatticeVector(3), star_in);
  CHECK(zero.mass.parts == 0);
  CHECK(worst(zero.checks) == Verdict::holds);

  const auto seven = verify_components(rose_Z({1}), LatticeVector{7}, {1, q(1), q(1, 2), q(2), std::nullopt});
  CHECK(seven.mass.parts == 1);
  CHECK(worst(seven.checks) == Verdict::holds);
}

TEST_CASE("invariant report and scale behaviour") {
  const QuotientGraph g = testing::graph_of(build_star_of_loops(2, q(2), q(1)));
  const auto r = invariant_report("star", g, q(10));
  CHECK(r.overall() == Verdict::holds);
  CHECK(r.stsys <= r.sys);
  CHECK(r.sys <= 2 * r.codiam);

  const Rational lambda(5, 3);
  const auto s = invariant_report("star-scaled", g.scaled(lambda), std::nullopt);
  CHECK(s.sys == lambda * r.sys);
  CHECK(s.stsys == lambda * r.stsys);
  CHECK(s.codiam == lambda * r.codiam);
  CHECK(s.omega == r.omega / (lambda * lambda));
  CHECK(s.omega * s.codiam * s.codiam == r.omega * r.codiam * r.codiam);
  CHECK(mass(g.scaled(lambda), LatticeVector{1, 1}).mass == lambda * mass(g, LatticeVector{1, 1}).mass);
}
