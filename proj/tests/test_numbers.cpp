#include <doctest.h>

#include "znp/errors.hpp"
#include "znp/interval.hpp"
#include "znp/lattice_vector.hpp"
#include "znp/linalg.hpp"
#include "znp/lp.hpp"
#include "znp/rational.hpp"

using namespace znp;

TEST_CASE("rational literals parse strictly") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidModel);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidModel);
  CHECK_THROWS_AS(parse_rational(" 1"), InvalidModel);
  CHECK_THROWS_AS(parse_rational(""), InvalidModel);
  CHECK(to_string(ratio(6, 4)) == "3/2");
}

TEST_CASE("lattice vector arithmetic is checked") {
  LatticeVector a{1, -2}, b{3, 4};
  CHECK(a + b == LatticeVector{4, 2});
  CHECK(-a == LatticeVector{-1, 2});
  CHECK(a.norm_1() == 3);
  CHECK(b.norm_inf() == 4);
  LatticeVector big{INT64_MAX};
  CHECK_THROWS_AS(big + LatticeVector{1}, std::overflow_error);
  CHECK(canonical_less(LatticeVector{1, 0}, LatticeVector{0, 1}));
  CHECK(canonical_less(LatticeVector{0, 1}, LatticeVector{0, -1}));
  CHECK(canonical_less(LatticeVector{0, 0}, LatticeVector{1, 0}));
}

TEST_CASE("nth roots are exact on perfect powers and tight otherwise") {
  CHECK(nth_root(Rational(16), 2).is_point());
  CHECK(nth_root(Rational(16), 2).lo() == 4);
  CHECK(nth_root(Rational(27, 8), 3).lo() == Rational(3, 2));
  const RationalInterval r2 = nth_root(Rational(2), 2, 64);
  CHECK(r2.lo() * r2.lo() < 2);
  CHECK(r2.hi() * r2.hi() > 2);
  CHECK(r2.width() <= Rational(1) / Rational(Integer(1) << 64));
  // Doubling the precision nests the enclosure.
  const RationalInterval fine = nth_root(Rational(2), 2, 128);
  CHECK(r2.contains(fine));
}

TEST_CASE("refined comparisons decide, detect equality, or stay undecided") {
  auto sqrt2 = [](unsigned b) { return nth_root(Rational(2), 2, b); };
  auto c = [](Rational x) { return IntervalFn([x](unsigned) { return RationalInterval(x); }); };
  CHECK(compare_le(sqrt2, c(Rational(3, 2))).verdict == Verdict::holds);
  CHECK(compare_le(c(Rational(3, 2)), sqrt2).verdict == Verdict::fails);
  const auto eq = compare_le(c(Rational(2)), [](unsigned b) { return nth_root(Rational(4), 2, b); });
  CHECK(eq.verdict == Verdict::holds);
  CHECK(eq.equal);
  CHECK(compare_lt(c(Rational(2)), c(Rational(2))).verdict == Verdict::fails);
  // sqrt2 * sqrt2 vs 2 never collapses to a point.
  auto prod = [](unsigned b) { return nth_root(Rational(2), 2, b) * nth_root(Rational(2), 2, b); };
  CHECK(compare_le(prod, c(Rational(2))).verdict == Verdict::undecided);
}

TEST_CASE("exact LP solves small programs") {
  LpModel lp;
  auto x = lp.add_variable(), y = lp.add_variable();
  lp.add_constraint({{x, 1}, {y, 1}}, LpModel::Relation::le, 4);
  lp.add_constraint({{x, 1}, {y, 3}}, LpModel::Relation::le, 6);
  lp.set_objective({{x, 3}, {y, 2}});
  auto r = lp.maximize();
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 12);

  LpModel bad;
  auto z = bad.add_variable();
  bad.add_constraint({{z, 1}}, LpModel::Relation::ge, 2);
  bad.add_constraint({{z, 1}}, LpModel::Relation::le, 1);
  CHECK(bad.feasible_point().status == LpStatus::infeasible);

  LpModel free_var;
  auto w = free_var.add_variable(true);
  free_var.add_constraint({{w, 1}}, LpModel::Relation::eq, Rational(-5, 3));
  auto f = free_var.feasible_point();
  REQUIRE(f.status != LpStatus::infeasible);
  CHECK(f.x[w] == Rational(-5, 3));

  LpModel unb;
  auto u = unb.add_variable();
  unb.set_objective({{u, 1}});
  CHECK(unb.maximize().status == LpStatus::unbounded);
}

TEST_CASE("linear algebra helpers") {
  Matrix m = {{2, 1}, {1, 2}};
  CHECK(determinant(m) == 3);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(2, 3));
  CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
  auto x = solve(m, {3, 3});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  auto perp = orthogonal_complement_vector({{1, 1}}, 2);
  REQUIRE(perp);
  CHECK(dot(*perp, {1, 1}) == 0);
}
