#include <doctest.h>

#include "helpers.hpp"
#include "znp/errors.hpp"
#include "znp/model_io.hpp"
#include "znp/random_instance.hpp"
#include "znp/report.hpp"

using namespace znp;
using testing::q;

TEST_CASE("every gallery expectation matches the computed value") {
  for (const auto& inst : gallery()) {
    CAPTURE(inst.name);
    CHECK_FALSE(inst.expected.empty());
    for (const auto& r : check_expectations(inst)) {
      CAPTURE(r.key);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("builder examples") {
  const auto c3 = build_collapsing(3);
  CHECK(c3.expected.at("stsys") == q(1, 3));
  CHECK(c3.expected.at("codiam") == 1);
  const auto s = build_scaled(4, 2);
  CHECK(s.expected.at("codiam") == 4);
  CHECK(s.expected.at("stsys") == 2);
  CHECK(s.expected.at("omega") == 1);
  CHECK(build_rose(2).expected.at("omega") == 2);
  CHECK_THROWS_AS(build_collapsing(1), PreconditionError);
  CHECK_THROWS_AS(build_scaled(2, 1), PreconditionError);
  CHECK_THROWS_AS(build_star_of_loops(2, q(0), q(1)), PreconditionError);
}

TEST_CASE("random instances are valid and reproducible") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomCaps caps;
    caps.rank = 1 + seed % 3;
    caps.max_vertices = 6;
    caps.max_edges = 12;
    const auto a = random_instance(seed, caps);
    CHECK(validate(a.graph).empty());
    const auto b = random_instance(seed, caps);
    CHECK(model_to_json(a.graph).dump() == model_to_json(b.graph).dump());
  }
  RandomCaps too_big;
  too_big.rank = 4;
  CHECK_THROWS_AS(random_instance(1, too_big), PreconditionError);
}

TEST_CASE("report helpers") {
  CHECK(exit_code(Verdict::holds) == 0);
  CHECK(exit_code(Verdict::fails) == 2);
  CHECK(exit_code(Verdict::undecided) == 3);
  CHECK(csv_row({"a", "b,c", "d\"e"}) == "a,\"b,c\",\"d\"\"e\"\n");
  CHECK(svg_bar_chart("x", {1, 2, 3}).find("<rect") != std::string::npos);
  CHECK(svg_line_plot("x", {{1, 2}, {2, 3}}).find("<polyline") != std::string::npos);
}
