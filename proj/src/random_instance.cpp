#include "znp/random_instance.hpp"

#include <random>

#include "znp/errors.hpp"

namespace znp {

namespace {

// Uniform in [lo, hi] from raw engine output; std distributions are not
// reproducible across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

}  // namespace

RandomDraw random_instance(std::uint64_t seed, const RandomCaps& caps) {
  if (caps.rank < 1 || caps.rank > 3 || caps.max_vertices < 1 || caps.max_vertices > 6 || caps.max_edges > 12 ||
      caps.max_numerator < 1 || caps.max_denominator < 1)
    throw PreconditionError("random_instance: caps outside n <= 3, <= 6 vertices, <= 12 edges");
  if (caps.max_edges < caps.max_vertices - 1 + caps.rank)
    throw PreconditionError("random_instance: too few edges for full voltage rank");
  std::mt19937_64 rng(seed);
  const std::size_t n = caps.rank;
  for (std::size_t attempt = 0; attempt < caps.max_attempts; ++attempt) {
    const auto nv = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(caps.max_vertices)));
    const auto min_edges = static_cast<std::int64_t>(nv - 1 + n);
    const auto ne = static_cast<std::size_t>(draw(rng, min_edges, static_cast<std::int64_t>(caps.max_edges)));
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    auto random_edge = [&](std::size_t tail, std::size_t head) {
      LatticeVector volt(n);
      for (std::size_t i = 0; i < n; ++i) volt[i] = draw(rng, -1, 1);
      const Rational len(Integer(static_cast<long>(draw(rng, 1, caps.max_numerator))),
                         Integer(static_cast<long>(draw(rng, 1, caps.max_denominator))));
      edges.push_back({tail, head, len, volt});
      edges.back().length.canonicalize();
    };
    for (std::size_t v = 1; v < nv; ++v)
      random_edge(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(v) - 1)), v);
    while (edges.size() < ne) {
      const auto a = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(nv) - 1));
      const auto b = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(nv) - 1));
      random_edge(a, b);
    }
    QuotientGraph g(n, std::move(names), std::move(edges), 0);
    if (validate(g).empty()) return {std::move(g), attempt};
  }
  throw BudgetExceeded("random_instance: no valid draw within " + std::to_string(caps.max_attempts) + " attempts");
}

}  // namespace znp
