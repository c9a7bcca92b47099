#pragma once

#include <vector>

#include "znp/gallery.hpp"
#include "znp/quotient_graph.hpp"

namespace testing {

inline znp::QuotientGraph rose_Z(const std::vector<std::int64_t>& voltages, const znp::Rational& len = 1) {
  std::vector<std::pair<std::int64_t, znp::Rational>> gens;
  for (auto v : voltages) gens.emplace_back(v, len);
  return std::get<znp::QuotientGraph>(znp::build_cayley_Z(gens).object);
}

inline znp::QuotientGraph graph_of(const znp::GalleryInstance& inst) {
  return std::get<znp::QuotientGraph>(inst.object);
}

inline znp::Rational q(long p, long d = 1) { return znp::ratio(p, d); }

}  // namespace testing
