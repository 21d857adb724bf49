#pragma once

#include <random>
#include <vector>

#include "tgmaps/catalog.hpp"
#include "tgmaps/group.hpp"

namespace tgmaps::testing {

inline GroupInstance make(Family f, int ell) { return build({f, ell}); }

// Order by repeated multiplication; deliberately avoids the squaring trick
// used by GroupInstance::element_order.
inline std::uint64_t naive_order(const GroupInstance& g, const Element& u) {
  Element acc = u;
  std::uint64_t n = 1;
  while (acc != g.identity()) {
    acc = g.multiply(acc, u);
    ++n;
  }
  return n;
}

inline std::vector<Element> naive_involutions(const GroupInstance& g) {
  std::vector<Element> out;
  for (const Element& u : g.all_elements())
    if (u != g.identity() && naive_order(g, u) == 2) out.push_back(u);
  return out;
}

inline Element random_element(const GroupInstance& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> xd(0, g.a_modulus() - 1);
  std::uniform_int_distribution<std::uint32_t> bd(0, 1);
  return g.elem(xd(rng), g.tail_count() >= 1 ? bd(rng) : 0,
                g.tail_count() >= 2 ? bd(rng) : 0);
}

}  // namespace tgmaps::testing
