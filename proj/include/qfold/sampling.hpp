#pragma once

// Random inputs for property checks: integer quivers, group ring elements,
// sigma-skew-symmetric matrices and G-invariant quivers.

#include <random>
#include <vector>

#include "qfold/folding.hpp"
#include "qfold/group_ring.hpp"
#include "qfold/quiver.hpp"

namespace qfold::sampling {

inline Quiver random_quiver(std::mt19937& rng, int n, int max_weight = 2) {
  std::uniform_int_distribution<int> w(-max_weight, max_weight);
  Quiver q(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) q.set_arrows(i, j, w(rng));
  return q;
}

inline GroupRingElement random_element(std::mt19937& rng, const GroupPtr& g, int lo = -3, int hi = 3,
                                       int den = 1) {
  std::uniform_int_distribution<int> c(lo, hi);
  GroupRingElement out(g);
  for (int x = 0; x < static_cast<int>(g->order()); ++x)
    out += GroupRingElement::basis(g, x, Rational(c(rng), den));
  return out;
}

// Random sigma-skew-symmetric matrix over Z[G] with trivial stabilizers.
inline FoldedMatrix random_sigma_skew(std::mt19937& rng, const GroupPtr& g, int m, int lo = -3,
                                      int hi = 3) {
  FoldedMatrix b = zero_matrix(g, m);
  for (int i = 0; i < m; ++i) {
    const auto a = random_element(rng, g, lo, hi);
    b.at(i, i) = a - involution(a);
    for (int j = i + 1; j < m; ++j) {
      b.at(i, j) = random_element(rng, g, lo, hi);
      b.at(j, i) = -involution(b(i, j));
    }
  }
  return b;
}

// One orbit type: the action of the group's generators on a few points.
using OrbitType = std::vector<Permutation>;

inline OrbitType regular_orbit(const GroupPtr& g) {
  OrbitType out;
  for (const auto& gen : g->generators()) {
    const int s = g->index_of(gen);
    Permutation p(g->order());
    for (int x = 0; x < static_cast<int>(g->order()); ++x) p[static_cast<std::size_t>(x)] = g->multiply(s, x);
    out.push_back(p);
  }
  return out;
}

inline OrbitType fixed_orbit(const GroupPtr& g) {
  return OrbitType(g->generators().size(), Permutation{0});
}

// A G-invariant quiver on the disjoint union of the chosen orbits, built by summing random
// arrows over their G-translates.
inline QuiverAction random_symmetric_action(std::mt19937& rng, const GroupPtr& g,
                                            const std::vector<OrbitType>& orbits, int pairs) {
  std::vector<Permutation> maps(g->generators().size());
  int n = 0;
  for (const auto& o : orbits) {
    for (std::size_t s = 0; s < maps.size(); ++s)
      for (int x : o[s]) maps[s].push_back(n + x);
    n += static_cast<int>(o[0].size());
  }
  const VertexAction action(g, maps);
  Quiver q(n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> weight(-2, 2);
  for (int t = 0; t < pairs; ++t) {
    const int u = vertex(rng), v = vertex(rng);
    const int w = weight(rng);
    if (u == v) continue;
    for (int e = 0; e < static_cast<int>(g->order()); ++e) q.add_arrows(action.apply(e, u), action.apply(e, v), w);
  }
  return act_on_quiver(q, action);
}

// A G-invariant quiver on a few orbits of mixed types: regular, fixed, and for Z/4 and
// S3 also the non-free transitive ones. Up to about 12 vertices.
QuiverAction random_symmetric_quiver(std::mt19937& rng, const GroupPtr& g, int pairs);

}  // namespace qfold::sampling
