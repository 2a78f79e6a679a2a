#include "qfold/sampling.hpp"

#include <algorithm>
#include <set>

namespace qfold::sampling {

namespace {

// Action of the generators on the left cosets of the cyclic subgroup <h>.
OrbitType coset_orbit(const GroupPtr& g, int h) {
  std::set<int> sub{g->identity()};
  for (int x = h; x != g->identity(); x = g->multiply(x, h)) sub.insert(x);
  std::vector<std::set<int>> cosets;
  std::vector<int> coset_of(g->order(), -1);
  for (int x = 0; x < static_cast<int>(g->order()); ++x) {
    if (coset_of[x] >= 0) continue;
    std::set<int> c;
    for (int y : sub) c.insert(g->multiply(x, y));
    for (int y : c) coset_of[y] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  OrbitType out;
  for (const auto& gen : g->generators()) {
    const int s = g->index_of(gen);
    Permutation p;
    for (const auto& c : cosets) p.push_back(coset_of[g->multiply(s, *c.begin())]);
    out.push_back(p);
  }
  return out;
}

}  // namespace

QuiverAction random_symmetric_quiver(std::mt19937& rng, const GroupPtr& g, int pairs) {
  std::vector<OrbitType> types{fixed_orbit(g)};
  for (int h = 0; h < static_cast<int>(g->order()); ++h) {
    auto t = coset_orbit(g, h);
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(std::move(t));
  }
  std::vector<OrbitType> chosen;
  int size = 0;
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  while (chosen.size() < 2 || (chosen.size() < 4 && size < 8)) {
    const auto& t = types[pick(rng)];
    if (size + static_cast<int>(t[0].size()) > 12) break;
    chosen.push_back(t);
    size += static_cast<int>(t[0].size());
  }
  return random_symmetric_action(rng, g, chosen, pairs);
}

}  // namespace qfold::sampling
