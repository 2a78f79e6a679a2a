#pragma once

#include <algorithm>
#include <vector>

#include "qfold/sampling.hpp"

namespace qtest {

using qfold::sampling::fixed_orbit;
using qfold::sampling::OrbitType;
using qfold::sampling::random_element;
using qfold::sampling::random_quiver;
using qfold::sampling::random_sigma_skew;
using qfold::sampling::random_symmetric_action;
using qfold::sampling::regular_orbit;

// Every permutation of {0..n-1} in lexicographic order.
inline std::vector<qfold::Permutation> all_permutations(int n) {
  std::vector<qfold::Permutation> out;
  qfold::Permutation p = qfold::identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qtest
