#include <random>

#include "doctest.h"
#include "qfold/corpus.hpp"
#include "qfold/error.hpp"
#include "qfold/folding.hpp"
#include "support.hpp"

using namespace qfold;
namespace corpus = qfold::corpus;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

GroupPtr s3() {
  static const GroupPtr g =
      generate_group({GroupElement::parse_cycles("(123)", 3), GroupElement::parse_cycles("(12)", 3)});
  return g;
}

}  // namespace

TEST_CASE("Z/2 example folds to both reference matrices") {
  const auto qa = corpus::z2_example();
  CHECK(fold(qa) == corpus::z2_example_matrix_11());
  CHECK(fold(qa.with_representatives({1, 2, 4})) == corpus::z2_example_matrix_12());
}

TEST_CASE("hexagon foldings") {
  const auto z3 = corpus::hexagon_z3();
  CHECK(z3.orbits == Orbits{{0, 2, 4}, {1, 3, 5}});
  CHECK(fold(z3) == corpus::hexagon_z3_matrix());
  CHECK(weaving_isomorphic(fold(corpus::hexagon_z2()), corpus::hexagon_z2_matrix()));
}

TEST_CASE("cuboctahedron actions") {
  const Quiver q = corpus::cuboctahedron();
  CHECK(q.size() == 12);
  CHECK(q.arrow_count() == 24);
  for (int v = 0; v < 12; ++v) {
    int in = 0, out = 0;
    for (int w = 0; w < 12; ++w) (q(v, w) > 0 ? out : in) += q(v, w) != 0;
    CHECK(in == 2);
    CHECK(out == 2);
  }
  const auto s4 = corpus::cuboctahedron_action({"(1234)", "(12)"});
  CHECK(s4.group()->order() == 24);
  CHECK(s4.orbits.size() == 1);
  CHECK(s4.stabilizer_orders == std::vector<int>{2});
  CHECK(corpus::cuboctahedron_action({"(123)"}).orbits.size() == 4);
  const auto d4 = corpus::cuboctahedron_action({"(1234)", "(13)"});
  CHECK(d4.group()->order() == 8);
  REQUIRE(d4.orbits.size() == 2);
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(d4.stabilizer_orders[k] * static_cast<int>(d4.orbits[k].size()) == 8);
  CHECK((d4.stabilizer_orders == std::vector<int>{1, 2} || d4.stabilizer_orders == std::vector<int>{2, 1}));
}

TEST_CASE("cuboctahedron foldings with free actions match the reference matrices") {
  for (const auto& c : corpus::cuboctahedron_cases()) {
    if (c.name != "C4" && c.name != "V4" && c.name != "C3") continue;
    CAPTURE(c.name);
    const auto action = corpus::cuboctahedron_action(c.generators);
    REQUIRE(same_group(action.group(), c.group));
    CHECK(weaving_isomorphic(fold(action), c.expected));
  }
}

TEST_CASE("set mutation") {
  const auto star = corpus::star_quiver();
  REQUIRE(star.orbits == Orbits{{0}, {1, 3}, {2, 4}});
  const auto m = set_mutate(star, 1);
  CHECK(m.quiver(0, 1) == 1);
  CHECK(m.quiver(0, 3) == 1);
  CHECK(m.quiver(2, 0) == 1);
  CHECK(m.quiver == mutate(mutate(star.quiver, 1), 3));

  Quiver isolated(2);
  const auto iso = act_on_quiver(corpus::z2(), isolated, {Permutation{1, 0}});
  CHECK(set_mutate(iso, 0).quiver == isolated);

  const auto rot = act_on_quiver(corpus::z3(), oriented_cycle(3), {Permutation{1, 2, 0}});
  CHECK(error_code([&] { set_mutate(rot, 0); }) == "orbit_not_cycle_free");
}

TEST_CASE("matrix mutation") {
  const auto w3 = corpus::W3();
  const auto m = matrix_mutate(w3, 1);
  CHECK(m(0, 0) == parse_group_ring(corpus::z3(), "w^-1 - w"));
  CHECK(m(0, 1) == -w3(0, 1));
  CHECK(error_code([&] { matrix_mutate(m, 0); }) == "use_diagonal_rule");
  CHECK(error_code([&] { matrix_mutate(m, 7); }) == "invalid_index");
  const auto hex = corpus::hexagon_z3_matrix();
  CHECK(matrix_mutate(matrix_mutate(hex, 0), 0) == hex);
}

TEST_CASE("fold commutes with mutation on the examples") {
  const auto qa = corpus::z2_example();
  for (int k = 0; k < 3; ++k)
    if (orbit_cycle_free(qa, k)) CHECK(theorem_mutation_commutes(qa, k));
  CHECK(matrix_mutate(corpus::z2_example_matrix_11(), 1) == fold(set_mutate(qa, 1)));
  const auto c3 = corpus::cuboctahedron_action({"(123)"});
  int tested = 0;
  for (int k = 0; k < 4; ++k)
    if (orbit_cycle_free(c3, k)) {
      CHECK(theorem_mutation_commutes(c3, k));
      ++tested;
    }
  CHECK(tested >= 1);
}

TEST_CASE("fold commutes with mutation on random symmetric quivers") {
  std::mt19937 rng(2024);
  const std::vector<GroupPtr> groups{corpus::z2(), corpus::z3(), corpus::z4(), s3()};
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GroupPtr& g = groups[static_cast<std::size_t>(trial % 4)];
    std::vector<qtest::OrbitType> types{qtest::regular_orbit(g), qtest::fixed_orbit(g)};
    if (g == corpus::z4()) types.push_back({Permutation{1, 0}});
    if (g == s3()) {
      types.push_back({Permutation{1, 2, 0}, Permutation{1, 0, 2}});
      types.push_back({Permutation{0, 1}, Permutation{1, 0}});
    }
    std::vector<qtest::OrbitType> chosen;
    int size = 0;
    std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
    while (chosen.size() < 2 || (chosen.size() < 4 && size < 8)) {
      const auto& t = types[pick(rng)];
      if (size + static_cast<int>(t[0].size()) > 12) break;
      chosen.push_back(t);
      size += static_cast<int>(t[0].size());
    }
    const auto qa = qtest::random_symmetric_action(rng, g, chosen, 2 + trial % 5);
    const auto b = fold(qa);
    CHECK_FALSE(symmetrizability_violation(b));
    for (int k = 0; k < static_cast<int>(qa.orbits.size()); ++k) {
      if (!orbit_cycle_free(qa, k)) continue;
      CHECK(theorem_mutation_commutes(qa, k));
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("weaving") {
  const auto b = corpus::z2_example_matrix_11();
  const int eps = 1;
  CHECK(weave(b, 0, eps) == corpus::z2_example_matrix_12());
  CHECK(weave(b, 1, 0) == b);
  CHECK(weave(weave(b, 2, eps), 2, corpus::z2()->inverse(eps)) == b);
  const auto qa = corpus::z2_example();
  CHECK(fold(weave_action(qa, 0, eps)) == weave(fold(qa), 0, eps));

  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    const auto g = t % 2 ? corpus::z3() : s3();
    auto r = qtest::random_sigma_skew(rng, g, 3, -1, 1);
    for (int i = 0; i < 3; ++i) r.at(i, i) = GroupRingElement(g);
    const int j = t % 3, k = (t + 1) % 3;
    const int e = static_cast<int>(t % g->order());
    const auto lhs = matrix_mutate(weave(r, j, e), k);
    const auto rhs = weave(matrix_mutate(r, k), j, e);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weaving isomorphism") {
  const auto b = corpus::z2_example_matrix_11();
  const auto w = weaving_isomorphic(b, corpus::z2_example_matrix_12());
  REQUIRE(w);
  CHECK(apply_weaving(b, *w) == corpus::z2_example_matrix_12());

  const auto hex = corpus::hexagon_z3_matrix();
  const auto woven = weave(hex, 0, 1);
  const auto found = weaving_isomorphic(hex, woven);
  REQUIRE(found);
  CHECK(apply_weaving(hex, *found) == woven);
  CHECK(apply_weaving(hex, {{0, 1}, {1, 0}}) == woven);

  const auto swapped = apply_weaving(b, {{1, 0, 2}, {0, 0, 0}});
  const auto sw = weaving_isomorphic(b, swapped);
  REQUIRE(sw);
  CHECK(sw->perm == Permutation{1, 0, 2});
  CHECK_FALSE(weaving_isomorphic(b, corpus::hexagon_z2_matrix()));
}

TEST_CASE("canonical unfolding") {
  const auto hex = canonical_unfold(corpus::hexagon_z3_matrix());
  CHECK(are_isomorphic(hex.quiver, oriented_cycle(6)));
  const auto c3 = canonical_unfold(folded_from_strings(corpus::z3(), {{"w - w^-1"}}));
  CHECK(are_isomorphic(c3.quiver, oriented_cycle(3)));
  const auto mk = canonical_unfold(corpus::markov_matrix());
  CHECK(are_isomorphic(mk.quiver, corpus::markov_quiver()));
  CHECK(fold(canonical_unfold(corpus::W4())) == corpus::W4());

  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto g = t % 2 ? corpus::z3() : corpus::z4();
    const auto b = qtest::random_sigma_skew(rng, g, 1 + t % 3);
    CHECK(fold(canonical_unfold(b)) == b);
  }
  CHECK(error_code([] { canonical_unfold(corpus::cuboctahedron_cases()[3].expected); }) == "nontrivial_stabilizer");
}

TEST_CASE("validation") {
  CHECK(error_code([] { folded_from_strings(corpus::z3(), {{"0", "1"}, {"1", "0"}}); }) == "not_skew_symmetrizable");
  CHECK(error_code([] { folded_from_strings(corpus::z3(), {{"0", "1"}}); }) == "invalid_matrix");
  for (const auto& nm : corpus::named_matrices()) CHECK_NOTHROW(validate(nm.matrix));
}
