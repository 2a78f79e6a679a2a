#include <random>

#include "doctest.h"
#include "qfold/error.hpp"
#include "qfold/group.hpp"
#include "support.hpp"

using namespace qfold;

namespace {

GroupElement perm(const std::string& cycles, int degree) { return GroupElement::parse_cycles(cycles, degree); }

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Quiver hexagon() { return oriented_cycle(6); }

}  // namespace

TEST_CASE("cycle notation") {
  const auto g = perm("(1234)", 4);
  CHECK(g.images() == std::vector<int>{1, 2, 3, 0});
  CHECK(g.to_string() == "(1234)");
  CHECK(g.inverse().to_string() == "(1432)");
  CHECK(perm("(12)(34)", 4).to_string() == "(12)(34)");
  CHECK(perm("()", 3).is_identity());
  CHECK(perm("1", 3).to_string() == "1");
  // (12)(23): (23) acts first, 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(perm("(12)(23)", 3) == perm("(123)", 3));
  CHECK(perm("(12)(23)", 3) == perm("(12)", 3) * perm("(23)", 3));
  CHECK(perm("(1,10)", 10).to_string() == "(1,10)");
  CHECK_THROWS_AS(perm("(15)", 4), Error);
}

TEST_CASE("cyclic elements") {
  CHECK(GroupElement::cyclic(3, 4) == GroupElement::cyclic(3, 1));
  CHECK(GroupElement::cyclic(3, -1).power() == 2);
  CHECK(GroupElement::cyclic(3, 2).to_string() == "w^2");
  CHECK(GroupElement::cyclic(4, 1).to_string() == "z");
  CHECK(GroupElement::cyclic(2, 1).to_string() == "e");
  CHECK(GroupElement::cyclic(5, 3).to_string() == "c5^3");
}

TEST_CASE("generate_group orders") {
  CHECK(generate_group({perm("(1234)", 4)})->order() == 4);
  CHECK(generate_group({perm("(1234)", 4), perm("(13)", 4)})->order() == 8);
  CHECK(generate_group({perm("()", 5)})->order() == 1);
  CHECK(generate_group({perm("(1234)", 4), perm("(12)", 4)})->order() == 24);
  CHECK(cyclic_group(3)->order() == 3);
}

TEST_CASE("generate_group errors") {
  CHECK(error_code([] { generate_group({}); }) == "empty_generators");
  CHECK(error_code([] { generate_group({perm("(12)", 2), GroupElement::cyclic(2, 1)}); }) == "mixed_representation");
  CHECK(error_code([] { generate_group({perm("(12)", 2), perm("(12)", 3)}); }) == "degree_mismatch");
  CHECK(error_code([] { generate_group({perm("(1234567)", 7), perm("(12)", 7)}, 100); }) == "group_too_large");
}

TEST_CASE("group axioms on enumerated groups") {
  std::mt19937 rng(7);
  const std::vector<GroupPtr> groups = {
      cyclic_group(4), generate_group({perm("(1234)", 4), perm("(13)", 4)}),
      generate_group({perm("(1234)", 4), perm("(12)", 4)}), generate_group({perm("(123)", 3), perm("(12)", 3)})};
  for (const auto& g : groups) {
    const int n = static_cast<int>(g->order());
    CHECK(g->element(0).is_identity());
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 50; ++t) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g->multiply(g->multiply(a, b), c) == g->multiply(a, g->multiply(b, c)));
    }
    for (int a = 0; a < n; ++a) {
      CHECK(g->multiply(g->inverse(a), a) == g->identity());
      CHECK(g->element(a) == g->element(g->parent_generator(a) < 0 ? 0 : a));
      for (int b = 0; b < n; ++b) CHECK(g->find(g->element(a) * g->element(b)).has_value());
    }
  }
}

TEST_CASE("orbits and stabilizers") {
  const auto z3 = generate_group({perm("(135)(246)", 6)});
  const VertexAction act(z3, {Permutation{2, 3, 4, 5, 0, 1}});
  const Orbits o = orbits(act);
  REQUIRE(o.size() == 2);
  CHECK(o[0] == std::vector<int>{0, 2, 4});
  CHECK(o[1] == std::vector<int>{1, 3, 5});
  CHECK(stabilizer(act, 0).order() == 1);

  const auto trivial = generate_group({perm("()", 4)});
  CHECK(orbits(VertexAction(trivial, {identity_permutation(4)})).size() == 4);

  const auto s3 = generate_group({perm("(123)", 3), perm("(12)", 3)});
  const VertexAction fixes(s3, {Permutation{1, 2, 0, 3}, Permutation{1, 0, 2, 3}});
  CHECK(stabilizer(fixes, 3).order() == 6);
  CHECK(stabilizer(fixes, 0).order() == 2);
}

TEST_CASE("orbit-stabilizer holds at every point") {
  const auto d4 = generate_group({perm("(1234)", 4), perm("(13)", 4)});
  const VertexAction act(d4, {Permutation{1, 2, 3, 0}, Permutation{2, 1, 0, 3}});
  for (int p = 0; p < 4; ++p) CHECK(stabilizer(act, p).order() * 4 == 8);
}

TEST_CASE("vertex actions must respect the group") {
  const auto z2 = cyclic_group(2);
  // An element of order 2 cannot act as a 3-cycle.
  CHECK(error_code([&] { VertexAction(z2, {Permutation{1, 2, 0}}); }) == "action_ill_defined");
  CHECK(error_code([&] { VertexAction(z2, {Permutation{0, 0, 1}}); }) == "invalid_action");
  // Non-faithful actions are accepted.
  CHECK_NOTHROW(VertexAction(cyclic_group(4), {Permutation{1, 0}}));
}

TEST_CASE("act_on_quiver") {
  const Quiver c3 = oriented_cycle(3);
  const auto rot = generate_group({perm("(123)", 3)});
  CHECK_NOTHROW(act_on_quiver(rot, c3, {Permutation{1, 2, 0}}));
  const auto swap = generate_group({perm("(12)", 3)});
  try {
    act_on_quiver(swap, c3, {Permutation{1, 0, 2}});
    FAIL("expected not_automorphism");
  } catch (const Error& e) {
    CHECK(e.code() == "not_automorphism");
    CHECK(e.witness().size() == 3);
  }
  const auto z3 = cyclic_group(3);
  const auto qa = act_on_quiver(z3, hexagon(), {Permutation{2, 3, 4, 5, 0, 1}});
  CHECK(qa.orbits.size() == 2);
  CHECK(qa.stabilizer_orders == std::vector<int>{1, 1});
  CHECK(qa.representatives == std::vector<int>{0, 1});
  CHECK_THROWS_AS(qa.with_representatives({1, 0}), Error);
  CHECK(qa.with_representatives({4, 3}).representatives == std::vector<int>{4, 3});
}

TEST_CASE("act_on_quiver accepts exactly the automorphisms") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 4;
    // Symmetric-ish quivers have nontrivial automorphisms; mix in cycles.
    const Quiver q = trial % 3 == 0 ? oriented_cycle(n) : qtest::random_quiver(rng, n, 1);
    for (const auto& p : qtest::all_permutations(n)) {
      const auto g = generate_group({GroupElement::permutation(p)});
      bool accepted = true;
      try {
        act_on_quiver(g, q, {p});
      } catch (const Error&) {
        accepted = false;
      }
      CHECK(accepted == (q.relabeled(p) == q));
    }
  }
}
