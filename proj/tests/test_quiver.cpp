#include <algorithm>
#include <random>

#include "doctest.h"
#include "qfold/error.hpp"
#include "qfold/quiver.hpp"
#include "support.hpp"

using namespace qfold;

namespace {

Quiver a2() {
  Quiver q(2);
  q.set_arrows(0, 1, 1);
  return q;
}

Quiver markov() { return oriented_cycle(3, 2); }

}  // namespace

TEST_CASE("construction rejects malformed matrices") {
  CHECK_THROWS_AS(Quiver({{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Quiver({{1, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(Quiver({{0, 1}, {-1, 0}}, {0, 1}), Error);
  CHECK_NOTHROW(Quiver({{0, 1}, {-1, 0}}, {1}));
}

TEST_CASE("mutation of the 4-cycle at its first vertex") {
  const Quiver q = mutate(oriented_cycle(4), 0);
  Quiver expected(4);
  expected.set_arrows(0, 3, 1);
  expected.set_arrows(1, 0, 1);
  expected.set_arrows(1, 2, 1);
  expected.set_arrows(2, 3, 1);
  expected.set_arrows(3, 1, 1);
  CHECK(q == expected);
}

TEST_CASE("A2 mutation reverses the arrow") {
  const Quiver q = mutate(a2(), 0);
  CHECK(q(1, 0) == 1);
  CHECK(q(0, 1) == -1);
}

TEST_CASE("mutation errors") {
  Quiver q = a2();
  CHECK_THROWS_AS(mutate(q, 2), Error);
  q.set_frozen(1);
  try {
    mutate(q, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "frozen_vertex");
  }
}

TEST_CASE("mutation is an involution and keeps skew-symmetry") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const Quiver q = qtest::random_quiver(rng, n);
    for (int k = 0; k < n; ++k) {
      const Quiver m = mutate(q, k);
      for (int i = 0; i < n; ++i) {
        CHECK(m(i, i) == 0);
        for (int j = 0; j < n; ++j) CHECK(m(i, j) == -m(j, i));
      }
      CHECK(mutate(m, k) == q);
    }
  }
}

TEST_CASE("frozen-frozen arrows are dropped") {
  // 0 mutable, 1 and 2 frozen, 1 -> 0 -> 2 creates a 1 -> 2 arrow that is discarded.
  Quiver q(3);
  q.set_arrows(1, 0, 1);
  q.set_arrows(0, 2, 1);
  q.set_frozen(1);
  q.set_frozen(2);
  CHECK(mutate(q, 0)(1, 2) == 0);
}

TEST_CASE("apply_sequence") {
  std::mt19937 rng(3);
  const Quiver q = qtest::random_quiver(rng, 4);
  CHECK(apply_sequence(q, {}) == q);
  CHECK(apply_sequence(q, {{2, 2}, std::nullopt}) == q);
  const Quiver c3 = oriented_cycle(3);
  CHECK(apply_sequence(c3, {{0, 1, 2, 0}, Permutation{0, 2, 1}}) == c3);
}

TEST_CASE("isomorphism witnesses") {
  const Quiver q = a2();
  CHECK(*are_isomorphic(q, q) == identity_permutation(2));
  CHECK(*are_isomorphic(q, mutate(q, 0)) == Permutation{1, 0});
  const Quiver c3 = oriented_cycle(3);
  const Quiver m = apply_sequence(c3, {{0, 1, 2, 0}, std::nullopt});
  CHECK(*are_isomorphic(m, c3) == Permutation{0, 2, 1});
  CHECK_FALSE(are_isomorphic(c3, markov()));
}

TEST_CASE("isomorphism search agrees with brute force over S_n") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const Quiver q1 = qtest::random_quiver(rng, n, 1);
    // Half the time compare against a relabeled copy, otherwise a fresh quiver.
    Permutation shuffle = identity_permutation(n);
    std::shuffle(shuffle.begin(), shuffle.end(), rng);
    const Quiver q2 = trial % 2 ? qtest::random_quiver(rng, n, 1) : q1.relabeled(shuffle);
    std::optional<Permutation> brute;
    for (const auto& p : qtest::all_permutations(n))
      if (q1.relabeled(p) == q2) {
        brute = p;
        break;
      }
    const auto found = are_isomorphic(q1, q2);
    CHECK(found.has_value() == brute.has_value());
    if (found) {
      CHECK(*found == *brute);
      const auto back = are_isomorphic(q2, q1);
      REQUIRE(back);
      CHECK(q2.relabeled(*back) == q1);
      CHECK(q2.relabeled(inverse_permutation(*found)) == q1);
    }
  }
}

TEST_CASE("framing") {
  const FramedQuiver f = frame(a2());
  CHECK(f.quiver.size() == 4);
  CHECK(f.quiver(0, 1) == 1);
  CHECK(f.quiver(0, 2) == 1);
  CHECK(f.quiver(1, 3) == 1);
  CHECK(f.quiver.arrow_count() == 3);
  CHECK(frame(Quiver(1)).quiver(0, 1) == 1);
  CHECK(frame(markov()).quiver.size() == 6);
  CHECK(frame(markov()).quiver.arrow_count() == 9);
  CHECK_THROWS_AS(frame(f.quiver), Error);
}

TEST_CASE("vertex colours") {
  const FramedQuiver f = frame(a2());
  for (auto c : vertex_colors(f)) CHECK(c == VertexColor::green);
  const FramedQuiver m = mutate(f, 0);
  CHECK(vertex_color(m, 0) == VertexColor::red);
  CHECK(vertex_color(m, 1) == VertexColor::green);
}

TEST_CASE("reddening sequences") {
  // For 1 -> 2 the length-3 sequence starts at the sink; [1,2,1] turns vertex 1 green again.
  CHECK(is_reddening(a2(), {{1, 0, 1}, std::nullopt}));
  CHECK(is_reddening(a2(), {{0, 1}, std::nullopt}));
  CHECK_FALSE(is_reddening(a2(), {{0, 1, 0}, std::nullopt}));
  CHECK(is_reddening(mutate(a2(), 0), {{0, 1, 0}, std::nullopt}));
  CHECK_FALSE(is_reddening(a2(), {}));
  CHECK_FALSE(is_reddening(oriented_cycle(3), {}));
  CHECK(is_reddening(oriented_cycle(3), {{0, 1, 2, 0}, std::nullopt}));
}

TEST_CASE("generalized mutations of cycles") {
  CHECK(is_generalized_mutation(oriented_cycle(3), {{0, 1, 2, 0}, Permutation{0, 2, 1}}));
  CHECK(is_generalized_mutation(oriented_cycle(4), {{0, 1, 2, 3, 1, 0}, Permutation{0, 1, 3, 2}}));
  CHECK_FALSE(is_generalized_mutation(a2(), {{0}, std::nullopt}));

  CHECK(cycle_generalized_sequence(3).steps == std::vector<int>{0, 1, 2, 0});
  CHECK(*cycle_generalized_sequence(3).post_permutation == Permutation{0, 2, 1});
  CHECK(cycle_generalized_sequence(4).steps == std::vector<int>{0, 1, 2, 3, 1, 0});
  CHECK(cycle_generalized_sequence(5).steps == std::vector<int>{0, 1, 2, 3, 4, 2, 1, 0});
  CHECK(*cycle_generalized_sequence(5).post_permutation == Permutation{0, 1, 2, 4, 3});
  CHECK_THROWS_AS(cycle_generalized_sequence(2), Error);
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(is_reddening(oriented_cycle(n), cycle_generalized_sequence(n)));
    CHECK(is_generalized_mutation(oriented_cycle(n), cycle_generalized_sequence(n)));
  }
}
