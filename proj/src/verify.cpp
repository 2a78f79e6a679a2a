#include "qfold/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qfold/corpus.hpp"
#include "qfold/error.hpp"
#include "qfold/explorer.hpp"
#include "qfold/sampling.hpp"
#include "qfold/special_rules.hpp"

namespace qfold::verify {

namespace {

using GRE = GroupRingElement;

// A check body returns "" on success, else the first failure.
struct Outcome {
  std::string failure;
  std::string summary;
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r{name, false, "", 0};
  try {
    const Outcome o = body();
    r.passed = o.failure.empty();
    r.detail = r.passed ? o.summary : o.failure;
  } catch (const Error& e) {
    r.detail = e.code() + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

GroupPtr s3() {
  return generate_group({GroupElement::parse_cycles("(123)", 3), GroupElement::parse_cycles("(12)", 3)});
}

// sum coeffs[p] * gen^p for the cyclic group g
GRE from_powers(const GroupPtr& g, const std::vector<int>& coeffs) {
  const int gen = g->index_of(g->generators().front());
  GRE out(g);
  int x = g->identity();
  for (int c : coeffs) {
    out += GRE::basis(g, x, Rational(c));
    x = g->multiply(gen, x);
  }
  return out;
}

FoldedMatrix two_by_two(const GroupPtr& g, const GRE& diag, const GRE& b12) {
  FoldedMatrix b = zero_matrix(g, 2);
  b.at(0, 0) = diag;
  b.at(0, 1) = b12;
  b.at(1, 0) = -involution(b12);
  validate(b);
  return b;
}

// Every coefficient vector in [-2, 2]^len.
void for_grid(int len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(static_cast<std::size_t>(len), -2);
  while (true) {
    f(c);
    int i = 0;
    while (i < len && c[static_cast<std::size_t>(i)] == 2) c[static_cast<std::size_t>(i++)] = -2;
    if (i == len) return;
    ++c[static_cast<std::size_t>(i)];
  }
}

std::string show(const std::vector<int>& c) {
  std::ostringstream out;
  out << "coefficients";
  for (int x : c) out << ' ' << x;
  return out.str();
}

std::vector<CheckResult> theorems(std::uint32_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("fold commutes with set mutation (200 random symmetric quivers)", [seed] {
    std::mt19937 rng(seed);
    const std::vector<GroupPtr> groups{corpus::z2(), corpus::z3(), corpus::z4(), s3()};
    int orbits = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto qa = sampling::random_symmetric_quiver(rng, groups[static_cast<std::size_t>(trial % 4)], 2 + trial % 5);
      const FoldedMatrix b = fold(qa);
      if (auto v = symmetrizability_violation(b)) return Outcome{"trial " + std::to_string(trial) + ": " + *v, ""};
      for (int k = 0; k < static_cast<int>(qa.orbits.size()); ++k) {
        if (!orbit_cycle_free(qa, k)) continue;
        ++orbits;
        if (!theorem_mutation_commutes(qa, k))
          return Outcome{"trial " + std::to_string(trial) + ", orbit " + std::to_string(k + 1), ""};
      }
    }
    return Outcome{"", std::to_string(orbits) + " orbits"};
  }));
  out.push_back(timed("fold inverts canonical unfolding (100 random matrices)", [seed] {
    std::mt19937 rng(seed + 1);
    for (int trial = 0; trial < 100; ++trial) {
      const GroupPtr g = trial % 2 ? corpus::z4() : corpus::z3();
      const FoldedMatrix b = sampling::random_sigma_skew(rng, g, 2 + trial % 3);
      if (!(fold(canonical_unfold(b)) == b)) return Outcome{"trial " + std::to_string(trial), ""};
    }
    return Outcome{"", "100 matrices"};
  }));
  out.push_back(timed("cycle sequences are generalized mutations (n = 3..6)", [] {
    for (int n = 3; n <= 6; ++n)
      if (!is_generalized_mutation(oriented_cycle(n), cycle_generalized_sequence(n)))
        return Outcome{"n = " + std::to_string(n), ""};
    return Outcome{"", "4 cycles"};
  }));
  return out;
}

std::vector<CheckResult> cyclic_rule(int order) {
  const std::string name = order == 3 ? "diag3" : "diag4";
  return {timed(name + " rule equals refolding on the grid", [order, name] {
    const GroupPtr g = order == 3 ? corpus::z3() : corpus::z4();
    const int gen = g->index_of(g->generators().front());
    const GRE d = GRE::basis(g, gen, Rational(1)) - GRE::basis(g, g->inverse(gen), Rational(1));
    std::string failure;
    int cases = 0;
    for_grid(order, [&](const std::vector<int>& c) {
      if (!failure.empty()) return;
      ++cases;
      const FoldedMatrix m = two_by_two(g, d, from_powers(g, c));
      const FoldedMatrix rule = order == 3 ? mutate_diag3(m, 0) : mutate_diag4(m, 0);
      if (!(rule == refold_oracle(m, 0)))
        failure = show(c) + ": differs from refolding";
      else if (!(rule(0, 0) == d))
        failure = show(c) + ": diagonal changed";
      else if (!((order == 3 ? mutate_diag3(rule, 0) : mutate_diag4(rule, 0)) == m))
        failure = show(c) + ": not an involution";
    });
    return Outcome{failure, std::to_string(cases) + " cases"};
  })};
}

std::vector<CheckResult> markov() {
  std::vector<CheckResult> out;
  out.push_back(timed("markov rule equals the unfolded oracle on the grid", [] {
    const GroupPtr g = corpus::z3();
    const int w = g->index_of(g->generators().front());
    const GRE d = GRE::basis(g, w, Rational(2)) - GRE::basis(g, g->inverse(w), Rational(2));
    std::string failure;
    int cases = 0;
    for_grid(3, [&](const std::vector<int>& c) {
      if (!failure.empty()) return;
      ++cases;
      const FoldedMatrix m = two_by_two(g, d, from_powers(g, c));
      const auto rule = markov_adjacent_mutate(m, 0);
      if (!(rule.matrix(0, 1) == markov_oracle(m, 0)[1])) failure = show(c);
    });
    const FoldedMatrix zero = two_by_two(g, d, GRE(g));
    if (failure.empty() && !(markov_adjacent_mutate(zero, 0).matrix(0, 1) == GRE(g))) failure = "0 is not fixed";
    return Outcome{failure, std::to_string(cases) + " cases"};
  }));
  out.push_back(timed("the twelve-step sequence is a generalized mutation of the double cycle", [] {
    const MutationSequence s{markov_sequence(), std::nullopt};
    const Quiver q = markov_unfolded_cycle();
    if (!is_reddening(q, s)) return Outcome{"not reddening", ""};
    if (!is_generalized_mutation(q, s)) return Outcome{"square not framed-isomorphic", ""};
    return Outcome{"", ""};
  }));
  return out;
}

std::vector<CheckResult> corpus_checks() {
  std::vector<CheckResult> out;
  out.push_back(timed("every corpus matrix is sigma-skew-symmetrizable", [] {
    for (const auto& nm : corpus::named_matrices())
      if (auto v = symmetrizability_violation(nm.matrix)) return Outcome{nm.name + ": " + *v, ""};
    return Outcome{"", std::to_string(corpus::named_matrices().size()) + " matrices"};
  }));
  out.push_back(timed("Z/2 example folds to both reference matrices", [] {
    const auto qa = corpus::z2_example();
    if (!(fold(qa.with_representatives({0, 2, 4})) == corpus::z2_example_matrix_11())) return Outcome{"reps 1_1", ""};
    if (!(fold(qa.with_representatives({1, 2, 4})) == corpus::z2_example_matrix_12())) return Outcome{"reps 1_2", ""};
    return Outcome{"", ""};
  }));
  out.push_back(timed("hexagon foldings up to weaving", [] {
    if (!weaving_isomorphic(fold(corpus::hexagon_z3()), corpus::hexagon_z3_matrix())) return Outcome{"Z/3", ""};
    if (!weaving_isomorphic(fold(corpus::hexagon_z2()), corpus::hexagon_z2_matrix())) return Outcome{"Z/2", ""};
    return Outcome{"", ""};
  }));
  out.push_back(timed("W3, U3, U4 mutation classes close", [] {
    std::ostringstream sizes;
    for (const auto& [name, b] : {std::pair{"W3", corpus::W3()}, {"U3", corpus::U3()}, {"U4", corpus::U4()}}) {
      const auto g = exchange_graph(b);
      if (!g.complete) return Outcome{std::string(name) + " did not close", ""};
      sizes << name << ' ' << g.nodes.size() << ' ';
    }
    return Outcome{"", sizes.str()};
  }));
  out.push_back(timed("U4 has 7 classes up to weaving", [] {
    const auto n = exchange_graph(corpus::U4()).nodes.size();
    return Outcome{n == 7 ? "" : std::to_string(n) + " classes", "7 classes"};
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorems", "diag3", "diag4", "markov", "corpus"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint32_t seed) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, seed);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (suite == "theorems") return theorems(seed);
  if (suite == "diag3") return cyclic_rule(3);
  if (suite == "diag4") return cyclic_rule(4);
  if (suite == "markov") return markov();
  if (suite == "corpus") return corpus_checks();
  throw Error("unknown_suite", "no suite '" + suite + "'");
}

}  // namespace qfold::verify
