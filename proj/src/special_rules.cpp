#include "qfold/special_rules.hpp"

#include <algorithm>

#include "qfold/error.hpp"

namespace qfold {

namespace {

using GRE = GroupRingElement;

std::string idx(int i) { return std::to_string(i + 1); }

GRE pos(const GRE& a) { return positive_part(a); }
GRE neg(const GRE& a) { return negative_part(a); }
GRE times(const GRE& a, int g) { return a.right_multiplied(g); }

void check_index(const FoldedMatrix& b, int k) {
  if (k < 0 || k >= b.size()) throw Error("invalid_index", "index " + idx(k) + " out of range", {k});
}

// g with d == mult * (g - g^-1), if any.
std::optional<int> diagonal_generator(const GRE& d, int mult) {
  const auto& g = *d.group();
  for (int e = 0; e < static_cast<int>(g.order()); ++e) {
    if (g.inverse(e) == e) continue;
    const GRE cand = Rational(mult) * (GRE::basis(d.group(), e) - GRE::basis(d.group(), g.inverse(e)));
    if (cand == d) return e;
  }
  return std::nullopt;
}

bool trivial_stabilizers(const FoldedMatrix& b) {
  return std::all_of(b.stab_orders.begin(), b.stab_orders.end(), [](int s) { return s == 1; });
}

// Checks group, diagonal and stabilizers for one of the nonstandard kinds and returns
// the generator.
int require_kind(const FoldedMatrix& b, int k, DiagonalRuleKind kind) {
  check_index(b, k);
  const int order = kind == DiagonalRuleKind::cyc4 ? 4 : 3;
  const char* want = kind == DiagonalRuleKind::cyc4 ? "Z/4" : "Z/3";
  if (static_cast<int>(b.group->order()) != order || !b.group->is_cyclic())
    throw Error("wrong_group", std::string(to_string(kind)) + " rule needs " + want);
  if (!trivial_stabilizers(b))
    throw Error("nontrivial_stabilizer", "diagonal rules need trivial stabilizers");
  const auto c = classify_diagonal(b, k);
  if (!c || c->kind != kind)
    throw Error("wrong_diagonal", "b_" + idx(k) + idx(k) + " = " + b(k, k).to_string() + " does not fit the " +
                                      to_string(kind) + " rule",
                {k});
  return c->generator;
}

// Row k by `row`, column k as -sigma(row), then the rest by `other`.
template <class Row, class Other>
FoldedMatrix apply_row_rule(const FoldedMatrix& b, int k, Row row, Other other) {
  FoldedMatrix out = b;
  out.representatives.reset();
  const int m = b.size();
  for (int j = 0; j < m; ++j) out.at(k, j) = row(b(k, j));
  for (int i = 0; i < m; ++i)
    if (i != k) out.at(i, k) = -involution(out(k, i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != k && j != k) out.at(i, j) = other(b(i, j), b(i, k), b(k, j), out(i, k), out(k, j));
  validate(out, true);
  return out;
}

}  // namespace

const char* to_string(DiagonalRuleKind kind) {
  switch (kind) {
    case DiagonalRuleKind::standard: return "standard";
    case DiagonalRuleKind::cyc3: return "diag3";
    case DiagonalRuleKind::cyc4: return "diag4";
    case DiagonalRuleKind::markov: return "markov";
  }
  return "?";
}

std::optional<DiagonalClass> classify_diagonal(const FoldedMatrix& b, int k) {
  check_index(b, k);
  const GRE& d = b(k, k);
  if (d.is_zero()) return DiagonalClass{DiagonalRuleKind::standard, b.group->identity()};
  if (!b.group->is_cyclic() || !trivial_stabilizers(b)) return std::nullopt;
  const auto order = b.group->order();
  if (order == 3) {
    if (auto g = diagonal_generator(d, 1)) return DiagonalClass{DiagonalRuleKind::cyc3, *g};
    if (auto g = diagonal_generator(d, 2)) return DiagonalClass{DiagonalRuleKind::markov, *g};
  } else if (order == 4) {
    if (auto g = diagonal_generator(d, 1); g && b.group->element_order(*g) == 4)
      return DiagonalClass{DiagonalRuleKind::cyc4, *g};
  }
  return std::nullopt;
}

RuleChoice parse_rule(const std::string& name) {
  if (name == "auto") return RuleChoice::automatic;
  if (name == "standard") return RuleChoice::standard;
  if (name == "diag3") return RuleChoice::diag3;
  if (name == "diag4") return RuleChoice::diag4;
  if (name == "markov") return RuleChoice::markov;
  throw Error("unknown_rule", "unknown rule '" + name + "' (auto, standard, diag3, diag4, markov)");
}

const char* to_string(RuleChoice choice) {
  switch (choice) {
    case RuleChoice::automatic: return "auto";
    case RuleChoice::standard: return "standard";
    case RuleChoice::diag3: return "diag3";
    case RuleChoice::diag4: return "diag4";
    case RuleChoice::markov: return "markov";
  }
  return "?";
}

GroupRingElement diag3_row_entry(const GroupRingElement& b, int w) {
  const int wi = b.group()->inverse(w);
  return b - pos(times(b, wi) + pos(b)) - neg(times(b, w) + neg(b));
}

GroupRingElement diag4_row_entry(const GroupRingElement& b, int z) {
  const auto& g = *b.group();
  const int z2 = g.multiply(z, z);
  const int z3 = g.multiply(z2, z);
  const GRE p = times(b, z) + neg(b);
  return b - neg(p) - pos(-times(b, z) - neg(b) + neg(times(b, z2) + neg(p)) + pos(times(b, z3) + pos(b) + pos(p)));
}

GroupRingElement markov_row_entry(const GroupRingElement& b, int w) {
  const int wi = b.group()->inverse(w);
  const Rational two(2);
  const GRE c = times(b, w) + neg(b);
  const GRE d = times(b, wi) + pos(b);
  const GRE e = -b + two * neg(c) + two * pos(d);
  const GRE f = b + two * pos(c) + two * neg(d);
  const GRE gg = -c + neg(e) + pos(f);
  const GRE h = -d + pos(e) + neg(f);
  return -e + two * neg(gg) + two * pos(h);
}

FoldedMatrix mutate_diag3(const FoldedMatrix& b, int k) {
  const int w = require_kind(b, k, DiagonalRuleKind::cyc3);
  const int wi = b.group->inverse(w);
  const Rational third(1, 3);
  return apply_row_rule(
      b, k, [&](const GRE& x) { return diag3_row_entry(x, w); },
      [&](const GRE& bij, const GRE& x, const GRE& y, const GRE& x1, const GRE& y1) {
        const GRE sum = circ(x, y) - circ(x1, y1) + circ(times(x, wi) + pos(x), times(y, w) + neg(y)) +
                        circ(times(x, w) + neg(x), times(y, wi) + pos(y));
        return bij + third * sum;
      });
}

FoldedMatrix mutate_diag4(const FoldedMatrix& b, int k) {
  const int z = require_kind(b, k, DiagonalRuleKind::cyc4);
  const auto& g = *b.group;
  const int z2 = g.multiply(z, z);
  const int zi = g.inverse(z);
  const Rational quarter(1, 4);
  return apply_row_rule(
      b, k, [&](const GRE& x) { return diag4_row_entry(x, z); },
      [&](const GRE& bij, const GRE& x, const GRE& y, const GRE& x1, const GRE& y1) {
        const GRE X1 = times(x, zi) + pos(x);
        const GRE Y1 = times(y, z) + neg(y);
        const GRE X2 = times(x, z2) + pos(X1);
        const GRE Y2 = times(y, z2) + neg(Y1);
        const GRE X3 = times(x, z) + neg(x) + neg(X1);
        const GRE Y3 = times(y, zi) + pos(y) + pos(Y1);
        const GRE X4 = -X1 + pos(X2) + neg(X3);
        const GRE Y4 = -Y1 + neg(Y2) + pos(Y3);
        const GRE sum = circ(x, y) - circ(x1, y1) + circ(X1, Y1) + circ(X2, Y2) + circ(X3, Y3) + circ(X4, Y4);
        return bij + quarter * sum;
      });
}

PartialMutation markov_adjacent_mutate(const FoldedMatrix& b, int k) {
  const int w = require_kind(b, k, DiagonalRuleKind::markov);
  PartialMutation out{b, {}};
  out.matrix.representatives.reset();
  const int m = b.size();
  for (int j = 0; j < m; ++j) {
    if (j == k) continue;
    out.matrix.at(k, j) = markov_row_entry(b(k, j), w);
    out.matrix.at(j, k) = -involution(out.matrix(k, j));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != k && j != k) out.stale.emplace_back(i, j);
  validate(out.matrix, true);
  return out;
}

RuleMutation mutate_with_rule(const FoldedMatrix& b, int k, RuleChoice choice) {
  check_index(b, k);
  if (choice == RuleChoice::automatic) {
    const auto c = classify_diagonal(b, k);
    if (!c)
      throw Error("no_rule", "no mutation rule for diagonal entry b_" + idx(k) + idx(k) + " = " + b(k, k).to_string(),
                  {k});
    switch (c->kind) {
      case DiagonalRuleKind::standard: choice = RuleChoice::standard; break;
      case DiagonalRuleKind::cyc3: choice = RuleChoice::diag3; break;
      case DiagonalRuleKind::cyc4: choice = RuleChoice::diag4; break;
      case DiagonalRuleKind::markov: choice = RuleChoice::markov; break;
    }
  }
  switch (choice) {
    case RuleChoice::standard: return {{matrix_mutate(b, k), {}}, DiagonalRuleKind::standard};
    case RuleChoice::diag3: return {{mutate_diag3(b, k), {}}, DiagonalRuleKind::cyc3};
    case RuleChoice::diag4: return {{mutate_diag4(b, k), {}}, DiagonalRuleKind::cyc4};
    case RuleChoice::markov: return {markov_adjacent_mutate(b, k), DiagonalRuleKind::markov};
    case RuleChoice::automatic: break;
  }
  throw InternalError("rule_dispatch", "unreachable rule choice");
}

MutationSequence orbit_mutation_sequence(const QuiverAction& action, int k) {
  if (k < 0 || k >= static_cast<int>(action.orbits.size()))
    throw Error("invalid_index", "orbit " + idx(k) + " out of range", {k});
  const Quiver& q = action.quiver;
  const auto& orbit = action.orbits[static_cast<std::size_t>(k)];
  for (int v : orbit)
    if (q.is_frozen(v)) throw Error("frozen_vertex", "orbit " + idx(k) + " contains a frozen vertex", {v});
  if (orbit_cycle_free(action, k)) {
    std::vector<int> steps = orbit;
    std::sort(steps.begin(), steps.end());
    return {steps, std::nullopt};
  }

  const int n = static_cast<int>(orbit.size());
  auto not_cycle = [&](const std::string& why, std::vector<long long> w) {
    return Error("orbit_not_simple_cycle", "orbit " + idx(k) + " is not a simple oriented cycle: " + why, std::move(w));
  };
  if (n < 3) throw not_cycle("fewer than three vertices", {k});

  // Walk the cycle from the representative.
  std::vector<int> order{action.representatives[static_cast<std::size_t>(k)]};
  for (int step = 0; step < n; ++step) {
    const int u = order.back();
    int next = -1;
    int outs = 0;
    int ins = 0;
    for (int v : orbit) {
      const auto w = q(u, v);
      if (w > 1 || w < -1) throw not_cycle("multiple arrows", {u, v});
      if (w > 0) ++outs, next = v;
      if (w < 0) ++ins;
    }
    if (outs != 1 || ins != 1) throw not_cycle("vertex without exactly one arrow in and out", {u});
    if (step + 1 < n) {
      if (std::find(order.begin(), order.end(), next) != order.end()) throw not_cycle("closes early", {u, next});
      order.push_back(next);
    } else if (next != order.front()) {
      throw not_cycle("does not close", {u, next});
    }
  }

  const MutationSequence cyc = cycle_generalized_sequence(n);
  MutationSequence s;
  for (int step : cyc.steps) s.steps.push_back(order[static_cast<std::size_t>(step)]);
  Permutation swap = identity_permutation(q.size());
  std::swap(swap[static_cast<std::size_t>(order[n - 2])], swap[static_cast<std::size_t>(order[n - 1])]);
  s.post_permutation = swap;
  return s;
}

QuiverAction generalized_set_mutate(const QuiverAction& action, int k) {
  const MutationSequence s = orbit_mutation_sequence(action, k);
  if (!s.post_permutation) return set_mutate(action, k);
  const Quiver result = apply_sequence(action.quiver, s);
  try {
    return action.with_quiver(result);
  } catch (const InternalError&) {
    throw;
  } catch (const Error& e) {
    throw InternalError("action_broken", std::string("group action lost after the cycle sequence: ") + e.what(),
                        e.witness());
  }
}

FoldedMatrix refold_oracle(const FoldedMatrix& b, int k) {
  check_index(b, k);
  const QuiverAction unfolded = canonical_unfold(b);
  return fold(generalized_set_mutate(unfolded, k));
}

std::vector<int> markov_sequence() {
  // Copy 1 of every cycle vertex, back to 1_{0,1}; then copy 2.
  return {0, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 1};
}

Quiver markov_unfolded_cycle() {
  Quiver q(6);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) q.set_arrows(2 * i + a, 2 * ((i + 1) % 3) + c, 1);
  return q;
}

GroupRingElement markov_oracle_entry(const GroupRingElement& b, int w) {
  const auto& group = b.group();
  if (group->order() != 3) throw Error("wrong_group", "markov rule needs Z/3");
  if (!b.is_integral()) throw Error("non_integral_entry", "markov oracle needs integer coefficients");
  int powers[3] = {group->identity(), w, group->multiply(w, w)};

  // 1_{i,a} = 2i + a, 2_j = 6 + j.
  const Quiver cycle = markov_unfolded_cycle();
  Quiver q(9);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (cycle(u, v) > 0) q.set_arrows(u, v, cycle(u, v));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Rational c = b.coefficient(powers[(j - i + 3) % 3]);
      for (int a = 0; a < 2; ++a) q.set_arrows(2 * i + a, 6 + j, c.numerator());
    }

  for (int v : markov_sequence()) q = mutate(q, v);

  // Relabel by swapping copies inside cycle positions until the internal part is restored.
  std::optional<Quiver> restored;
  for (int mask = 0; mask < 8 && !restored; ++mask) {
    Permutation p = identity_permutation(9);
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) std::swap(p[static_cast<std::size_t>(2 * i)], p[static_cast<std::size_t>(2 * i + 1)]);
    const Quiver r = q.relabeled(p);
    bool same = true;
    for (int u = 0; u < 6 && same; ++u)
      for (int v = 0; v < 6 && same; ++v) same = r(u, v) == cycle(u, v);
    if (same) restored = r;
  }
  if (!restored) throw InternalError("markov_no_relabeling", "the 12 steps did not return the double cycle");

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if ((*restored)(2 * i, 6 + j) != (*restored)(2 * i + 1, 6 + j))
        throw InternalError("markov_copies_disagree", "the two copies of a cycle vertex differ", {i, j});

  GRE out(group);
  for (int j = 0; j < 3; ++j) out += GRE::basis(group, powers[j], Rational((*restored)(0, 6 + j)));
  return out;
}

std::vector<GroupRingElement> markov_oracle(const FoldedMatrix& b, int k) {
  const int w = require_kind(b, k, DiagonalRuleKind::markov);
  std::vector<GRE> row;
  for (int j = 0; j < b.size(); ++j) row.push_back(j == k ? b(k, k) : markov_oracle_entry(b(k, j), w));
  return row;
}

}  // namespace qfold
