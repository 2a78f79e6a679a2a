#include "qfold/folding.hpp"

#include <algorithm>

#include "qfold/error.hpp"
#include "qfold/log.hpp"

namespace qfold {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

void check_index(const FoldedMatrix& b, int k) {
  if (k < 0 || k >= b.size()) throw Error("invalid_index", "index " + idx(k) + " out of range", {k});
}

void check_group_element(const GroupPtr& g, int e) {
  if (e < 0 || e >= static_cast<int>(g->order())) throw Error("not_in_group", "group element index out of range", {e});
}

}  // namespace

bool FoldedMatrix::operator==(const FoldedMatrix& other) const {
  return same_group(group, other.group) && stab_orders == other.stab_orders && entries == other.entries;
}

FoldedMatrix zero_matrix(GroupPtr group, int m) {
  FoldedMatrix b{group, {}, std::vector<int>(static_cast<std::size_t>(m), 1), std::nullopt};
  b.entries.assign(static_cast<std::size_t>(m),
                   std::vector<GroupRingElement>(static_cast<std::size_t>(m), GroupRingElement(group)));
  return b;
}

FoldedMatrix folded_from_strings(GroupPtr group, const std::vector<std::vector<std::string>>& entries,
                                 std::vector<int> stab_orders) {
  const int m = static_cast<int>(entries.size());
  FoldedMatrix b = zero_matrix(group, m);
  if (!stab_orders.empty()) b.stab_orders = std::move(stab_orders);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != m)
      throw Error("invalid_matrix", "matrix is not square", {i});
    for (int j = 0; j < m; ++j) b.at(i, j) = parse_group_ring(group, entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  validate(b);
  return b;
}

std::optional<std::string> symmetrizability_violation(const FoldedMatrix& b) {
  for (int i = 0; i < b.size(); ++i)
    for (int j = i; j < b.size(); ++j) {
      const Rational ratio(b.stab_orders[static_cast<std::size_t>(j)], b.stab_orders[static_cast<std::size_t>(i)]);
      if (b(j, i) != -ratio * involution(b(i, j)))
        return "entries (" + idx(i) + "," + idx(j) + ") = " + b(i, j).to_string() + " and (" + idx(j) + "," + idx(i) +
               ") = " + b(j, i).to_string() + " violate c_ji = -(|H_j|/|H_i|) sigma(c_ij)";
    }
  return std::nullopt;
}

void validate(const FoldedMatrix& b, bool internal) {
  if (!b.group) throw Error("invalid_matrix", "matrix without a group");
  const int m = b.size();
  if (static_cast<int>(b.stab_orders.size()) != m) throw Error("invalid_matrix", "need one stabilizer order per index");
  for (int i = 0; i < m; ++i) {
    const int h = b.stab_orders[static_cast<std::size_t>(i)];
    if (h < 1 || static_cast<int>(b.group->order()) % h != 0)
      throw Error("invalid_matrix", "stabilizer order must divide the group order", {i, h});
    if (static_cast<int>(b.entries[static_cast<std::size_t>(i)].size()) != m)
      throw Error("invalid_matrix", "matrix is not square", {i});
    for (int j = 0; j < m; ++j)
      if (!same_group(b(i, j).group(), b.group)) throw Error("group_mismatch", "entry over a different group", {i, j});
  }
  if (auto v = symmetrizability_violation(b)) {
    if (internal) throw InternalError("not_skew_symmetrizable", *v);
    throw Error("not_skew_symmetrizable", *v);
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!b(i, j).has_group_denominators())
        warn("entry (" + idx(i) + "," + idx(j) + ") = " + b(i, j).to_string() +
             " has a denominator not dividing the group order");
}

FoldedMatrix fold(const QuiverAction& action) {
  const auto& g = action.group();
  const int m = static_cast<int>(action.orbits.size());
  const int order = static_cast<int>(g->order());
  FoldedMatrix b = zero_matrix(g, m);
  b.stab_orders = action.stabilizer_orders;
  b.representatives = action.representatives;
  for (int i = 0; i < m; ++i) {
    const int xi = action.representatives[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const int xj = action.representatives[static_cast<std::size_t>(j)];
      const Rational scale(1, b.stab_orders[static_cast<std::size_t>(j)]);
      GroupRingElement c(g);
      for (int e = 0; e < order; ++e) {
        const auto w = action.quiver(xi, action.action.apply(e, xj));
        if (w != 0) c += GroupRingElement::basis(g, e, scale * Rational(w));
      }
      b.at(i, j) = std::move(c);
    }
  }
  validate(b, /*internal=*/true);
  return b;
}

bool orbit_cycle_free(const QuiverAction& action, int k) {
  const auto& orbit = action.orbits.at(static_cast<std::size_t>(k));
  for (int u : orbit)
    for (int v : orbit)
      if (action.quiver(u, v) != 0) return false;
  return true;
}

QuiverAction set_mutate(const QuiverAction& action, int k) {
  if (k < 0 || k >= static_cast<int>(action.orbits.size()))
    throw Error("invalid_index", "orbit " + idx(k) + " out of range", {k});
  const auto& orbit = action.orbits[static_cast<std::size_t>(k)];
  for (int u : orbit)
    for (int v : orbit)
      if (action.quiver(u, v) > 0)
        throw Error("orbit_not_cycle_free",
                    "orbit " + idx(k) + " is not cycle free: arrow " + idx(u) + "->" + idx(v), {u, v});
  Quiver forward = action.quiver;
  for (int v : orbit) forward = mutate(forward, v);
  Quiver backward = action.quiver;
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) backward = mutate(backward, *it);
  if (!(forward == backward)) throw InternalError("set_mutation_order", "set mutation depends on the order", {k});
  try {
    return action.with_quiver(std::move(forward));
  } catch (const Error& e) {
    throw InternalError("action_broken", std::string("group action lost after set mutation: ") + e.what(), e.witness());
  }
}

FoldedMatrix matrix_mutate(const FoldedMatrix& b, int k) {
  check_index(b, k);
  if (!b(k, k).is_zero())
    throw Error("use_diagonal_rule", "entry (" + idx(k) + "," + idx(k) + ") = " + b(k, k).to_string() +
                                         " is nonzero; the standard rule does not apply", {k});
  FoldedMatrix out = b;
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      if (i == k || j == k)
        out.at(i, j) = -b(i, j);
      else
        out.at(i, j) = b(i, j) + circ(b(i, k), b(k, j));
    }
  out.representatives.reset();
  validate(out, /*internal=*/true);
  return out;
}

bool theorem_mutation_commutes(const QuiverAction& action, int k) {
  const FoldedMatrix lhs = fold(set_mutate(action, k));
  const FoldedMatrix rhs = matrix_mutate(fold(action), k);
  return lhs == rhs;
}

FoldedMatrix weave(const FoldedMatrix& b, int j, int g) {
  check_index(b, j);
  check_group_element(b.group, g);
  const int ginv = b.group->inverse(g);
  FoldedMatrix out = b;
  for (int l = 0; l < b.size(); ++l) out.at(j, l) = out(j, l).left_multiplied(g);
  for (int i = 0; i < b.size(); ++i) out.at(i, j) = out(i, j).right_multiplied(ginv);
  out.representatives.reset();
  return out;
}

QuiverAction weave_action(const QuiverAction& action, int j, int g) {
  if (j < 0 || j >= static_cast<int>(action.orbits.size())) throw Error("invalid_index", "orbit out of range", {j});
  check_group_element(action.group(), g);
  auto reps = action.representatives;
  reps[static_cast<std::size_t>(j)] = action.action.apply(g, reps[static_cast<std::size_t>(j)]);
  return action.with_representatives(std::move(reps));
}

FoldedMatrix apply_weaving(const FoldedMatrix& b, const WeavingIsomorphism& w) {
  const int m = b.size();
  if (!is_permutation(w.perm, m) || static_cast<int>(w.diag.size()) != m)
    throw Error("invalid_permutation", "weaving needs a permutation and one group element per index");
  FoldedMatrix out = b;
  for (int i = 0; i < m; ++i) {
    const int pi = w.perm[static_cast<std::size_t>(i)];
    out.stab_orders[static_cast<std::size_t>(pi)] = b.stab_orders[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const int pj = w.perm[static_cast<std::size_t>(j)];
      out.at(pi, pj) = b(i, j)
                           .left_multiplied(w.diag[static_cast<std::size_t>(i)])
                           .right_multiplied(b.group->inverse(w.diag[static_cast<std::size_t>(j)]));
    }
  }
  out.representatives.reset();
  return out;
}

namespace {

class WeavingSearch {
 public:
  WeavingSearch(const FoldedMatrix& a, const FoldedMatrix& b)
      : a_(a), b_(b), m_(a.size()), perm_(static_cast<std::size_t>(m_), -1), diag_(static_cast<std::size_t>(m_), 0),
        used_(static_cast<std::size_t>(m_), false) {}

  bool run(int i) {
    if (i == m_) return true;
    const auto& g = *a_.group;
    for (int target = 0; target < m_; ++target) {
      if (used_[static_cast<std::size_t>(target)]) continue;
      if (a_.stab_orders[static_cast<std::size_t>(i)] != b_.stab_orders[static_cast<std::size_t>(target)]) continue;
      for (int d = 0; d < static_cast<int>(g.order()); ++d) {
        if (!consistent(i, target, d)) continue;
        perm_[static_cast<std::size_t>(i)] = target;
        diag_[static_cast<std::size_t>(i)] = d;
        used_[static_cast<std::size_t>(target)] = true;
        if (run(i + 1)) return true;
        used_[static_cast<std::size_t>(target)] = false;
      }
    }
    return false;
  }

  WeavingIsomorphism witness() const { return {perm_, diag_}; }

 private:
  bool matches(int i, int j, int di, int dj, int pi, int pj) const {
    return b_(pi, pj) == a_(i, j).left_multiplied(di).right_multiplied(a_.group->inverse(dj));
  }

  bool consistent(int i, int target, int d) const {
    if (!matches(i, i, d, d, target, target)) return false;
    for (int u = 0; u < i; ++u) {
      const int pu = perm_[static_cast<std::size_t>(u)];
      const int du = diag_[static_cast<std::size_t>(u)];
      if (!matches(u, i, du, d, pu, target) || !matches(i, u, d, du, target, pu)) return false;
    }
    return true;
  }

  const FoldedMatrix& a_;
  const FoldedMatrix& b_;
  int m_;
  Permutation perm_;
  std::vector<int> diag_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<WeavingIsomorphism> weaving_isomorphic(const FoldedMatrix& b1, const FoldedMatrix& b2) {
  if (!same_group(b1.group, b2.group) || b1.size() != b2.size()) return std::nullopt;
  WeavingSearch search(b1, b2);
  if (!search.run(0)) return std::nullopt;
  return search.witness();
}

QuiverAction canonical_unfold(const FoldedMatrix& b) {
  const auto& g = b.group;
  const int m = b.size();
  const int order = static_cast<int>(g->order());
  for (int i = 0; i < m; ++i)
    if (b.stab_orders[static_cast<std::size_t>(i)] != 1)
      throw Error("nontrivial_stabilizer", "canonical unfolding needs trivial stabilizers", {i});
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (!b(i, j).is_integral())
        throw Error("non_integral_entry", "entry (" + idx(i) + "," + idx(j) + ") is not in Z[G]", {i, j});
  }
  if (auto v = symmetrizability_violation(b)) throw Error("not_skew_symmetric", *v);

  const int n = m * order;
  std::vector<Quiver::Weight> arrows(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& [e, a] : b(i, j).terms()) {
        if (a <= 0) continue;
        for (int h = 0; h < order; ++h) {
          const int u = i * order + h;
          const int v = j * order + g->multiply(h, e);
          if (u == v) throw InternalError("unfold_loop", "unfolding produced a loop", {u});
          arrows[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] +=
              a.numerator();
        }
      }
  Quiver q(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const auto forward = arrows[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
      const auto back = arrows[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)];
      if (forward != 0 && back != 0) throw InternalError("unfold_two_cycle", "unfolding produced a 2-cycle", {u, v});
      q.set_arrows(u, v, forward - back);
    }

  std::vector<Permutation> maps;
  for (const auto& gen : g->generators()) {
    const int s = g->index_of(gen);
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
      for (int h = 0; h < order; ++h) p[static_cast<std::size_t>(i * order + h)] = i * order + g->multiply(s, h);
    maps.push_back(std::move(p));
  }
  QuiverAction out = act_on_quiver(g, q, std::move(maps));
  if (!(fold(out) == b)) throw InternalError("unfold_roundtrip", "folding the canonical unfolding does not recover B");
  return out;
}

}  // namespace qfold
