#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfold/folding.hpp"
#include "qfold/quiver.hpp"
#include "qfold/special_rules.hpp"

namespace qfold {

/// Canonical representative of a weaving class: the conjugate minimizing the
/// serialization (stab order, then entries shell by shell) over all vertex
/// permutations and diagonal group elements. `key` is that serialization.
struct WeavingCanon {
  std::string key;
  FoldedMatrix matrix;
  WeavingIsomorphism witness;  // apply_weaving(input, witness) == matrix
};

WeavingCanon weaving_canonical_form(const FoldedMatrix& b);

/// Same idea for quivers up to vertex permutation (frozen vertices go to frozen ones).
/// With fix_frozen the frozen vertices keep their relative order and come first.
struct QuiverCanon {
  std::string key;
  Quiver quiver;
  Permutation witness;  // input.relabeled(witness) == quiver
};

QuiverCanon quiver_canonical_form(const Quiver& q, bool fix_frozen = false);

struct GraphNode {
  std::string key;
  std::optional<FoldedMatrix> matrix;
  std::optional<Quiver> quiver;
  /// Not expanded: some index has a diagonal entry without a rule.
  bool terminal = false;
  std::string note;
};

struct GraphEdge {
  int from = 0;
  int index = 0;  // mutated index or vertex
  int to = 0;

  bool operator==(const GraphEdge&) const = default;
};

struct ExchangeGraph {
  std::vector<GraphNode> nodes;  // nodes[0] is the start
  std::vector<GraphEdge> edges;  // one per expansion step, so both directions appear
  bool complete = false;         // frontier exhausted within the budget

  std::size_t terminal_count() const;
};

constexpr std::size_t default_graph_budget = 100000;

struct GraphOptions {
  std::size_t budget = default_graph_budget;
  /// Expand indices in decreasing order instead; the node set must not change.
  bool reverse_order = false;
};

/// Breadth-first closure under mutation at every index, up to weaving isomorphism.
/// Indices whose diagonal is neither zero nor a full closed-form rule (cyc3, cyc4)
/// make the node terminal. Throws Error("invalid_budget") for a zero budget.
ExchangeGraph exchange_graph(const FoldedMatrix& start, const GraphOptions& options = {});

/// Quivers up to isomorphism; mutations at mutable vertices only. With `framed`, the
/// start is frame(q) and the nodes are framed quivers (the cluster exchange graph for
/// acyclic seeds of finite type).
ExchangeGraph exchange_graph(const Quiver& start, const GraphOptions& options = {}, bool framed = false);

/// Iterative deepening over mutation sequences of frame(q) without immediate repeats.
/// The first reddening sequence found (shortest, then lexicographic), or none.
std::optional<MutationSequence> reddening_search(const Quiver& q, int max_depth);

/// Sorted, deterministic Graphviz text. Arrow multiplicities become edge labels,
/// frozen vertices are boxes. Vertices are printed 1-based.
std::string export_dot(const Quiver& q);
/// Frame vertices are named 1', 2', ...; mutable vertices are colored green or red.
std::string export_dot(const FramedQuiver& fq);
/// Undirected; each mutation edge once, labelled with its 1-based index. Terminal nodes dashed.
std::string export_dot(const ExchangeGraph& g);

}  // namespace qfold
