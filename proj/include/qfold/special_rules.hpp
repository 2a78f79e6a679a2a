#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfold/folding.hpp"

namespace qfold {

// Mutation at an index with a nonzero diagonal entry. All rules here need a cyclic
// group and trivial stabilizers.

enum class DiagonalRuleKind {
  standard,  // b_kk = 0
  cyc3,      // G = Z/3, b_kk = w - w^-1
  cyc4,      // G = Z/4, b_kk = z - z^-1
  markov,    // G = Z/3, b_kk = 2(w - w^-1)
};

const char* to_string(DiagonalRuleKind kind);

/// The kind plus the group element g (index) with b_kk = g - g^-1 or 2(g - g^-1).
/// `generator` is the identity for the standard kind.
struct DiagonalClass {
  DiagonalRuleKind kind;
  int generator = 0;
};

/// Which rule applies at k, if any.
std::optional<DiagonalClass> classify_diagonal(const FoldedMatrix& b, int k);

/// Rule selection as on the command line: auto, standard, diag3, diag4, markov.
enum class RuleChoice { automatic, standard, diag3, diag4, markov };
/// Throws Error("unknown_rule").
RuleChoice parse_rule(const std::string& name);
const char* to_string(RuleChoice choice);

// Closed forms for a single entry b = b_kj of the mutated row.
GroupRingElement diag3_row_entry(const GroupRingElement& b, int w);
GroupRingElement diag4_row_entry(const GroupRingElement& b, int z);
GroupRingElement markov_row_entry(const GroupRingElement& b, int w);

/// Throws Error("wrong_group"), Error("wrong_diagonal"), Error("nontrivial_stabilizer"),
/// Error("invalid_index").
FoldedMatrix mutate_diag3(const FoldedMatrix& b, int k);
FoldedMatrix mutate_diag4(const FoldedMatrix& b, int k);

struct PartialMutation {
  FoldedMatrix matrix;
  /// Entries (i, j) left untouched because no rule for them is known.
  std::vector<std::pair<int, int>> stale;
};

/// Only row and column k are updated; everything else is copied and listed as stale.
PartialMutation markov_adjacent_mutate(const FoldedMatrix& b, int k);

struct RuleMutation {
  PartialMutation result;
  DiagonalRuleKind kind;
};

/// Dispatches on `choice`; automatic picks by classify_diagonal and throws
/// Error("no_rule") when nothing fits. An explicit choice that does not fit the
/// diagonal throws the rule's own error.
RuleMutation mutate_with_rule(const FoldedMatrix& b, int k, RuleChoice choice = RuleChoice::automatic);

/// Mutation of orbit k as a set: plain set mutation when the orbit spans no arrows,
/// otherwise the orbit must be a single oriented cycle of simple arrows (length >= 3),
/// which gets the generalized n-cycle sequence in cycle order from the representative,
/// followed by the swap of the last two. Throws Error("orbit_not_simple_cycle").
QuiverAction generalized_set_mutate(const QuiverAction& action, int k);
/// The vertex steps behind generalized_set_mutate: the orbit in increasing order
/// for a cycle-free orbit, else the cycle sequence with its swap as post permutation.
MutationSequence orbit_mutation_sequence(const QuiverAction& action, int k);

/// fold(generalized_set_mutate(canonical_unfold(b), k)).
FoldedMatrix refold_oracle(const FoldedMatrix& b, int k);

/// Row k after the Markov rule, computed on an explicit 9-vertex quiver per entry:
/// two copies of each cycle vertex, the 12-step sequence, and relabeling back.
/// Throws InternalError("markov_copies_disagree") or InternalError("markov_no_relabeling").
std::vector<GroupRingElement> markov_oracle(const FoldedMatrix& b, int k);
/// One entry: b' for b = b_kj, with b_kk = 2(w - w^-1).
GroupRingElement markov_oracle_entry(const GroupRingElement& b, int w);

/// The 12 steps on vertices 1_{i,a} = 2i + a.
std::vector<int> markov_sequence();
/// Internal part of the Markov oracle quiver: 1_{i,a} -> 1_{i+1,b} for all a, b.
Quiver markov_unfolded_cycle();

}  // namespace qfold
