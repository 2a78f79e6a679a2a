#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfold/group.hpp"
#include "qfold/group_ring.hpp"

namespace qfold {

/// Square matrix over Q[G] with symmetrizer data: stab_orders[i] = ||H_i||, so that
/// c_ji = -(||H_j|| / ||H_i||) sigma(c_ij).
struct FoldedMatrix {
  GroupPtr group;
  std::vector<std::vector<GroupRingElement>> entries;
  std::vector<int> stab_orders;
  std::optional<std::vector<int>> representatives;  // vertices of the quiver it was folded from

  int size() const noexcept { return static_cast<int>(entries.size()); }
  const GroupRingElement& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  GroupRingElement& at(int i, int j) { return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  /// Entrywise equality of entries and stab orders; representatives are provenance only.
  bool operator==(const FoldedMatrix& other) const;
};

/// An m x m zero matrix with trivial stabilizers.
FoldedMatrix zero_matrix(GroupPtr group, int m);

/// Builds from parsed entries (see parse_group_ring) and validates.
FoldedMatrix folded_from_strings(GroupPtr group, const std::vector<std::vector<std::string>>& entries,
                                 std::vector<int> stab_orders = {});

/// Description of the first (i, j) violating the symmetrizability relation, if any.
std::optional<std::string> symmetrizability_violation(const FoldedMatrix& b);

/// Throws Error("not_skew_symmetrizable") (or InternalError when `internal`) on a violation,
/// Error("invalid_matrix") on shape problems. Denominators not dividing ||G|| produce a warning.
void validate(const FoldedMatrix& b, bool internal = false);

/// c_ij = (1 / ||H_j||) sum_g B(x_i -> g x_j) g at the action's representatives.
FoldedMatrix fold(const QuiverAction& action);

/// The vertices of orbit k span no arrows.
bool orbit_cycle_free(const QuiverAction& action, int k);

/// Mutates every vertex of orbit k once. Throws Error("orbit_not_cycle_free") with a
/// witnessing arrow (u, v) otherwise.
QuiverAction set_mutate(const QuiverAction& action, int k);

/// b'_ij = -b_ij if i or j is k, else b_ij + b_ik o b_kj. Throws Error("use_diagonal_rule")
/// when b_kk != 0.
FoldedMatrix matrix_mutate(const FoldedMatrix& b, int k);

/// fold(set_mutate(action, k)) == matrix_mutate(fold(action), k).
bool theorem_mutation_commutes(const QuiverAction& action, int k);

/// D_j(g) B D_j(g)^{-1}: row j multiplied on the left by g, column j on the right by g^{-1}.
FoldedMatrix weave(const FoldedMatrix& b, int j, int g);
/// The action with representative j replaced by g . x_j; fold of it equals weave(fold(action), j, g).
QuiverAction weave_action(const QuiverAction& action, int j, int g);

/// B2[perm[i]][perm[j]] = diag[i] * B1[i][j] * diag[j]^{-1}, with matching stab orders.
struct WeavingIsomorphism {
  Permutation perm;
  std::vector<int> diag;  // group element indices
};

FoldedMatrix apply_weaving(const FoldedMatrix& b, const WeavingIsomorphism& w);

/// Exhaustive search; the first witness in lexicographic (perm, diag) order.
std::optional<WeavingIsomorphism> weaving_isomorphic(const FoldedMatrix& b1, const FoldedMatrix& b2);

/// G-symmetric quiver on m * ||G|| vertices, vertex i_h = i * ||G|| + index(h), with
/// a_g arrows i_h -> j_{hg} for each positive coefficient a_g of b_ij. G acts by
/// g . i_h = i_{gh}. Requires trivial stabilizers and integer entries.
QuiverAction canonical_unfold(const FoldedMatrix& b);

}  // namespace qfold
