#pragma once

#include <string>
#include <vector>

#include "qfold/folding.hpp"

namespace qfold::corpus {

GroupPtr z2();
GroupPtr z3();
GroupPtr z4();

// Matrices over Z[Z/3] and Z[Z/4] studied for finite mutation type.
FoldedMatrix W3();
FoldedMatrix W4();
FoldedMatrix W5();
FoldedMatrix U3();
/// In the reference data, entries (2,4) and (4,2) are both -1, which is not sigma-skew. This
/// reading keeps b_24 = -1 and sets b_42 = 1 (2 -> 3 -> 4 -> 2 oriented).
FoldedMatrix U4();
/// The other repair: b_24 = 1, b_42 = -1.
FoldedMatrix U4_alternative();

/// Six vertices 1_1,1_2,2_1,2_2,3_1,3_2 (0..5) swapped pairwise by Z/2.
QuiverAction z2_example();
FoldedMatrix z2_example_matrix_11();  // representatives 1_1, 2_1, 3_1
FoldedMatrix z2_example_matrix_12();  // representatives 1_2, 2_1, 3_1

/// Oriented hexagon 1 -> ... -> 6 -> 1 with Z/3 acting by i -> i+2, and Z/2 by i -> i+3.
QuiverAction hexagon_z3();
QuiverAction hexagon_z2();
FoldedMatrix hexagon_z3_matrix();
FoldedMatrix hexagon_z2_matrix();

/// Sink 1 with arrows from 2, 3, 4, 5; Z/2 swaps 2 <-> 4 and 3 <-> 5.
QuiverAction star_quiver();

/// 1-skeleton of the cuboctahedron: vertices are the permutations of (+-1, +-1, 0) in
/// lexicographic order. Square faces are clockwise seen from outside (reversed when
/// `reverse_orientation`).
Quiver cuboctahedron(bool reverse_orientation = false);
/// The rotation group as S4 acting on the four body diagonals (1,1,1), (1,1,-1),
/// (1,-1,1), (-1,1,1), labelled labels[0..3] + 1. Generators are cycle notation on 4 points.
QuiverAction cuboctahedron_action(const std::vector<std::string>& generators, bool reverse_orientation = false,
                                  const Permutation& labels = {0, 1, 2, 3});

struct CuboctahedronCase {
  std::string name;
  std::vector<std::string> generators;
  GroupPtr group;
  FoldedMatrix expected;
};
/// The five subgroups with their reference folded matrices.
std::vector<CuboctahedronCase> cuboctahedron_cases();

/// The double 3-cycle.
Quiver markov_quiver();
FoldedMatrix markov_matrix();

/// Q_3n: cycle 1_1 -> 1_2 -> 1_3 -> 1_1 and chains k_i -> (k-1)_i, Z/3 rotating i.
/// Vertex k_i is (k-1)*3 + (i-1).
QuiverAction q3n(int n);

/// 3-cycle 1_1 -> 1_2 -> 1_3 -> 1_1 with 1_i -> 2_i (before) and 2_i -> 1_{i+1} (after
/// mutating set 1), Z/3 rotating i. Vertices 1_i = i-1, 2_i = 2+i.
QuiverAction cycle3_example_before();
QuiverAction cycle3_example_after();
/// Same for the 4-cycle with Z/4.
QuiverAction cycle4_example_before();
QuiverAction cycle4_example_after();

struct NamedMatrix {
  std::string name;
  FoldedMatrix matrix;
};
std::vector<NamedMatrix> named_matrices();

}  // namespace qfold::corpus
