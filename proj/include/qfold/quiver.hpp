#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfold {

/// Vertex permutation: perm[i] is the image of vertex i (0-based).
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(std::span<const int> perm);
bool is_permutation(std::span<const int> perm, int n);

/// A quiver stored as its skew-symmetric matrix of signed arrow counts
/// (b[i][j] = number of arrows i -> j, negative for arrows j -> i), with an
/// optional set of frozen vertices. Vertices are 0-based internally.
class Quiver {
 public:
  using Weight = std::int64_t;

  Quiver() = default;
  explicit Quiver(int n);
  /// Throws Error("invalid_quiver") unless `rows` is square, skew-symmetric,
  /// zero on the diagonal and zero between frozen vertices.
  Quiver(const std::vector<std::vector<Weight>>& rows, std::vector<int> frozen = {});

  int size() const noexcept { return n_; }
  Weight operator()(int i, int j) const { return b_[static_cast<std::size_t>(i * n_ + j)]; }

  /// Sets b[i][j] = w and b[j][i] = -w.
  void set_arrows(int i, int j, Weight w);
  void add_arrows(int i, int j, Weight w);

  bool is_frozen(int v) const { return frozen_[static_cast<std::size_t>(v)]; }
  void set_frozen(int v, bool frozen = true);
  std::vector<int> frozen_vertices() const;
  std::vector<int> mutable_vertices() const;
  int frozen_count() const;

  std::vector<std::vector<Weight>> rows() const;
  std::span<const Weight> row(int i) const {
    return {b_.data() + static_cast<std::size_t>(i * n_), static_cast<std::size_t>(n_)};
  }
  /// Number of arrows (counted with multiplicity).
  Weight arrow_count() const;

  /// Quiver with vertex i renamed perm[i].
  Quiver relabeled(std::span<const int> perm) const;

  bool operator==(const Quiver&) const = default;

 private:
  int n_ = 0;
  std::vector<Weight> b_;
  std::vector<bool> frozen_;
};

/// Mutation at a mutable vertex k. Arrows between two frozen vertices are dropped.
Quiver mutate(const Quiver& q, int k);

struct MutationSequence {
  std::vector<int> steps;
  std::optional<Permutation> post_permutation;

  bool operator==(const MutationSequence&) const = default;
};

/// Left-to-right application of the steps, then relabeling by the post permutation.
Quiver apply_sequence(const Quiver& q, const MutationSequence& s);

/// A permutation p with q1.relabeled(p) == q2, frozen vertices mapping to frozen vertices.
/// With fix_frozen, frozen vertices are fixed pointwise. Exhaustive backtracking search
/// with degree-signature pruning; the first witness in lexicographic order is returned.
std::optional<Permutation> are_isomorphic(const Quiver& q1, const Quiver& q2, bool fix_frozen = false);

/// Q plus a frozen vertex n + i and one arrow i -> n + i for every vertex i.
struct FramedQuiver {
  Quiver quiver;
  int mutable_count = 0;

  int frame_of(int i) const { return mutable_count + i; }
};

FramedQuiver frame(const Quiver& q);
FramedQuiver mutate(const FramedQuiver& fq, int k);
/// Applies the steps; the post permutation acts on mutable vertices only.
FramedQuiver apply_sequence(const FramedQuiver& fq, const MutationSequence& s);

enum class VertexColor { green, red, neither };
const char* to_string(VertexColor c);

VertexColor vertex_color(const FramedQuiver& fq, int i);
std::vector<VertexColor> vertex_colors(const FramedQuiver& fq);
bool all_red(const FramedQuiver& fq);

/// True iff all mutable vertices of frame(q) are red after the steps of s
/// (the post permutation is ignored).
bool is_reddening(const Quiver& q, const MutationSequence& s);

/// If s is reddening and two passes of s (post permutation after each pass) take
/// frame(q) to a quiver framed-isomorphic to frame(q), returns the witnessing
/// isomorphism restricted to the mutable vertices.
std::optional<Permutation> is_generalized_mutation(const Quiver& q, const MutationSequence& s);

/// Steps [1..n, n-2, ..., 1] (0-based: [0..n-1, n-3, ..., 0]) with the transposition of
/// the last two cycle vertices. Throws for n < 3.
MutationSequence cycle_generalized_sequence(int n);

/// Oriented cycle 0 -> 1 -> ... -> n-1 -> 0 with `multiplicity` arrows per edge.
Quiver oriented_cycle(int n, Quiver::Weight multiplicity = 1);

}  // namespace qfold
