#include "qfold/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qfold/error.hpp"

namespace qfold {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse_permutation(std::span<const int> perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

bool is_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Quiver::Quiver(int n)
    : n_(n), b_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), frozen_(static_cast<std::size_t>(n), false) {
  if (n < 0) throw Error("invalid_quiver", "negative vertex count");
}

Quiver::Quiver(const std::vector<std::vector<Weight>>& rows, std::vector<int> frozen)
    : Quiver(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n_)
      throw Error("invalid_quiver", "matrix is not square", {i});
  }
  for (int v : frozen) {
    if (v < 0 || v >= n_) throw Error("invalid_quiver", "frozen vertex out of range", {v});
    frozen_[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Weight w = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j && w != 0) throw Error("invalid_quiver", "loop at vertex " + std::to_string(i + 1), {i});
      if (w != -rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw Error("invalid_quiver", "matrix is not skew-symmetric", {i, j});
      if (w != 0 && is_frozen(i) && is_frozen(j))
        throw Error("invalid_quiver", "arrows between frozen vertices", {i, j});
      b_[static_cast<std::size_t>(i * n_ + j)] = w;
    }
  }
}

void Quiver::set_arrows(int i, int j, Weight w) {
  if (i == j && w != 0) throw Error("invalid_quiver", "loop at vertex " + std::to_string(i + 1), {i});
  b_[static_cast<std::size_t>(i * n_ + j)] = w;
  b_[static_cast<std::size_t>(j * n_ + i)] = -w;
}

void Quiver::add_arrows(int i, int j, Weight w) { set_arrows(i, j, (*this)(i, j) + w); }

void Quiver::set_frozen(int v, bool frozen) { frozen_[static_cast<std::size_t>(v)] = frozen; }

std::vector<int> Quiver::frozen_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (is_frozen(v)) out.push_back(v);
  return out;
}

std::vector<int> Quiver::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (!is_frozen(v)) out.push_back(v);
  return out;
}

int Quiver::frozen_count() const { return static_cast<int>(std::count(frozen_.begin(), frozen_.end(), true)); }

std::vector<std::vector<Quiver::Weight>> Quiver::rows() const {
  std::vector<std::vector<Weight>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)].assign(row(i).begin(), row(i).end());
  return out;
}

Quiver::Weight Quiver::arrow_count() const {
  Weight total = 0;
  for (Weight w : b_)
    if (w > 0) total += w;
  return total;
}

Quiver Quiver::relabeled(std::span<const int> perm) const {
  if (!is_permutation(perm, n_)) throw Error("invalid_permutation", "relabeling is not a permutation of the vertices");
  Quiver out(n_);
  for (int i = 0; i < n_; ++i) {
    out.frozen_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = is_frozen(i);
    for (int j = 0; j < n_; ++j)
      out.b_[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n_ + perm[static_cast<std::size_t>(j)])] =
          (*this)(i, j);
  }
  return out;
}

Quiver mutate(const Quiver& q, int k) {
  const int n = q.size();
  if (k < 0 || k >= n) throw Error("invalid_vertex", "vertex " + std::to_string(k + 1) + " out of range", {k});
  if (q.is_frozen(k)) throw Error("frozen_vertex", "cannot mutate frozen vertex " + std::to_string(k + 1), {k});
  Quiver out = q;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == k) continue;
      if (q.is_frozen(i) && q.is_frozen(j)) continue;
      const auto bik = q(i, k);
      const auto bkj = q(k, j);
      Quiver::Weight w = q(i, j);
      if (bik > 0 && bkj > 0) w += bik * bkj;
      if (bik < 0 && bkj < 0) w -= bik * bkj;
      out.set_arrows(i, j, w);
    }
  }
  for (int j = 0; j < n; ++j)
    if (j != k) out.set_arrows(k, j, -q(k, j));
  return out;
}

namespace {

void check_steps(const Quiver& q, const MutationSequence& s) {
  for (int k : s.steps) {
    if (k < 0 || k >= q.size()) throw Error("invalid_vertex", "sequence step out of range", {k});
    if (q.is_frozen(k)) throw Error("frozen_vertex", "sequence step at a frozen vertex", {k});
  }
}

}  // namespace

Quiver apply_sequence(const Quiver& q, const MutationSequence& s) {
  check_steps(q, s);
  Quiver out = q;
  for (int k : s.steps) out = mutate(out, k);
  if (s.post_permutation) out = out.relabeled(*s.post_permutation);
  return out;
}

namespace {

struct Signature {
  bool frozen = false;
  std::vector<Quiver::Weight> weights;
  std::vector<Quiver::Weight> fixed;
  bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const Quiver& q, bool fix_frozen) {
  const auto frozen = q.frozen_vertices();
  std::vector<Signature> sig(static_cast<std::size_t>(q.size()));
  for (int v = 0; v < q.size(); ++v) {
    auto& s = sig[static_cast<std::size_t>(v)];
    s.frozen = q.is_frozen(v);
    for (auto w : q.row(v))
      if (w != 0) s.weights.push_back(w);
    std::sort(s.weights.begin(), s.weights.end());
    if (fix_frozen)
      for (int f : frozen) s.fixed.push_back(q(v, f));
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Quiver& a, const Quiver& b, std::vector<std::vector<int>> candidates)
      : a_(a), b_(b), cand_(std::move(candidates)), map_(static_cast<std::size_t>(a.size()), -1),
        used_(static_cast<std::size_t>(a.size()), false) {}

  bool run(int v) {
    if (v == a_.size()) return true;
    for (int w : cand_[static_cast<std::size_t>(v)]) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const int mu = map_[static_cast<std::size_t>(u)];
        ok = a_(v, u) == b_(w, mu);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (run(v + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
    }
    map_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Permutation& map() const { return map_; }

 private:
  const Quiver& a_;
  const Quiver& b_;
  std::vector<std::vector<int>> cand_;
  Permutation map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const Quiver& q1, const Quiver& q2, bool fix_frozen) {
  const int n = q1.size();
  if (q2.size() != n || q1.frozen_count() != q2.frozen_count()) return std::nullopt;
  if (fix_frozen && q1.frozen_vertices() != q2.frozen_vertices()) return std::nullopt;
  const auto s1 = signatures(q1, fix_frozen);
  const auto s2 = signatures(q2, fix_frozen);
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (fix_frozen && q1.is_frozen(v)) {
      cand[static_cast<std::size_t>(v)] = {v};
      continue;
    }
    for (int w = 0; w < n; ++w)
      if (s1[static_cast<std::size_t>(v)] == s2[static_cast<std::size_t>(w)]) cand[static_cast<std::size_t>(v)].push_back(w);
    if (cand[static_cast<std::size_t>(v)].empty()) return std::nullopt;
  }
  IsoSearch search(q1, q2, std::move(cand));
  if (!search.run(0)) return std::nullopt;
  return search.map();
}

FramedQuiver frame(const Quiver& q) {
  if (q.frozen_count() != 0) throw Error("already_framed", "quiver already has frozen vertices");
  const int n = q.size();
  FramedQuiver fq{Quiver(2 * n), n};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) fq.quiver.set_arrows(i, j, q(i, j));
    fq.quiver.set_frozen(n + i);
    fq.quiver.set_arrows(i, n + i, 1);
  }
  return fq;
}

FramedQuiver mutate(const FramedQuiver& fq, int k) {
  if (k < 0 || k >= fq.mutable_count) throw Error("invalid_vertex", "not a mutable vertex of the framed quiver", {k});
  return {mutate(fq.quiver, k), fq.mutable_count};
}

FramedQuiver apply_sequence(const FramedQuiver& fq, const MutationSequence& s) {
  FramedQuiver out = fq;
  for (int k : s.steps) out = mutate(out, k);
  if (s.post_permutation) {
    const auto& p = *s.post_permutation;
    if (!is_permutation(p, fq.mutable_count))
      throw Error("invalid_permutation", "post permutation must permute the mutable vertices");
    Permutation full = identity_permutation(fq.quiver.size());
    std::copy(p.begin(), p.end(), full.begin());
    out.quiver = out.quiver.relabeled(full);
  }
  return out;
}

const char* to_string(VertexColor c) {
  switch (c) {
    case VertexColor::green:
      return "green";
    case VertexColor::red:
      return "red";
    case VertexColor::neither:
      return "neither";
  }
  return "neither";
}

VertexColor vertex_color(const FramedQuiver& fq, int i) {
  if (i < 0 || i >= fq.mutable_count) throw Error("invalid_vertex", "not a mutable vertex", {i});
  bool incoming = false;
  bool outgoing = false;
  for (int j = 0; j < fq.mutable_count; ++j) {
    const auto w = fq.quiver(i, fq.frame_of(j));
    incoming = incoming || w < 0;
    outgoing = outgoing || w > 0;
  }
  if (!incoming) return VertexColor::green;
  if (!outgoing) return VertexColor::red;
  return VertexColor::neither;
}

std::vector<VertexColor> vertex_colors(const FramedQuiver& fq) {
  std::vector<VertexColor> out;
  for (int i = 0; i < fq.mutable_count; ++i) out.push_back(vertex_color(fq, i));
  return out;
}

bool all_red(const FramedQuiver& fq) {
  for (int i = 0; i < fq.mutable_count; ++i)
    if (vertex_color(fq, i) != VertexColor::red) return false;
  return true;
}

bool is_reddening(const Quiver& q, const MutationSequence& s) {
  FramedQuiver fq = frame(q);
  for (int k : s.steps) fq = mutate(fq, k);
  return all_red(fq);
}

std::optional<Permutation> is_generalized_mutation(const Quiver& q, const MutationSequence& s) {
  if (!is_reddening(q, s)) return std::nullopt;
  const FramedQuiver start = frame(q);
  const FramedQuiver twice = apply_sequence(apply_sequence(start, s), s);
  auto iso = are_isomorphic(twice.quiver, start.quiver, /*fix_frozen=*/true);
  if (!iso) return std::nullopt;
  iso->resize(static_cast<std::size_t>(q.size()));
  return iso;
}

MutationSequence cycle_generalized_sequence(int n) {
  if (n < 3) throw Error("invalid_argument", "cycle length must be at least 3", {n});
  MutationSequence s;
  for (int i = 0; i < n; ++i) s.steps.push_back(i);
  for (int i = n - 3; i >= 0; --i) s.steps.push_back(i);
  Permutation p = identity_permutation(n);
  std::swap(p[static_cast<std::size_t>(n - 2)], p[static_cast<std::size_t>(n - 1)]);
  s.post_permutation = p;
  return s;
}

Quiver oriented_cycle(int n, Quiver::Weight multiplicity) {
  Quiver q(n);
  for (int i = 0; i < n; ++i) q.add_arrows(i, (i + 1) % n, multiplicity);
  return q;
}

}  // namespace qfold
