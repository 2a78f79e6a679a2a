#include "qfold/explorer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qfold/error.hpp"
#include "qfold/log.hpp"

namespace qfold {

namespace {

using Shell = std::vector<long long>;

struct Partial {
  std::vector<int> order;  // order[p] = original index placed at position p
  std::vector<int> diag;
  std::vector<bool> used;
};

using Choice = std::pair<int, int>;  // (original index, group element)

// Level by level, keep every partial placement whose shells so far are minimal. All
// surviving partials share the same key prefix, so the final survivors give the
// minimal full key.
Partial minimize(int m, const std::function<std::vector<Choice>(const Partial&, int)>& choices,
                 const std::function<void(const Partial&, int, int, Shell&)>& shell) {
  std::vector<Partial> states{Partial{{}, {}, std::vector<bool>(static_cast<std::size_t>(m), false)}};
  Shell best;
  Shell cur;
  for (int p = 0; p < m; ++p) {
    std::vector<Partial> next;
    bool have = false;
    for (const Partial& s : states) {
      for (const auto& [v, d] : choices(s, p)) {
        cur.clear();
        shell(s, v, d, cur);
        if (have) {
          if (cur > best) continue;
          if (cur < best) next.clear();
        }
        have = true;
        best = cur;
        Partial n = s;
        n.order.push_back(v);
        n.diag.push_back(d);
        n.used[static_cast<std::size_t>(v)] = true;
        next.push_back(std::move(n));
      }
    }
    states.swap(next);
  }
  return states.front();
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

std::string entry_key(const GroupRingElement& e, int order) {
  std::string out;
  for (int x = 0; x < order; ++x) {
    if (x) out += ',';
    out += to_string(e.coefficient(x));
  }
  return out;
}

}  // namespace

WeavingCanon weaving_canonical_form(const FoldedMatrix& b) {
  const int m = b.size();
  const auto& g = *b.group;
  const int n = static_cast<int>(g.order());
  const bool abelian = is_abelian(g);

  // Every conjugated entry d_v b_vw d_w^-1, densely encoded, ranked.
  using Dense = std::vector<Rational>;
  const auto slot = [&](int v, int w, int dv, int dw) {
    return ((static_cast<std::size_t>(v) * m + w) * n + dv) * n + dw;
  };
  std::vector<Dense> dense(static_cast<std::size_t>(m) * m * n * n);
  for (int v = 0; v < m; ++v)
    for (int w = 0; w < m; ++w)
      for (int dv = 0; dv < n; ++dv)
        for (int dw = 0; dw < n; ++dw) {
          Dense out(static_cast<std::size_t>(n));
          for (const auto& [x, q] : b(v, w).terms())
            out[static_cast<std::size_t>(g.multiply(g.multiply(dv, x), g.inverse(dw)))] = q;
          dense[slot(v, w, dv, dw)] = std::move(out);
        }
  std::vector<Dense> sorted = dense;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<long long> rank(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    rank[i] = std::lower_bound(sorted.begin(), sorted.end(), dense[i]) - sorted.begin();

  const auto choices = [&](const Partial& s, int p) {
    std::vector<Choice> out;
    for (int v = 0; v < m; ++v) {
      if (s.used[static_cast<std::size_t>(v)]) continue;
      // In an abelian group only the ratios d_v d_w^-1 matter.
      const int top = abelian && p == 0 ? 1 : n;
      for (int d = 0; d < top; ++d) out.emplace_back(v, d);
    }
    return out;
  };
  const auto shell = [&](const Partial& s, int v, int d, Shell& out) {
    out.push_back(b.stab_orders[static_cast<std::size_t>(v)]);
    out.push_back(rank[slot(v, v, d, d)]);
    for (std::size_t q = 0; q < s.order.size(); ++q) {
      out.push_back(rank[slot(s.order[q], v, s.diag[q], d)]);
      out.push_back(rank[slot(v, s.order[q], d, s.diag[q])]);
    }
  };
  const Partial best = minimize(m, choices, shell);

  WeavingIsomorphism w{Permutation(static_cast<std::size_t>(m)), std::vector<int>(static_cast<std::size_t>(m))};
  for (int p = 0; p < m; ++p) {
    w.perm[static_cast<std::size_t>(best.order[static_cast<std::size_t>(p)])] = p;
    w.diag[static_cast<std::size_t>(best.order[static_cast<std::size_t>(p)])] = best.diag[static_cast<std::size_t>(p)];
  }
  FoldedMatrix c = apply_weaving(b, w);

  std::string key = "m" + std::to_string(m) + "|s";
  for (int s : c.stab_orders) key += std::to_string(s) + ",";
  for (int p = 0; p < m; ++p) {
    key += "|" + entry_key(c(p, p), n);
    for (int q = 0; q < p; ++q) key += ";" + entry_key(c(q, p), n) + ";" + entry_key(c(p, q), n);
  }
  return {std::move(key), std::move(c), std::move(w)};
}

QuiverCanon quiver_canonical_form(const Quiver& q, bool fix_frozen) {
  const int n = q.size();
  const std::vector<int> frozen = q.frozen_vertices();
  const int nf = static_cast<int>(frozen.size());

  // Isomorphism-invariant vertex data to cut ties early.
  std::vector<Shell> signature(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    long long out = 0, in = 0, nbrs = 0;
    for (int w = 0; w < n; ++w) {
      const auto x = q(v, w);
      if (x > 0) out += x;
      if (x < 0) in -= x;
      if (x != 0) ++nbrs;
    }
    signature[static_cast<std::size_t>(v)] = {q.is_frozen(v) ? 1 : 0, out, in, nbrs};
  }

  const auto choices = [&](const Partial& s, int p) {
    std::vector<Choice> out;
    if (fix_frozen && p < nf) {
      out.emplace_back(frozen[static_cast<std::size_t>(p)], 0);
      return out;
    }
    for (int v = 0; v < n; ++v)
      if (!s.used[static_cast<std::size_t>(v)] && !(fix_frozen && q.is_frozen(v))) out.emplace_back(v, 0);
    return out;
  };
  const auto shell = [&](const Partial& s, int v, int, Shell& out) {
    const auto& sig = signature[static_cast<std::size_t>(v)];
    out.insert(out.end(), sig.begin(), sig.end());
    for (int u : s.order) out.push_back(q(u, v));
  };
  const Partial best = minimize(n, choices, shell);

  Permutation perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(best.order[static_cast<std::size_t>(p)])] = p;
  Quiver c = q.relabeled(perm);

  std::string key = "n" + std::to_string(n) + "|f";
  for (int v : c.frozen_vertices()) key += std::to_string(v) + ",";
  key += "|";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) key += std::to_string(c(i, j)) + ",";
  return {std::move(key), std::move(c), std::move(perm)};
}

std::size_t ExchangeGraph::terminal_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const GraphNode& n) { return n.terminal; }));
}

namespace {

// Shared breadth-first loop. `expand(node)` returns (index, key, node) for every
// neighbour, or marks the node terminal.
template <class Expand>
ExchangeGraph explore(GraphNode root, const GraphOptions& options, Expand expand) {
  if (options.budget == 0) throw Error("invalid_budget", "the node budget must be positive");
  ExchangeGraph g;
  std::unordered_map<std::string, int> seen;
  seen.emplace(root.key, 0);
  g.nodes.push_back(std::move(root));
  std::deque<int> frontier{0};
  bool exhausted = true;
  while (!frontier.empty() && exhausted) {
    const int u = frontier.front();
    frontier.pop_front();
    auto neighbours = expand(g.nodes[static_cast<std::size_t>(u)]);
    if (options.reverse_order) std::reverse(neighbours.begin(), neighbours.end());
    for (auto& [k, node] : neighbours) {
      auto it = seen.find(node.key);
      int v = 0;
      if (it != seen.end()) {
        v = it->second;
      } else {
        if (g.nodes.size() >= options.budget) {
          exhausted = false;
          break;
        }
        v = static_cast<int>(g.nodes.size());
        seen.emplace(node.key, v);
        g.nodes.push_back(std::move(node));
        frontier.push_back(v);
      }
      g.edges.push_back({u, k, v});
    }
  }
  g.complete = exhausted && frontier.empty();
  return g;
}

GraphNode matrix_node(const FoldedMatrix& b) {
  WeavingCanon c = weaving_canonical_form(b);
  GraphNode n;
  n.key = std::move(c.key);
  n.matrix = std::move(c.matrix);
  return n;
}

GraphNode quiver_node(const Quiver& q, bool fix_frozen) {
  QuiverCanon c = quiver_canonical_form(q, fix_frozen);
  GraphNode n;
  n.key = std::move(c.key);
  n.quiver = std::move(c.quiver);
  return n;
}

}  // namespace

ExchangeGraph exchange_graph(const FoldedMatrix& start, const GraphOptions& options) {
  validate(start);
  return explore(matrix_node(start), options, [](GraphNode& node) {
    std::vector<std::pair<int, GraphNode>> out;
    const FoldedMatrix& b = *node.matrix;
    for (int k = 0; k < b.size(); ++k) {
      const auto c = classify_diagonal(b, k);
      if (!c || c->kind == DiagonalRuleKind::markov) {
        node.terminal = true;
        node.note = "index " + std::to_string(k + 1) + ": no full rule for diagonal " + b(k, k).to_string();
        return decltype(out){};
      }
    }
    for (int k = 0; k < b.size(); ++k) {
      try {
        out.emplace_back(k, matrix_node(mutate_with_rule(b, k).result.matrix));
      } catch (const InternalError& e) {
        // Symmetrizability lost; reported as a finding, not a crash.
        warn("mutation at " + std::to_string(k + 1) + " of " + node.key + ": " + e.what());
        node.terminal = true;
        node.note = std::string("index ") + std::to_string(k + 1) + ": " + e.what();
        return decltype(out){};
      }
    }
    return out;
  });
}

ExchangeGraph exchange_graph(const Quiver& start, const GraphOptions& options, bool framed) {
  const Quiver root = framed ? frame(start).quiver : start;
  return explore(quiver_node(root, framed), options, [framed](GraphNode& node) {
    std::vector<std::pair<int, GraphNode>> out;
    const Quiver& q = *node.quiver;
    for (int k : q.mutable_vertices()) out.emplace_back(k, quiver_node(mutate(q, k), framed));
    return out;
  });
}

namespace {

bool redden_dfs(const FramedQuiver& fq, int depth, int last, std::vector<int>& path) {
  if (depth == 0) return all_red(fq);
  for (int k = 0; k < fq.mutable_count; ++k) {
    if (k == last) continue;
    path.push_back(k);
    if (redden_dfs(mutate(fq, k), depth - 1, k, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<MutationSequence> reddening_search(const Quiver& q, int max_depth) {
  if (q.frozen_count() != 0) throw Error("framed_input", "reddening search expects an unframed quiver");
  const FramedQuiver fq = frame(q);
  for (int depth = 0; depth <= max_depth; ++depth) {
    std::vector<int> path;
    if (redden_dfs(fq, depth, -1, path)) return MutationSequence{path, std::nullopt};
  }
  return std::nullopt;
}

namespace {

// name(v) is the DOT node id; extra(v) adds attributes.
template <class Name, class Extra>
std::string quiver_dot(const Quiver& q, Name name, Extra extra) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int v = 0; v < q.size(); ++v) {
    std::vector<std::string> attrs;
    if (q.is_frozen(v)) attrs.push_back("shape=box");
    extra(v, attrs);
    out << "  " << name(v);
    for (std::size_t a = 0; a < attrs.size(); ++a) out << (a == 0 ? " [" : ", ") << attrs[a];
    out << (attrs.empty() ? "" : "]") << ";\n";
  }
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      const auto w = q(i, j);
      if (w <= 0) continue;
      out << "  " << name(i) << " -> " << name(j);
      if (w > 1) out << " [label=\"" << w << "\"]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const Quiver& q) {
  return quiver_dot(
      q, [](int v) { return std::to_string(v + 1); }, [](int, std::vector<std::string>&) {});
}

std::string export_dot(const FramedQuiver& fq) {
  const int n = fq.mutable_count;
  const auto colors = vertex_colors(fq);
  return quiver_dot(
      fq.quiver,
      [n](int v) { return v < n ? std::to_string(v + 1) : "\"" + std::to_string(v - n + 1) + "'\""; },
      [&](int v, std::vector<std::string>& attrs) {
        if (v < n && colors[v] != VertexColor::neither) attrs.push_back(std::string("color=") + to_string(colors[v]));
      });
}

std::string export_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << i + 1 << "\"";
    if (g.nodes[i].terminal) out << ", style=dashed";
    out << "];\n";
  }
  std::set<std::tuple<int, int, int>> edges;
  for (const auto& e : g.edges)
    if (e.from <= e.to) edges.emplace(e.from, e.to, e.index);
  for (const auto& [u, v, k] : edges) out << "  n" << u << " -- n" << v << " [label=\"" << k + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qfold
