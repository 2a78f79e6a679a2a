#include "qfold/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "qfold/error.hpp"

namespace qfold::corpus {

GroupPtr z2() {
  static const GroupPtr g = cyclic_group(2);
  return g;
}
GroupPtr z3() {
  static const GroupPtr g = cyclic_group(3);
  return g;
}
GroupPtr z4() {
  static const GroupPtr g = cyclic_group(4);
  return g;
}

FoldedMatrix W3() {
  return folded_from_strings(z3(), {{"0", "1 - w", "0"}, {"-1 + w^-1", "0", "1"}, {"0", "-1", "0"}});
}

FoldedMatrix W4() {
  return folded_from_strings(
      z3(), {{"0", "1 - w", "0", "-1"}, {"-1 + w^-1", "0", "1", "0"}, {"0", "-1", "0", "1"}, {"1", "0", "-1", "0"}});
}

FoldedMatrix W5() {
  return folded_from_strings(z3(), {{"0", "1 - w", "0", "0", "0"},
                                    {"-1 + w^-1", "0", "1", "0", "-1"},
                                    {"0", "-1", "0", "-1", "1 + w"},
                                    {"0", "0", "1", "0", "-w"},
                                    {"0", "1", "-1 - w^-1", "w^-1", "0"}});
}

FoldedMatrix U3() {
  return folded_from_strings(z4(), {{"0", "1 - z", "0"}, {"-1 + z^-1", "0", "1"}, {"0", "-1", "0"}});
}

FoldedMatrix U4() {
  return folded_from_strings(z4(), {{"0", "1 - z", "0", "0"},
                                    {"-1 + z^-1", "0", "1", "-1"},
                                    {"0", "-1", "0", "1 + z"},
                                    {"0", "1", "-1 - z^-1", "0"}});
}

FoldedMatrix U4_alternative() {
  return folded_from_strings(z4(), {{"0", "1 - z", "0", "0"},
                                    {"-1 + z^-1", "0", "1", "1"},
                                    {"0", "-1", "0", "1 + z"},
                                    {"0", "-1", "-1 - z^-1", "0"}});
}

QuiverAction z2_example() {
  // 1_1 -> 2_1 -> 3_2, 3_1 -> 2_1 and the mirror image under the swap of subscripts.
  Quiver q(6);
  q.set_arrows(0, 2, 1);
  q.set_arrows(1, 3, 1);
  q.set_arrows(2, 5, 1);
  q.set_arrows(3, 4, 1);
  q.set_arrows(4, 2, 1);
  q.set_arrows(5, 3, 1);
  return act_on_quiver(z2(), q, {Permutation{1, 0, 3, 2, 5, 4}}).with_representatives({0, 2, 4});
}

FoldedMatrix z2_example_matrix_11() {
  return folded_from_strings(z2(), {{"0", "1", "0"}, {"-1", "0", "e - 1"}, {"0", "1 - e", "0"}});
}

FoldedMatrix z2_example_matrix_12() {
  return folded_from_strings(z2(), {{"0", "e", "0"}, {"-e", "0", "e - 1"}, {"0", "1 - e", "0"}});
}

QuiverAction hexagon_z3() { return act_on_quiver(z3(), oriented_cycle(6), {Permutation{2, 3, 4, 5, 0, 1}}); }

QuiverAction hexagon_z2() { return act_on_quiver(z2(), oriented_cycle(6), {Permutation{3, 4, 5, 0, 1, 2}}); }

FoldedMatrix hexagon_z3_matrix() { return folded_from_strings(z3(), {{"0", "1 - w^-1"}, {"-1 + w", "0"}}); }

FoldedMatrix hexagon_z2_matrix() {
  return folded_from_strings(z2(), {{"0", "1", "-e"}, {"-1", "0", "1"}, {"e", "-1", "0"}});
}

QuiverAction star_quiver() {
  Quiver q(5);
  for (int v = 1; v < 5; ++v) q.set_arrows(v, 0, 1);
  return act_on_quiver(z2(), q, {Permutation{0, 3, 4, 1, 2}});
}

namespace {

using Vec = std::array<int, 3>;

std::vector<Vec> cubo_vertices() {
  std::vector<Vec> out;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z)
        if ((x == 0) + (y == 0) + (z == 0) == 1) out.push_back({x, y, z});
  return out;  // already lexicographic
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Signed permutation matrices of determinant +1: v -> (s_0 v_{p0}, s_1 v_{p1}, s_2 v_{p2}).
struct Rotation {
  std::array<int, 3> axis;
  std::array<int, 3> sign;
  Vec apply(const Vec& v) const {
    return {sign[0] * v[static_cast<std::size_t>(axis[0])], sign[1] * v[static_cast<std::size_t>(axis[1])],
            sign[2] * v[static_cast<std::size_t>(axis[2])]};
  }
};

std::vector<Rotation> rotations() {
  std::vector<Rotation> out;
  std::array<int, 3> axis{0, 1, 2};
  do {
    int parity = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (axis[static_cast<std::size_t>(i)] > axis[static_cast<std::size_t>(j)]) ++parity;
    for (int s = 0; s < 8; ++s) {
      const std::array<int, 3> sign{s & 1 ? -1 : 1, s & 2 ? -1 : 1, s & 4 ? -1 : 1};
      const int det = (parity % 2 ? -1 : 1) * sign[0] * sign[1] * sign[2];
      if (det == 1) out.push_back({axis, sign});
    }
  } while (std::next_permutation(axis.begin(), axis.end()));
  return out;
}

const std::array<Vec, 4> kDiagonals{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};

// Permutation of the diagonal labels induced by a rotation.
std::vector<int> diagonal_permutation(const Rotation& r, const Permutation& labels) {
  std::vector<int> images(4);
  for (std::size_t a = 0; a < 4; ++a) {
    const Vec image = r.apply(kDiagonals[a]);
    for (std::size_t b = 0; b < 4; ++b) {
      const Vec neg{-kDiagonals[b][0], -kDiagonals[b][1], -kDiagonals[b][2]};
      if (image == kDiagonals[b] || image == neg)
        images[static_cast<std::size_t>(labels[a])] = labels[b];
    }
  }
  return images;
}

}  // namespace

Quiver cuboctahedron(bool reverse_orientation) {
  const auto verts = cubo_vertices();
  const int n = static_cast<int>(verts.size());
  Quiver q(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Vec d = sub(verts[static_cast<std::size_t>(u)], verts[static_cast<std::size_t>(v)]);
      if (dot(d, d) != 2) continue;
      // The square containing both: a coordinate where both are +-1 with the same sign.
      for (std::size_t a = 0; a < 3; ++a) {
        const int s = verts[static_cast<std::size_t>(u)][a];
        if (s == 0 || verts[static_cast<std::size_t>(v)][a] != s) continue;
        Vec normal{0, 0, 0};
        normal[a] = s;
        const int turn = dot(cross(sub(verts[static_cast<std::size_t>(u)], normal), sub(verts[static_cast<std::size_t>(v)], normal)), normal);
        // Clockwise seen from outside: negative turn.
        const bool forward = (turn < 0) != reverse_orientation;
        q.set_arrows(u, v, forward ? 1 : -1);
      }
    }
  return q;
}

QuiverAction cuboctahedron_action(const std::vector<std::string>& generators, bool reverse_orientation,
                                  const Permutation& labels) {
  if (!is_permutation(labels, 4)) throw Error("invalid_permutation", "diagonal labels must permute 4 points");
  const auto verts = cubo_vertices();
  std::map<std::vector<int>, Rotation> by_perm;
  for (const auto& r : rotations()) by_perm.emplace(diagonal_permutation(r, labels), r);
  if (by_perm.size() != 24) throw InternalError("cuboctahedron", "rotation group is not S4");

  std::vector<GroupElement> gens;
  std::vector<Permutation> maps;
  for (const auto& text : generators) {
    const GroupElement g = GroupElement::parse_cycles(text, 4);
    const Rotation& r = by_perm.at(g.images());
    Permutation map(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      const Vec image = r.apply(verts[v]);
      map[v] = static_cast<int>(std::find(verts.begin(), verts.end(), image) - verts.begin());
    }
    gens.push_back(g);
    maps.push_back(std::move(map));
  }
  return act_on_quiver(generate_group(gens), cuboctahedron(reverse_orientation), std::move(maps));
}

std::vector<CuboctahedronCase> cuboctahedron_cases() {
  std::vector<CuboctahedronCase> out;
  const auto add = [&](std::string name, std::vector<std::string> gens, std::vector<std::vector<std::string>> m,
                       std::vector<int> stabs) {
    std::vector<GroupElement> elems;
    for (const auto& s : gens) elems.push_back(GroupElement::parse_cycles(s, 4));
    GroupPtr g = generate_group(elems);
    FoldedMatrix expected = folded_from_strings(g, m, std::move(stabs));
    out.push_back({std::move(name), std::move(gens), g, std::move(expected)});
  };
  add("C4", {"(1234)"},
      {{"(1234) - (1432)", "1 - (1234)", "0"},
       {"-1 + (1432)", "0", "1 - (1432)"},
       {"0", "-1 + (1234)", "(1432) - (1234)"}},
      {1, 1, 1});
  add("V4", {"(12)(34)", "(13)(24)"},
      {{"0", "1 - (12)(34)", "-1 + (13)(24)"},
       {"-1 + (12)(34)", "0", "1 - (14)(23)"},
       {"1 - (13)(24)", "-1 + (14)(23)", "0"}},
      {1, 1, 1});
  add("C3", {"(123)"},
      {{"(123) - (132)", "1", "-(123)", "0"},
       {"-1", "0", "1 + (123)", "-1"},
       {"(132)", "-1 - (132)", "0", "1"},
       {"0", "1", "-1", "(132) - (123)"}},
      {1, 1, 1, 1});
  add("D4", {"(1234)", "(13)"},
      {{"(1234) - (1432)", "1/2 - 1/2*(1234) + 1/2*(24) - 1/2*(13)"}, {"-1 + (1432) - (24) + (13)", "0"}}, {1, 2});
  add("S4", {"(1234)", "(12)"}, {{"1/2*(1234) - 1/2*(1432) + 1/2*(1342) - 1/2*(1243)"}}, {2});
  return out;
}

Quiver markov_quiver() { return oriented_cycle(3, 2); }

FoldedMatrix markov_matrix() { return folded_from_strings(z3(), {{"2*w - 2*w^-1"}}); }

QuiverAction q3n(int n) {
  if (n < 1) throw Error("invalid_argument", "Q_3n needs n >= 1", {n});
  const auto v = [](int k, int i) { return (k - 1) * 3 + (i - 1); };
  Quiver q(3 * n);
  for (int i = 1; i <= 3; ++i) {
    q.set_arrows(v(1, i), v(1, i % 3 + 1), 1);
    for (int k = 2; k <= n; ++k) q.set_arrows(v(k, i), v(k - 1, i), 1);
  }
  Permutation rot(static_cast<std::size_t>(3 * n));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= 3; ++i) rot[static_cast<std::size_t>(v(k, i))] = v(k, i % 3 + 1);
  return act_on_quiver(z3(), q, {rot});
}

namespace {

QuiverAction cycle_example(const GroupPtr& g, bool after) {
  const int n = static_cast<int>(g->order());
  Quiver full(2 * n);
  for (int i = 0; i < n; ++i) {
    full.set_arrows(i, (i + 1) % n, 1);
    if (after)
      full.set_arrows(n + i, (i + 1) % n, 1);
    else
      full.set_arrows(i, n + i, 1);
  }
  Permutation rot(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    rot[static_cast<std::size_t>(n + i)] = n + (i + 1) % n;
  }
  return act_on_quiver(g, full, {rot});
}

}  // namespace

QuiverAction cycle3_example_before() { return cycle_example(z3(), false); }
QuiverAction cycle3_example_after() { return cycle_example(z3(), true); }
QuiverAction cycle4_example_before() { return cycle_example(z4(), false); }
QuiverAction cycle4_example_after() { return cycle_example(z4(), true); }

std::vector<NamedMatrix> named_matrices() {
  std::vector<NamedMatrix> out{{"W3", W3()},
                               {"W4", W4()},
                               {"W5", W5()},
                               {"U3", U3()},
                               {"U4", U4()},
                               {"U4-alt", U4_alternative()},
                               {"z2-example-11", z2_example_matrix_11()},
                               {"z2-example-12", z2_example_matrix_12()},
                               {"hexagon-z3", hexagon_z3_matrix()},
                               {"hexagon-z2", hexagon_z2_matrix()},
                               {"markov", markov_matrix()}};
  for (auto& c : cuboctahedron_cases()) out.push_back({"cuboctahedron-" + c.name, c.expected});
  return out;
}

}  // namespace qfold::corpus
