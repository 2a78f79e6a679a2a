#include "qfold/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "qfold/error.hpp"

namespace qfold {

GroupElement GroupElement::permutation(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0 || !is_permutation(images, n)) throw Error("invalid_element", "image array is not a bijection");
  GroupElement g;
  g.kind_ = Kind::permutation;
  g.degree_ = n;
  g.images_ = std::move(images);
  return g;
}

GroupElement GroupElement::cyclic(int modulus, int power) {
  if (modulus < 1) throw Error("invalid_element", "cyclic modulus must be positive", {modulus});
  GroupElement g;
  g.kind_ = Kind::cyclic;
  g.degree_ = modulus;
  g.power_ = ((power % modulus) + modulus) % modulus;
  return g;
}

GroupElement GroupElement::parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1" || s == "e" || s == "()") return permutation(std::move(images));

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw Error("invalid_element", "expected '(' in cycle notation: " + text);
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw Error("invalid_element", "unterminated cycle: " + text);
    const std::string body = s.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    if (body.find(',') != std::string::npos) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) cycle.push_back(std::stoi(item) - 1);
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("invalid_element", "bad cycle entry: " + text);
        cycle.push_back(c - '1');
      }
    }
    // "(a)(b)" is the product a*b, so b acts first.
    std::vector<int> cycle_map(static_cast<std::size_t>(degree));
    std::iota(cycle_map.begin(), cycle_map.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      const int b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree) throw Error("invalid_element", "cycle point out of range: " + text);
      cycle_map[static_cast<std::size_t>(a)] = b;
    }
    std::vector<int> composed(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x)
      composed[static_cast<std::size_t>(x)] = images[static_cast<std::size_t>(cycle_map[static_cast<std::size_t>(x)])];
    images.swap(composed);
    pos = close + 1;
  }
  return permutation(std::move(images));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (!compatible_with(rhs)) throw Error("degree_mismatch", "cannot multiply elements of different groups");
  if (is_cyclic()) return cyclic(degree_, power_ + rhs.power_);
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  return permutation(std::move(out));
}

GroupElement GroupElement::inverse() const {
  if (is_cyclic()) return cyclic(degree_, -power_);
  return permutation(inverse_permutation(images_));
}

GroupElement GroupElement::identity() const {
  if (is_cyclic()) return cyclic(degree_, 0);
  return permutation(identity_permutation(degree_));
}

bool GroupElement::is_identity() const {
  if (is_cyclic()) return power_ == 0;
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::string GroupElement::to_string() const {
  if (is_identity()) return "1";
  if (is_cyclic()) {
    std::string letter;
    switch (degree_) {
      case 2: letter = "e"; break;
      case 3: letter = "w"; break;
      case 4: letter = "z"; break;
      default: letter = "c" + std::to_string(degree_);
    }
    return power_ == 1 ? letter : letter + "^" + std::to_string(power_);
  }
  const bool wide = degree_ > 9;
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree_; ++start) {
    if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    do {
      if (wide && !first) out += ",";
      out += std::to_string(x + 1);
      seen[static_cast<std::size_t>(x)] = true;
      x = images_[static_cast<std::size_t>(x)];
      first = false;
    } while (x != start);
    out += ")";
  }
  return out;
}

std::optional<int> PermGroup::find(const GroupElement& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int PermGroup::index_of(const GroupElement& g) const {
  if (auto i = find(g)) return *i;
  throw Error("not_in_group", "element " + g.to_string() + " is not in the group");
}

int PermGroup::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)];
  return index_of(element(a) * element(b));
}

int PermGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

bool PermGroup::is_cyclic() const {
  for (int a = 0; a < static_cast<int>(order()); ++a)
    if (element_order(a) == static_cast<int>(order())) return true;
  return false;
}

GroupPtr generate_group(std::vector<GroupElement> generators, std::size_t cap) {
  if (generators.empty()) throw Error("empty_generators", "a group needs at least one generator");
  const auto& first = generators.front();
  for (const auto& g : generators) {
    if (g.kind() != first.kind()) throw Error("mixed_representation", "generators mix permutations and cyclic elements");
    if (g.degree() != first.degree()) throw Error("degree_mismatch", "generators act on different degrees");
  }

  std::shared_ptr<PermGroup> group(new PermGroup());
  group->generators_ = generators;
  auto add = [&](GroupElement g, int parent, int gen) {
    group->index_.emplace(g, static_cast<int>(group->elements_.size()));
    group->elements_.push_back(std::move(g));
    group->parent_.push_back(parent);
    group->parent_gen_.push_back(gen);
  };
  add(first.identity(), -1, -1);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int e = frontier.front();
    frontier.pop_front();
    for (std::size_t s = 0; s < generators.size(); ++s) {
      GroupElement next = generators[s] * group->elements_[static_cast<std::size_t>(e)];
      if (group->index_.count(next)) continue;
      if (group->elements_.size() >= cap)
        throw Error("group_too_large", "group closure exceeds the cap of " + std::to_string(cap) + " elements");
      add(std::move(next), e, static_cast<int>(s));
      frontier.push_back(static_cast<int>(group->elements_.size()) - 1);
    }
  }

  const std::size_t n = group->elements_.size();
  if (n <= 1024) {
    group->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        group->table_[a * n + b] = group->index_.at(group->elements_[a] * group->elements_[b]);
  }
  group->inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) group->inverses_[a] = group->index_.at(group->elements_[a].inverse());
  return group;
}

GroupPtr cyclic_group(int n) { return generate_group({GroupElement::cyclic(n, 1)}); }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a && b && a->same_as(*b);
}

VertexAction::VertexAction(GroupPtr group, std::vector<Permutation> generator_maps)
    : group_(std::move(group)), generator_maps_(std::move(generator_maps)) {
  if (!group_) throw Error("invalid_action", "missing group");
  if (generator_maps_.size() != group_->generators().size())
    throw Error("invalid_action", "need exactly one vertex map per generator");
  degree_ = static_cast<int>(generator_maps_.front().size());
  for (std::size_t s = 0; s < generator_maps_.size(); ++s)
    if (!is_permutation(generator_maps_[s], degree_))
      throw Error("invalid_action", "vertex map of generator " + std::to_string(s + 1) + " is not a bijection",
                  {static_cast<long long>(s)});

  const auto compose = [](const Permutation& f, const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[static_cast<std::size_t>(g[x])];
    return out;
  };

  const int order = static_cast<int>(group_->order());
  maps_.resize(static_cast<std::size_t>(order));
  maps_[0] = identity_permutation(degree_);
  for (int e = 1; e < order; ++e)
    maps_[static_cast<std::size_t>(e)] =
        compose(generator_maps_[static_cast<std::size_t>(group_->parent_generator(e))],
                maps_[static_cast<std::size_t>(group_->parent(e))]);

  // Consistent on every Cayley-graph edge <=> a homomorphism.
  const auto& gens = group_->generators();
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const int gi = group_->index_of(gens[s]);
    for (int e = 0; e < order; ++e) {
      const int target = group_->multiply(gi, e);
      if (maps_[static_cast<std::size_t>(target)] != compose(generator_maps_[s], maps_[static_cast<std::size_t>(e)]))
        throw Error("action_ill_defined", "vertex maps do not respect the group relations",
                    {static_cast<long long>(s), e});
    }
  }
}

Orbits orbits(const VertexAction& action) {
  const int n = action.degree();
  const int order = static_cast<int>(action.group()->order());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Orbits out;
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> orbit;
    for (int g = 0; g < order; ++g) {
      const int w = action.apply(g, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        orbit.push_back(w);
      }
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const VertexAction& action, int point) {
  if (point < 0 || point >= action.degree()) throw Error("invalid_vertex", "point out of range", {point});
  Subgroup h{action.group(), {}};
  std::vector<bool> in_orbit(static_cast<std::size_t>(action.degree()), false);
  std::size_t orbit_size = 0;
  for (int g = 0; g < static_cast<int>(action.group()->order()); ++g) {
    const int w = action.apply(g, point);
    if (w == point) h.elements.push_back(g);
    if (!in_orbit[static_cast<std::size_t>(w)]) {
      in_orbit[static_cast<std::size_t>(w)] = true;
      ++orbit_size;
    }
  }
  if (orbit_size * h.order() != action.group()->order())
    throw InternalError("orbit_stabilizer", "orbit-stabilizer count mismatch", {point});
  return h;
}

int QuiverAction::orbit_of(int vertex) const {
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (std::find(orbits[k].begin(), orbits[k].end(), vertex) != orbits[k].end()) return static_cast<int>(k);
  throw Error("invalid_vertex", "vertex not in any orbit", {vertex});
}

QuiverAction QuiverAction::with_representatives(std::vector<int> reps) const {
  if (reps.size() != orbits.size()) throw Error("invalid_representative", "need one representative per orbit");
  for (std::size_t k = 0; k < reps.size(); ++k)
    if (std::find(orbits[k].begin(), orbits[k].end(), reps[k]) == orbits[k].end())
      throw Error("invalid_representative",
                  "vertex " + std::to_string(reps[k] + 1) + " is not in orbit " + std::to_string(k + 1),
                  {static_cast<long long>(k), reps[k]});
  QuiverAction out = *this;
  out.representatives = std::move(reps);
  return out;
}

QuiverAction QuiverAction::with_quiver(Quiver q) const {
  QuiverAction out = act_on_quiver(q, action);
  out.representatives = representatives;
  return out;
}

QuiverAction act_on_quiver(const Quiver& q, VertexAction action) {
  if (action.degree() != q.size())
    throw Error("invalid_action", "vertex maps act on " + std::to_string(action.degree()) + " points, quiver has " +
                                      std::to_string(q.size()));
  const auto& maps = action.generator_maps();
  for (std::size_t s = 0; s < maps.size(); ++s) {
    const auto& m = maps[s];
    for (int i = 0; i < q.size(); ++i) {
      if (q.is_frozen(i) != q.is_frozen(m[static_cast<std::size_t>(i)]))
        throw Error("not_automorphism", "generator " + std::to_string(s + 1) + " moves a frozen vertex",
                    {static_cast<long long>(s), i, i});
      for (int j = 0; j < q.size(); ++j) {
        if (q(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)]) != q(i, j))
          throw Error("not_automorphism",
                      "generator " + std::to_string(s + 1) + " is not an automorphism: arrows " + std::to_string(i + 1) +
                          "->" + std::to_string(j + 1) + " are not preserved",
                      {static_cast<long long>(s), i, j});
      }
    }
  }
  QuiverAction out{q, std::move(action), {}, {}, {}};
  out.orbits = orbits(out.action);
  for (const auto& orbit : out.orbits) {
    out.representatives.push_back(orbit.front());
    out.stabilizer_orders.push_back(static_cast<int>(stabilizer(out.action, orbit.front()).order()));
  }
  return out;
}

QuiverAction act_on_quiver(GroupPtr group, const Quiver& q, std::vector<Permutation> generator_maps) {
  return act_on_quiver(q, VertexAction(std::move(group), std::move(generator_maps)));
}

}  // namespace qfold
