#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qfold/quiver.hpp"

namespace qfold {

/// An element of a finite group: either a permutation of {0..n-1} (image array)
/// or a power of the generator of a cyclic group Z/m. Equality and ordering are
/// structural: permutations compare by image array, cyclic elements by power.
class GroupElement {
 public:
  enum class Kind { permutation, cyclic };

  static GroupElement permutation(std::vector<int> images);
  static GroupElement cyclic(int modulus, int power);
  /// Parses cycle notation such as "(1234)(56)" or "(1,2,10)" with 1-based points.
  /// "1", "e" and "()" denote the identity.
  static GroupElement parse_cycles(const std::string& text, int degree);

  Kind kind() const noexcept { return kind_; }
  bool is_cyclic() const noexcept { return kind_ == Kind::cyclic; }
  /// Permutation degree or cyclic modulus.
  int degree() const noexcept { return degree_; }
  int power() const noexcept { return power_; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool compatible_with(const GroupElement& other) const noexcept {
    return kind_ == other.kind_ && degree_ == other.degree_;
  }

  /// Composition; for permutations (g*h)(x) = g(h(x)).
  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  GroupElement identity() const;
  bool is_identity() const;

  /// "1", "w", "w^2", "(1234)", "(12)(34)". Cyclic generators print as e, w, z
  /// for moduli 2, 3, 4 and as c<m> otherwise.
  std::string to_string() const;

  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;

 private:
  Kind kind_ = Kind::cyclic;
  int degree_ = 1;
  int power_ = 0;
  std::vector<int> images_;
};

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite group given by generators, with its elements enumerated breadth-first
/// from the identity (new element = generator * known element, generators in the
/// given order). Element 0 is the identity.
class PermGroup {
 public:
  static constexpr std::size_t default_cap = 10000;

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const GroupElement& element(int index) const { return elements_.at(static_cast<std::size_t>(index)); }

  std::optional<int> find(const GroupElement& g) const;
  /// Throws Error("not_in_group").
  int index_of(const GroupElement& g) const;

  int identity() const noexcept { return 0; }
  int multiply(int a, int b) const;
  int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  /// For a non-identity element i: element(i) == generators()[parent_generator(i)] * element(parent(i)).
  int parent(int i) const { return parent_[static_cast<std::size_t>(i)]; }
  int parent_generator(int i) const { return parent_gen_[static_cast<std::size_t>(i)]; }

  bool is_cyclic() const;
  /// Same elements in the same enumeration order.
  bool same_as(const PermGroup& other) const { return elements_ == other.elements_; }

 private:
  friend GroupPtr generate_group(std::vector<GroupElement> generators, std::size_t cap);
  PermGroup() = default;

  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::map<GroupElement, int> index_;
  std::vector<int> inverses_;
  std::vector<int> parent_;
  std::vector<int> parent_gen_;
  std::vector<int> table_;  // order x order, empty for large groups
};

/// Closure of the generators. Throws Error("mixed_representation"),
/// Error("degree_mismatch"), Error("group_too_large") or Error("empty_generators").
GroupPtr generate_group(std::vector<GroupElement> generators, std::size_t cap = PermGroup::default_cap);

/// Cyclic group Z/n in the native (modulus, power) representation.
GroupPtr cyclic_group(int n);

bool same_group(const GroupPtr& a, const GroupPtr& b);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // indices into parent->elements()

  std::size_t order() const noexcept { return elements.size(); }
};

/// A homomorphism G -> Sym(points) given by one point map per generator.
class VertexAction {
 public:
  /// Throws Error("action_ill_defined") when the maps do not respect the group's
  /// multiplication, Error("invalid_action") when a map is not a bijection.
  VertexAction(GroupPtr group, std::vector<Permutation> generator_maps);

  const GroupPtr& group() const noexcept { return group_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generator_maps() const noexcept { return generator_maps_; }
  const Permutation& map(int element) const { return maps_.at(static_cast<std::size_t>(element)); }
  int apply(int element, int point) const {
    return maps_[static_cast<std::size_t>(element)][static_cast<std::size_t>(point)];
  }

 private:
  GroupPtr group_;
  int degree_ = 0;
  std::vector<Permutation> generator_maps_;
  std::vector<Permutation> maps_;
};

using Orbits = std::vector<std::vector<int>>;

/// Orbits sorted by minimal point; each orbit lists its minimal point first, then the
/// remaining points in the order the group elements reach them.
Orbits orbits(const VertexAction& action);
Subgroup stabilizer(const VertexAction& action, int point);

/// A group acting on a quiver by quiver automorphisms, with a chosen representative per orbit.
struct QuiverAction {
  Quiver quiver;
  VertexAction action;
  Orbits orbits;
  std::vector<int> representatives;
  std::vector<int> stabilizer_orders;

  const GroupPtr& group() const noexcept { return action.group(); }
  int orbit_of(int vertex) const;
  /// Throws Error("invalid_representative") unless reps[i] lies in orbit i.
  QuiverAction with_representatives(std::vector<int> reps) const;
  /// Same action on another quiver; revalidated.
  QuiverAction with_quiver(Quiver q) const;
};

/// Validates that every generator acts by a quiver automorphism (preserving frozen
/// vertices). Throws Error("not_automorphism") with witness (generator, i, j).
/// Representatives default to the minimal vertex of each orbit.
QuiverAction act_on_quiver(const Quiver& q, VertexAction action);
QuiverAction act_on_quiver(GroupPtr group, const Quiver& q, std::vector<Permutation> generator_maps);

}  // namespace qfold
