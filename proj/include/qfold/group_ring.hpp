#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qfold/group.hpp"
#include "qfold/rational.hpp"

namespace qfold {

/// An element sum_g a_g g of Q[G] with exact rational coefficients. Terms are kept
/// sorted by element index with no zero coefficients.
class GroupRingElement {
 public:
  using Term = std::pair<int, Rational>;

  explicit GroupRingElement(GroupPtr group);
  /// Checked construction: elements must lie in the group and denominators must divide ||G||.
  static GroupRingElement from_terms(GroupPtr group, const std::vector<std::pair<GroupElement, Rational>>& terms);
  static GroupRingElement basis(GroupPtr group, int element, Rational coefficient = 1);
  static GroupRingElement scalar(GroupPtr group, Rational value);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coefficient(int element) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integral() const;
  /// True when every denominator divides ||G||.
  bool has_group_denominators() const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  /// Convolution product sum a_g b_h (gh).
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Rational& q, const GroupRingElement& a);

  /// g * a and a * g for a single group element index.
  GroupRingElement left_multiplied(int g) const;
  GroupRingElement right_multiplied(int g) const;

  bool operator==(const GroupRingElement& other) const;

  /// Pretty form such as "1 - w + 1/2*w^2", terms in canonical_terms() order.
  std::string to_string() const;
  /// Terms in serialization order: identity first, then by element name.
  std::vector<Term> canonical_terms() const;

 private:
  GroupRingElement(GroupPtr group, std::vector<Term> terms) : group_(std::move(group)), terms_(std::move(terms)) {}
  void check_same_group(const GroupRingElement& other) const;

  GroupPtr group_;
  std::vector<Term> terms_;
};

/// sigma(sum a_g g) = sum a_g g^{-1}.
GroupRingElement involution(const GroupRingElement& a);

enum class Sign { positive, negative };

/// [a]_+ keeps the positive coefficients, [a]_- the negative ones; a = [a]_+ + [a]_-.
GroupRingElement signed_part(const GroupRingElement& a, Sign sign);
inline GroupRingElement positive_part(const GroupRingElement& a) { return signed_part(a, Sign::positive); }
inline GroupRingElement negative_part(const GroupRingElement& a) { return signed_part(a, Sign::negative); }

/// a o b = [a]_+ [b]_+ - [a]_- [b]_-, in this order.
GroupRingElement circ(const GroupRingElement& a, const GroupRingElement& b);

/// Parses sums of terms like "1 - w + 1/2*w^2" or "(1234) - 2*(13)". No parentheses
/// around sums. Elements are "1", powers of the generator letter of a cyclic group
/// (e, w, z, c<m>, exponent may be negative) or cycle notation.
GroupRingElement parse_group_ring(const GroupPtr& group, const std::string& text);

/// Element index of the group element named by `text` (same grammar as a single term).
int parse_group_element(const GroupPtr& group, const std::string& text);

}  // namespace qfold
