#include "qfold/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "qfold/error.hpp"

namespace qfold {

namespace {

// Merges (index, coefficient) pairs, dropping zeros.
std::vector<GroupRingElement::Term> normalize(std::vector<GroupRingElement::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GroupRingElement::Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (out.back().second.numerator() == 0) out.pop_back();
  }
  return out;
}

std::string cyclic_letter(int modulus) {
  switch (modulus) {
    case 2: return "e";
    case 3: return "w";
    case 4: return "z";
    default: return "c" + std::to_string(modulus);
  }
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw Error("invalid_group", "group ring element without a group");
}

GroupRingElement GroupRingElement::from_terms(GroupPtr group,
                                              const std::vector<std::pair<GroupElement, Rational>>& terms) {
  if (!group) throw Error("invalid_group", "group ring element without a group");
  std::vector<Term> raw;
  for (const auto& [g, q] : terms) raw.emplace_back(group->index_of(g), q);
  GroupRingElement out(group, normalize(std::move(raw)));
  if (!out.has_group_denominators())
    throw Error("bad_denominator", "coefficient denominators must divide the group order in " + out.to_string());
  return out;
}

GroupRingElement GroupRingElement::basis(GroupPtr group, int element, Rational coefficient) {
  if (!group) throw Error("invalid_group", "group ring element without a group");
  if (element < 0 || element >= static_cast<int>(group->order()))
    throw Error("not_in_group", "element index out of range", {element});
  std::vector<Term> t;
  if (coefficient.numerator() != 0) t.emplace_back(element, coefficient);
  return GroupRingElement(std::move(group), std::move(t));
}

GroupRingElement GroupRingElement::scalar(GroupPtr group, Rational value) {
  return basis(std::move(group), 0, value);
}

Rational GroupRingElement::coefficient(int element) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), element,
                                   [](const Term& t, int e) { return t.first < e; });
  return it != terms_.end() && it->first == element ? it->second : Rational(0);
}

bool GroupRingElement::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.denominator() == 1; });
}

bool GroupRingElement::has_group_denominators() const {
  const auto order = static_cast<Integer>(group_->order());
  return std::all_of(terms_.begin(), terms_.end(),
                     [order](const Term& t) { return order % t.second.denominator() == 0; });
}

void GroupRingElement::check_same_group(const GroupRingElement& other) const {
  if (!same_group(group_, other.group_)) throw Error("group_mismatch", "group ring elements over different groups");
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  check_same_group(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      const Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  terms_.swap(merged);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) { return *this += -rhs; }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_same_group(b);
  const PermGroup& g = *a.group_;
  std::vector<GroupRingElement::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [x, p] : a.terms_)
    for (const auto& [y, q] : b.terms_) raw.emplace_back(g.multiply(x, y), p * q);
  return GroupRingElement(a.group_, normalize(std::move(raw)));
}

GroupRingElement operator*(const Rational& q, const GroupRingElement& a) {
  if (q.numerator() == 0) return GroupRingElement(a.group_);
  GroupRingElement out = a;
  for (auto& t : out.terms_) t.second *= q;
  return out;
}

GroupRingElement GroupRingElement::left_multiplied(int g) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [x, q] : terms_) raw.emplace_back(group_->multiply(g, x), q);
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return GroupRingElement(group_, std::move(raw));
}

GroupRingElement GroupRingElement::right_multiplied(int g) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [x, q] : terms_) raw.emplace_back(group_->multiply(x, g), q);
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return GroupRingElement(group_, std::move(raw));
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  return same_group(group_, other.group_) && terms_ == other.terms_;
}

std::vector<GroupRingElement::Term> GroupRingElement::canonical_terms() const {
  // Identity first, then by printed name.
  std::vector<std::pair<std::string, Term>> keyed;
  for (const auto& t : terms_)
    keyed.emplace_back(t.first == group_->identity() ? std::string() : group_->element(t.first).to_string(), t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [x, q] : canonical_terms()) {
    const bool negative = q < 0;
    const Rational mag = negative ? -q : q;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string name = group_->element(x).to_string();
    if (x == group_->identity())
      out += qfold::to_string(mag);
    else if (mag == Rational(1))
      out += name;
    else
      out += qfold::to_string(mag) + "*" + name;
  }
  return out;
}

GroupRingElement involution(const GroupRingElement& a) {
  const auto& g = *a.group();
  GroupRingElement out(a.group());
  for (const auto& [x, q] : a.terms()) out += GroupRingElement::basis(a.group(), g.inverse(x), q);
  return out;
}

GroupRingElement signed_part(const GroupRingElement& a, Sign sign) {
  GroupRingElement out(a.group());
  for (const auto& [x, q] : a.terms())
    if ((sign == Sign::positive) == (q > 0)) out += GroupRingElement::basis(a.group(), x, q);
  return out;
}

GroupRingElement circ(const GroupRingElement& a, const GroupRingElement& b) {
  return positive_part(a) * positive_part(b) - negative_part(a) * negative_part(b);
}

namespace {

Rational parse_rational(const std::string& s, const std::string& whole) {
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const Integer n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    const Integer n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(s);
    const std::string ds = s.substr(slash + 1);
    const Integer d = std::stoll(ds, &used);
    if (used != ds.size() || d == 0) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw Error("parse_error", "bad coefficient '" + s + "' in '" + whole + "'");
  }
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/';
  });
}

}  // namespace

int parse_group_element(const GroupPtr& group, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "1") return group->identity();

  // Optional trailing power.
  int power = 1;
  const auto caret = s.rfind('^');
  std::string base = s;
  if (caret != std::string::npos && s.find(')', caret) == std::string::npos) {
    try {
      std::size_t used = 0;
      power = std::stoi(s.substr(caret + 1), &used);
      if (used != s.size() - caret - 1) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw Error("parse_error", "bad exponent in '" + text + "'");
    }
    base = s.substr(0, caret);
  }

  const GroupElement& gen0 = group->generators().front();
  int index = -1;
  if (gen0.is_cyclic()) {
    if (base != cyclic_letter(gen0.degree()))
      throw Error("parse_error", "unknown element '" + text + "'; expected powers of " + cyclic_letter(gen0.degree()));
    index = group->index_of(GroupElement::cyclic(gen0.degree(), 1));
  } else {
    if (base.empty() || base.front() != '(')
      throw Error("parse_error", "expected cycle notation, got '" + text + "'");
    index = group->index_of(GroupElement::parse_cycles(base, gen0.degree()));
  }
  if (power < 0) {
    index = group->inverse(index);
    power = -power;
  }
  int out = group->identity();
  for (int k = 0; k < power; ++k) out = group->multiply(out, index);
  return out;
}

GroupRingElement parse_group_ring(const GroupPtr& group, const std::string& text) {
  if (!group) throw Error("invalid_group", "group ring element without a group");
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("parse_error", "empty group ring element");

  // Split on top-level + and -, except a '-' that follows '^'.
  std::vector<std::pair<bool, std::string>> pieces;
  int depth = 0;
  std::string current;
  bool negative = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-') && !(c == '-' && i > 0 && s[i - 1] == '^')) {
      if (!current.empty()) pieces.emplace_back(negative, current);
      else if (i > 0) throw Error("parse_error", "dangling sign in '" + text + "'");
      current.clear();
      negative = c == '-';
      continue;
    }
    current.push_back(c);
  }
  if (current.empty()) throw Error("parse_error", "trailing sign in '" + text + "'");
  pieces.emplace_back(negative, current);

  std::vector<GroupRingElement::Term> raw;
  for (const auto& [neg, piece] : pieces) {
    Rational coefficient = 1;
    std::string element = piece;
    const auto star = piece.find('*');
    if (star != std::string::npos) {
      coefficient = parse_rational(piece.substr(0, star), text);
      element = piece.substr(star + 1);
    } else if (looks_numeric(piece)) {
      coefficient = parse_rational(piece, text);
      element = "1";
    }
    raw.emplace_back(parse_group_element(group, element), neg ? -coefficient : coefficient);
  }
  std::vector<std::pair<GroupElement, Rational>> terms;
  for (const auto& [x, q] : raw) terms.emplace_back(group->element(x), q);
  return GroupRingElement::from_terms(group, terms);
}

}  // namespace qfold
