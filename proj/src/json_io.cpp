#include "qfold/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qfold::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("invalid_json", what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing \"") + name + "\"");
  return *it;
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long long>();
}

std::vector<long long> integers(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<long long> out;
  for (const auto& x : j) out.push_back(integer(x, what));
  return out;
}

// 1-based list to 0-based indices below n.
std::vector<int> indices(const Json& j, int n, const char* what) {
  std::vector<int> out;
  for (long long x : integers(j, what)) {
    if (x < 1 || x > n) bad(std::string(what) + ": index " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    out.push_back(static_cast<int>(x - 1));
  }
  return out;
}

Json one_based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

// Wraps library exceptions thrown while reading.
template <class F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

Json to_json(const GroupElement& g) {
  if (g.is_cyclic()) return {{"type", "cyclic"}, {"mod", g.degree()}, {"pow", g.power()}};
  return {{"type", "perm"}, {"img", one_based(g.images())}};
}

GroupElement group_element_from_json(const Json& j) {
  return guarded([&] {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "cyclic") {
      const long long mod = integer(field(j, "mod"), "mod");
      if (mod < 1 || mod > 100000) bad("cyclic modulus out of range");
      const long long pow = ((integer(field(j, "pow"), "pow") % mod) + mod) % mod;
      return GroupElement::cyclic(static_cast<int>(mod), static_cast<int>(pow));
    }
    if (type == "perm") {
      const auto& img = field(j, "img");
      const int n = static_cast<int>(img.size());
      const auto p = indices(img, n, "img");
      if (!is_permutation(p, n)) bad("img is not a permutation");
      return GroupElement::permutation(p);
    }
    bad("unknown group element type '" + type + "'");
  });
}

Json to_json(const GroupPtr& g) {
  Json gens = Json::array();
  for (const auto& x : g->generators()) gens.push_back(to_json(x));
  return {{"generators", gens}};
}

GroupPtr group_from_json(const Json& j) {
  return guarded([&] {
    const auto& gens = field(j, "generators");
    if (!gens.is_array()) bad("generators must be an array");
    std::vector<GroupElement> out;
    for (const auto& g : gens) out.push_back(group_element_from_json(g));
    return generate_group(std::move(out));
  });
}

Json to_json(const GroupRingElement& a) {
  Json terms = Json::array();
  for (const auto& [x, q] : a.canonical_terms())
    terms.push_back({{"g", to_json(a.group()->element(x))}, {"num", q.numerator()}, {"den", q.denominator()}});
  return {{"terms", terms}};
}

GroupRingElement group_ring_from_json(const GroupPtr& g, const Json& j) {
  return guarded([&] {
    if (j.is_string()) return parse_group_ring(g, j.get<std::string>());
    const auto& terms = field(j, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    std::vector<std::pair<GroupElement, Rational>> out;
    for (const auto& t : terms) {
      const long long num = integer(field(t, "num"), "num");
      const long long den = t.contains("den") ? integer(t.at("den"), "den") : 1;
      if (den <= 0) bad("den must be positive");
      out.emplace_back(group_element_from_json(field(t, "g")), Rational(num, den));
    }
    return GroupRingElement::from_terms(g, out);
  });
}

Json to_json(const Quiver& q) {
  return {{"n", q.size()}, {"frozen", one_based(q.frozen_vertices())}, {"b", q.rows()}};
}

Quiver quiver_from_json(const Json& j) {
  return guarded([&] {
    const long long n = integer(field(j, "n"), "n");
    if (n < 0 || n > 10000) bad("n out of range");
    const auto& b = field(j, "b");
    if (!b.is_array() || static_cast<long long>(b.size()) != n) bad("b must have n rows");
    std::vector<std::vector<Quiver::Weight>> rows;
    for (const auto& r : b) {
      if (!r.is_array() || static_cast<long long>(r.size()) != n) bad("every row of b must have n entries");
      std::vector<Quiver::Weight> row;
      for (long long x : integers(r, "b")) row.push_back(x);
      rows.push_back(std::move(row));
    }
    const std::vector<int> frozen =
        j.contains("frozen") ? indices(j.at("frozen"), static_cast<int>(n), "frozen") : std::vector<int>{};
    return Quiver(rows, frozen);
  });
}

Json to_json(const FoldedMatrix& b) {
  Json entries = Json::array();
  for (int i = 0; i < b.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < b.size(); ++j) row.push_back(to_json(b(i, j)));
    entries.push_back(row);
  }
  Json out = {{"group", to_json(b.group)}, {"m", b.size()}, {"stab_orders", b.stab_orders}};
  if (b.representatives) out["reps"] = one_based(*b.representatives);
  out["entries"] = entries;
  return out;
}

FoldedMatrix folded_from_json(const Json& j) {
  return guarded([&] {
    const GroupPtr g = group_from_json(field(j, "group"));
    const long long m = integer(field(j, "m"), "m");
    if (m < 0 || m > 1000) bad("m out of range");
    FoldedMatrix b = zero_matrix(g, static_cast<int>(m));
    if (j.contains("stab_orders")) {
      const auto s = integers(j.at("stab_orders"), "stab_orders");
      if (static_cast<long long>(s.size()) != m) bad("stab_orders must have m entries");
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || g->order() % static_cast<std::size_t>(s[i]) != 0) bad("stabilizer orders must divide |G|");
        b.stab_orders[i] = static_cast<int>(s[i]);
      }
    }
    if (j.contains("reps")) {
      std::vector<int> reps;
      for (long long r : integers(j.at("reps"), "reps")) {
        if (r < 1) bad("reps are 1-based vertices");
        reps.push_back(static_cast<int>(r - 1));
      }
      if (static_cast<long long>(reps.size()) != m) bad("reps must have m entries");
      b.representatives = reps;
    }
    const auto& e = field(j, "entries");
    if (!e.is_array() || static_cast<long long>(e.size()) != m) bad("entries must have m rows");
    for (int r = 0; r < m; ++r) {
      const auto& row = e[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<long long>(row.size()) != m) bad("every entries row must have m items");
      for (int c = 0; c < m; ++c) b.at(r, c) = group_ring_from_json(g, row[static_cast<std::size_t>(c)]);
    }
    validate(b);
    return b;
  });
}

Json to_json(const QuiverAction& a) {
  Json maps = Json::array();
  for (const auto& m : a.action.generator_maps()) maps.push_back(one_based(m));
  Json orbits = Json::array();
  for (const auto& o : a.orbits) orbits.push_back(one_based(o));
  return {{"group", to_json(a.group())},
          {"vertex_maps", maps},
          {"reps", one_based(a.representatives)},
          {"orbits", orbits},
          {"stab_orders", a.stabilizer_orders}};
}

QuiverAction action_from_json(const Quiver& q, const Json& j) {
  return guarded([&] {
    const GroupPtr g = group_from_json(field(j, "group"));
    const auto& maps = field(j, "vertex_maps");
    if (!maps.is_array() || maps.size() != g->generators().size())
      bad("vertex_maps must have one map per generator");
    std::vector<Permutation> perms;
    for (const auto& m : maps) {
      if (!m.is_array() || static_cast<int>(m.size()) != q.size()) bad("every vertex map must list all vertices");
      perms.push_back(indices(m, q.size(), "vertex_maps"));
    }
    QuiverAction a = act_on_quiver(g, q, perms);
    if (j.contains("reps")) a = a.with_representatives(indices(j.at("reps"), q.size(), "reps"));
    return a;
  });
}

Json to_json(const MutationSequence& s) {
  Json out = {{"steps", one_based(s.steps)}};
  if (s.post_permutation) out["perm"] = one_based(*s.post_permutation);
  return out;
}

MutationSequence sequence_from_json(const Json& j) {
  return guarded([&] {
    MutationSequence s;
    for (long long x : integers(field(j, "steps"), "steps")) {
      if (x < 1) bad("steps are 1-based vertices");
      s.steps.push_back(static_cast<int>(x - 1));
    }
    if (j.contains("perm")) {
      const auto& p = j.at("perm");
      s.post_permutation = indices(p, static_cast<int>(p.size()), "perm");
    }
    return s;
  });
}

Json to_json(const ExchangeGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    Json node = {{"id", i}, {"key", n.key}, {"terminal", n.terminal}};
    if (n.matrix) node["matrix"] = to_json(*n.matrix);
    if (n.quiver) node["quiver"] = to_json(*n.quiver);
    if (!n.note.empty()) node["note"] = n.note;
    nodes.push_back(node);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"index", e.index + 1}, {"to", e.to}});
  return {{"complete", g.complete}, {"nodes", nodes}, {"edges", edges}};
}

Json error_json(const Error& e) {
  Json out = {{"error", e.code()}, {"detail", e.what()}};
  if (!e.witness().empty()) out["witness"] = e.witness();
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("io_error", "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qfold::json_io
