#include "qfold/service.hpp"

#include <sstream>

#include "qfold/explorer.hpp"
#include "qfold/json_io.hpp"
#include "qfold/special_rules.hpp"

namespace qfold {

namespace {

using json_io::Json;

Response ok(const Json& j, int status = 200) { return {status, j.dump()}; }

int status_for(const Error& e) {
  if (dynamic_cast<const InternalError*>(&e)) return 500;
  const auto& c = e.code();
  if (c == "unknown_session" || c == "not_found") return 404;
  if (c == "method_not_allowed") return 405;
  if (c == "no_action" || c == "nothing_to_undo" || c == "no_framing") return 409;
  return 400;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/'))
    if (!part.empty()) out.push_back(part);
  return out;
}

std::optional<FramedQuiver> framing_of(const Quiver& q) {
  if (q.frozen_count() != 0) return std::nullopt;
  return frame(q);
}

Json colors_json(const FramedQuiver& fq) {
  Json out = Json::array();
  for (auto c : vertex_colors(fq)) out.push_back(to_string(c));
  return out;
}

Json action_or_null(const std::optional<QuiverAction>& a) { return a ? json_io::to_json(*a) : Json(nullptr); }

int one_based_index(const Json& body, const char* name, int limit) {
  const auto& v = body.at(name);
  if (!v.is_number_integer()) throw Error("invalid_json", std::string(name) + " must be an integer");
  const long long k = v.get<long long>();
  if (k < 1 || k > limit)
    throw Error("invalid_index", std::string(name) + " " + std::to_string(k) + " out of range", {k});
  return static_cast<int>(k - 1);
}

}  // namespace

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error("unknown_session", "no session '" + id + "'");
  return it->second;
}

Response SessionService::handle(const Request& r) {
  try {
    const auto parts = split_path(r.path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "session") throw Error("not_found", "no route " + r.path);
    if (parts.size() == 2) {
      if (r.method != "POST") throw Error("method_not_allowed", r.method + " " + r.path);
      std::lock_guard lock(mutex_);
      const std::string id = std::to_string(next_id_++);
      auto s = std::make_shared<Session>();
      s->state.framed = framing_of(s->state.quiver);
      sessions_.emplace(id, std::move(s));
      return ok({{"id", id}}, 201);
    }
    if (parts.size() != 4) throw Error("not_found", "no route " + r.path);
    const auto session = find(parts[2]);
    std::lock_guard lock(session->mutex);
    return dispatch(*session, r.method, parts[3], r);
  } catch (const Error& e) {
    return {status_for(e), json_io::error_json(e).dump()};
  } catch (const std::exception& e) {
    return {500, Json{{"error", "internal"}, {"detail", e.what()}}.dump()};
  }
}

Response SessionService::dispatch(Session& s, const std::string& method, const std::string& verb, const Request& r) {
  State& st = s.state;
  auto push = [&] {
    s.history.push_back(st);
    if (s.history.size() > history_limit) s.history.erase(s.history.begin());
  };
  auto need_action = [&]() -> const QuiverAction& {
    if (!st.action) throw Error("no_action", "no group action set for this session");
    return *st.action;
  };
  auto route = [&](const char* m, const char* v) { return method == m && verb == v; };

  if (route("GET", "quiver")) return ok(json_io::to_json(st.quiver));

  if (route("PUT", "quiver")) {
    const Quiver q = json_io::quiver_from_json(json_io::parse(r.body));
    push();
    std::optional<QuiverAction> kept;
    if (st.action) {
      try {
        kept = st.action->with_quiver(q);
      } catch (const Error&) {
      }
    }
    st = State{q, kept, framing_of(q)};
    return ok(json_io::to_json(st.quiver));
  }

  if (route("PUT", "action")) {
    QuiverAction a = json_io::action_from_json(st.quiver, json_io::parse(r.body));
    push();
    st.action = std::move(a);
    return ok(json_io::to_json(*st.action));
  }

  if (route("POST", "mutate")) {
    const Json body = json_io::parse(r.body);
    if (!body.is_object()) throw Error("invalid_json", "expected {\"vertex\": k} or {\"orbit\": k, \"rule\": ...}");
    if (body.contains("vertex")) {
      const int k = one_based_index(body, "vertex", st.quiver.size());
      const Quiver q = mutate(st.quiver, k);
      State next{q, std::nullopt, std::nullopt};
      if (st.action) {
        try {
          next.action = st.action->with_quiver(q);
        } catch (const Error&) {
        }
      }
      if (st.framed) next.framed = mutate(*st.framed, k);
      push();
      st = std::move(next);
      Json out = {{"quiver", json_io::to_json(st.quiver)}, {"action_kept", st.action.has_value()}};
      if (st.framed) out["colors"] = colors_json(*st.framed);
      return ok(out);
    }
    if (body.contains("orbit")) {
      const QuiverAction& a = need_action();
      const int k = one_based_index(body, "orbit", static_cast<int>(a.orbits.size()));
      std::string rule_name = "auto";
      if (body.contains("rule")) {
        if (!body.at("rule").is_string()) throw Error("invalid_json", "rule must be a string");
        rule_name = body.at("rule").get<std::string>();
      }
      const RuleChoice choice = parse_rule(rule_name);
      const FoldedMatrix b = fold(a);
      // The folded rule decides what is allowed; the quiver is then changed by the
      // matching vertex sequence and both sides must agree.
      const RuleMutation expected = mutate_with_rule(b, k, choice);
      if (expected.kind == DiagonalRuleKind::markov)
        throw Error("partial_rule", "the Markov rule only gives the entries next to the orbit; no quiver step", {k});
      const MutationSequence seq = orbit_mutation_sequence(a, k);
      QuiverAction next = generalized_set_mutate(a, k);
      const FoldedMatrix folded = fold(next);
      if (!(folded == expected.result.matrix))
        throw InternalError("rule_mismatch", "orbit mutation and the folded rule disagree", {k});
      push();
      if (st.framed) st.framed = apply_sequence(*st.framed, seq);
      st.quiver = next.quiver;
      st.action = std::move(next);
      Json out = {{"quiver", json_io::to_json(st.quiver)},
                  {"folded", json_io::to_json(folded)},
                  {"rule", to_string(expected.kind)},
                  {"sequence", json_io::to_json(seq)}};
      if (st.framed) out["colors"] = colors_json(*st.framed);
      return ok(out);
    }
    throw Error("invalid_json", "expected {\"vertex\": k} or {\"orbit\": k, \"rule\": ...}");
  }

  if (route("GET", "folded")) return ok(json_io::to_json(fold(need_action())));

  if (route("GET", "framed")) {
    if (!st.framed) throw Error("no_framing", "quivers with frozen vertices are not framed");
    return ok({{"quiver", json_io::to_json(st.framed->quiver)},
               {"mutable_count", st.framed->mutable_count},
               {"colors", colors_json(*st.framed)}});
  }

  if (route("POST", "undo")) {
    if (s.history.empty()) throw Error("nothing_to_undo", "history is empty");
    st = std::move(s.history.back());
    s.history.pop_back();
    return ok({{"quiver", json_io::to_json(st.quiver)}, {"action", action_or_null(st.action)}});
  }

  if (route("GET", "graph")) {
    GraphOptions options;
    if (const auto it = r.query.find("budget"); it != r.query.end()) {
      try {
        const long long b = std::stoll(it->second);
        if (b <= 0) throw std::invalid_argument(it->second);
        options.budget = static_cast<std::size_t>(b);
      } catch (const std::logic_error&) {
        throw Error("invalid_budget", "budget must be a positive integer");
      }
    }
    const ExchangeGraph g = st.action ? exchange_graph(fold(*st.action), options) : exchange_graph(st.quiver, options);
    return ok(json_io::to_json(g));
  }

  const bool known = verb == "quiver" || verb == "action" || verb == "mutate" || verb == "folded" ||
                     verb == "framed" || verb == "undo" || verb == "graph";
  if (known) throw Error("method_not_allowed", method + " " + r.path);
  throw Error("not_found", "no route " + r.path);
}

}  // namespace qfold
