#include <algorithm>
#include <doctest.h>

#include <thread>

#include "qfold/corpus.hpp"
#include "qfold/json_io.hpp"
#include "qfold/service.hpp"
#include "qfold/special_rules.hpp"

using namespace qfold;
using json_io::Json;

namespace {

struct Client {
  SessionService& service;
  std::string id;

  explicit Client(SessionService& s) : service(s) {
    const Response r = s.handle({"POST", "/api/session", "", {}});
    REQUIRE(r.status == 201);
    id = Json::parse(r.body).at("id").get<std::string>();
  }

  std::pair<int, Json> call(const std::string& method, const std::string& verb, const Json& body = nullptr,
                            std::map<std::string, std::string> query = {}) {
    const Response r =
        service.handle({method, "/api/session/" + id + "/" + verb, body.is_null() ? "" : body.dump(), query});
    return {r.status, Json::parse(r.body)};
  }

  Json ok(const std::string& method, const std::string& verb, const Json& body = nullptr) {
    auto [status, j] = call(method, verb, body);
    INFO(j.dump());
    REQUIRE(status == 200);
    return j;
  }
};

Quiver a_n(int n) {
  Quiver q(n);
  for (int i = 0; i + 1 < n; ++i) q.set_arrows(i, i + 1, 1);
  return q;
}

std::optional<int> diagonal_index(const FoldedMatrix& b) {
  for (int k = 0; k < b.size(); ++k)
    if (classify_diagonal(b, k)) return k;
  return std::nullopt;
}

}  // namespace

TEST_CASE("a fresh session is empty and framed") {
  SessionService s;
  Client c(s);
  CHECK(c.ok("GET", "quiver") == json_io::to_json(Quiver(0)));
  CHECK(c.ok("GET", "framed")["mutable_count"] == 0);
  auto [status, err] = c.call("GET", "folded");
  CHECK(status == 409);
  CHECK(err["error"] == "no_action");
}

TEST_CASE("z2 example: fold, orbit mutation, undo") {
  SessionService s;
  Client c(s);
  const QuiverAction a = corpus::z2_example();
  c.ok("PUT", "quiver", json_io::to_json(a.quiver));
  c.ok("PUT", "action", json_io::to_json(a));
  CHECK(json_io::folded_from_json(c.ok("GET", "folded")) == fold(a));

  const Json m = c.ok("POST", "mutate", {{"orbit", 2}});
  CHECK(m["rule"] == "standard");
  const FoldedMatrix expected = matrix_mutate(fold(a), 1);
  CHECK(json_io::folded_from_json(m["folded"]) == expected);
  CHECK(json_io::quiver_from_json(m["quiver"]) == set_mutate(a, 1).quiver);
  CHECK(json_io::folded_from_json(c.ok("GET", "folded")) == expected);
  CHECK(m["colors"].size() == 6);

  const Json u = c.ok("POST", "undo");
  CHECK(json_io::quiver_from_json(u["quiver"]) == a.quiver);
  CHECK(json_io::folded_from_json(c.ok("GET", "folded")) == fold(a));
  c.ok("POST", "undo");  // drops the action
  CHECK(c.call("GET", "folded").first == 409);
  c.ok("POST", "undo");  // back to the empty quiver
  auto [status, err] = c.call("POST", "undo");
  CHECK(status == 409);
  CHECK(err["error"] == "nothing_to_undo");
}

TEST_CASE("vertex mutation keeps or drops the action") {
  SessionService s;
  Client c(s);
  const QuiverAction a = corpus::z2_example();
  c.ok("PUT", "quiver", json_io::to_json(a.quiver));
  c.ok("PUT", "action", json_io::to_json(a));
  const Json m = c.ok("POST", "mutate", {{"vertex", 3}});
  CHECK(m["action_kept"] == false);
  CHECK(json_io::quiver_from_json(m["quiver"]) == mutate(a.quiver, 2));
  CHECK(c.call("GET", "folded").first == 409);

  // finishing the orbit restores the symmetry, and the action can be set again
  const Json m2 = c.ok("POST", "mutate", {{"vertex", 4}});
  CHECK(m2["action_kept"] == false);
  CHECK(json_io::quiver_from_json(m2["quiver"]) == set_mutate(a, 1).quiver);
  c.ok("PUT", "action", json_io::to_json(a));
  CHECK(json_io::folded_from_json(c.ok("GET", "folded")) == matrix_mutate(fold(a), 1));
}

TEST_CASE("framed quiver colors follow mutation") {
  SessionService s;
  Client c(s);
  c.ok("PUT", "quiver", json_io::to_json(a_n(2)));
  CHECK(c.ok("GET", "framed")["colors"] == Json::parse(R"(["green","green"])"));
  const Json m = c.ok("POST", "mutate", {{"vertex", 1}});
  CHECK(m["colors"][0] == "red");
  c.ok("POST", "mutate", {{"vertex", 2}});
  const Json f = c.ok("GET", "framed");
  CHECK(f["mutable_count"] == 2);
  CHECK(f["colors"] == Json::parse(R"(["red","red"])"));
  const FramedQuiver fq{json_io::quiver_from_json(f["quiver"]), 2};
  CHECK(fq.quiver.size() == 4);

  // frozen vertices switch framing off
  Quiver q = a_n(3);
  q.set_frozen(2);
  c.ok("PUT", "quiver", json_io::to_json(q));
  auto [status, err] = c.call("GET", "framed");
  CHECK(status == 409);
  CHECK(err["error"] == "no_framing");
  CHECK(c.ok("POST", "mutate", {{"vertex", 1}}).count("colors") == 0);
}

TEST_CASE("orbit mutation with a diagonal rule") {
  for (const auto& [before, after] : {std::pair{corpus::cycle3_example_before(), corpus::cycle3_example_after()},
                                      std::pair{corpus::cycle4_example_before(), corpus::cycle4_example_after()}}) {
    SessionService s;
    Client c(s);
    c.ok("PUT", "quiver", json_io::to_json(before.quiver));
    c.ok("PUT", "action", json_io::to_json(before));
    const auto k = diagonal_index(fold(before));
    REQUIRE(k);
    const Json m = c.ok("POST", "mutate", {{"orbit", *k + 1}});
    CHECK(m["rule"] == to_string(classify_diagonal(fold(before), *k)->kind));
    CHECK(json_io::folded_from_json(m["folded"]) == mutate_with_rule(fold(before), *k).result.matrix);
    CHECK(weaving_isomorphic(json_io::folded_from_json(m["folded"]), fold(after)));
    CHECK(m["sequence"].contains("perm"));
    // the framing is carried through the same vertex sequence
    const Json f = c.ok("GET", "framed");
    const Quiver framed = json_io::quiver_from_json(f["quiver"]);
    const Quiver now = json_io::quiver_from_json(m["quiver"]);
    for (int i = 0; i < now.size(); ++i)
      for (int j = 0; j < now.size(); ++j) CHECK(framed(i, j) == now(i, j));
    // asking for a rule that does not match is refused
    c.ok("POST", "undo");
    auto [status, err] = c.call("POST", "mutate", {{"orbit", *k + 1}, {"rule", "standard"}});
    CHECK(status == 400);
    CHECK(err["error"] == "use_diagonal_rule");
  }
}

TEST_CASE("markov session: the rule is partial") {
  SessionService s;
  Client c(s);
  const QuiverAction a = corpus::q3n(1);
  c.ok("PUT", "quiver", json_io::to_json(a.quiver));
  c.ok("PUT", "action", json_io::to_json(a));
  const FoldedMatrix b = fold(a);
  for (int k = 0; k < b.size(); ++k) {
    const auto cls = classify_diagonal(b, k);
    if (!cls || cls->kind != DiagonalRuleKind::markov) continue;
    auto [status, err] = c.call("POST", "mutate", {{"orbit", k + 1}});
    CHECK(status == 400);
    CHECK(err["error"] == "partial_rule");
  }
}

TEST_CASE("errors") {
  SessionService s;
  CHECK(s.handle({"GET", "/api/session/99/quiver", "", {}}).status == 404);
  CHECK(s.handle({"GET", "/nope", "", {}}).status == 404);
  CHECK(s.handle({"GET", "/api/session", "", {}}).status == 405);
  Client c(s);
  CHECK(c.call("DELETE", "quiver").first == 405);
  CHECK(c.call("GET", "bogus").first == 404);

  const Response bad = s.handle({"PUT", "/api/session/" + c.id + "/quiver", "{oops", {}});
  CHECK(bad.status == 400);
  CHECK(Json::parse(bad.body)["error"] == "invalid_json");

  c.ok("PUT", "quiver", json_io::to_json(corpus::z2_example().quiver));
  Json action = json_io::to_json(corpus::z2_example());
  action["vertex_maps"][0] = {2, 1, 3, 4, 5, 6};
  auto [status, err] = c.call("PUT", "action", action);
  CHECK(status == 400);
  CHECK(err["error"] == "not_automorphism");

  CHECK(c.call("POST", "mutate", {{"vertex", 0}}).second["error"] == "invalid_index");
  CHECK(c.call("POST", "mutate", {{"vertex", "1"}}).second["error"] == "invalid_json");
  CHECK(c.call("POST", "mutate", {{"orbit", 1}}).second["error"] == "no_action");
  CHECK(c.call("POST", "mutate", Json::array()).second["error"] == "invalid_json");
  c.ok("PUT", "action", json_io::to_json(corpus::z2_example()));
  CHECK(c.call("POST", "mutate", {{"orbit", 1}, {"rule", "bogus"}}).second["error"] == "unknown_rule");
  CHECK(c.call("GET", "graph", nullptr, {{"budget", "zero"}}).second["error"] == "invalid_budget");
  CHECK(c.call("GET", "graph", nullptr, {{"budget", "-3"}}).second["error"] == "invalid_budget");
}

TEST_CASE("graph endpoint") {
  SessionService s;
  Client c(s);
  c.ok("PUT", "quiver", json_io::to_json(a_n(3)));
  const Json g = c.ok("GET", "graph");
  CHECK(g["complete"] == true);
  CHECK(g["nodes"].size() == 4);
  const auto [status, small] = c.call("GET", "graph", nullptr, {{"budget", "2"}});
  CHECK(status == 200);
  CHECK(small["complete"] == false);

  const QuiverAction a = corpus::z2_example();
  c.ok("PUT", "quiver", json_io::to_json(a.quiver));
  c.ok("PUT", "action", json_io::to_json(a));
  const Json folded = c.ok("GET", "graph");
  CHECK(folded["nodes"][0].contains("matrix"));
  CHECK(folded["nodes"].size() == exchange_graph(fold(a)).nodes.size());
}

TEST_CASE("sessions are independent under concurrent use") {
  SessionService s;
  constexpr int threads = 8;
  std::vector<std::string> ids(threads);
  std::vector<Quiver> finals(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Client c(s);
      ids[t] = c.id;
      c.ok("PUT", "quiver", json_io::to_json(a_n(4)));
      for (int step = 0; step < 20; ++step) c.ok("POST", "mutate", {{"vertex", (step * (t + 1)) % 4 + 1}});
      finals[t] = json_io::quiver_from_json(c.ok("GET", "quiver"));
    });
  }
  for (auto& th : pool) th.join();
  std::sort(ids.begin(), ids.end());
  CHECK(std::unique(ids.begin(), ids.end()) == ids.end());
  for (int t = 0; t < threads; ++t) {
    Quiver q = a_n(4);
    for (int step = 0; step < 20; ++step) q = mutate(q, (step * (t + 1)) % 4);
    CHECK(finals[t] == q);
  }
}
