import json

import pytest

import qfold


def a2():
    return {"n": 2, "frozen": [], "b": [[0, 1], [-1, 0]]}


def test_corpus_round_trip():
    names = qfold.corpus_names()
    assert "U4" in names and "W3" in names
    for name in names:
        m = qfold.corpus(name)
        assert qfold.weaving_isomorphic(m, m)


def test_unfold_then_fold():
    w3 = qfold.corpus("W3")
    q, action = qfold.unfold(w3)
    assert q["n"] == 3 * w3["m"]
    back = qfold.fold(q, action, reps=[1, 4, 7])
    assert back["entries"] == w3["entries"]


def test_mutate_is_an_involution():
    w3 = qfold.corpus("W3")
    once, rule, stale = qfold.mutate(w3, 1)
    assert stale == []
    twice, _, _ = qfold.mutate(once, 1, rule)
    assert twice["entries"] == w3["entries"]


def test_markov_rule_reports_stale_entries():
    _, rule, stale = qfold.mutate(qfold.corpus("markov"), 1)
    assert rule == "markov"
    assert stale == []  # a 1x1 matrix has nothing outside the orbit


def test_weave_keeps_the_class():
    u4 = qfold.corpus("U4")
    w = qfold.weave(u4, 2, {"type": "cyclic", "mod": 4, "pow": 1})
    assert w != u4
    assert qfold.weaving_isomorphic(w, u4)


def test_exchange_graphs():
    assert len(qfold.exchange_graph(qfold.corpus("U4"))["nodes"]) == 7
    framed = qfold.exchange_graph(a2(), framed=True)
    assert framed["complete"] and len(framed["nodes"]) == 5
    assert not qfold.exchange_graph(qfold.corpus("W4"), budget=3)["complete"]


def test_reddening_and_dot():
    s = qfold.reddening_search(a2(), 3)
    assert s is not None and len(s["steps"]) == 2
    markov = {"n": 3, "frozen": [], "b": [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]}
    assert qfold.reddening_search(markov, 5) is None
    assert "\"1'\" [shape=box]" in qfold.quiver_dot(a2(), framed=True)


def test_errors_carry_json():
    with pytest.raises(qfold.QfoldError) as err:
        qfold.mutate(qfold.corpus("W3"), 9)
    info = qfold.error_info(err.value)
    assert info["error"] == "invalid_index"
    assert info["witness"] == [9]
    with pytest.raises(qfold.QfoldError):
        qfold.corpus("nothing")
    with pytest.raises(ValueError):
        qfold.fold({"n": 2, "b": [[0, 1], [1, 0]]}, {"group": {"generators": []}, "vertex_maps": []})


def test_verify_suite():
    results = qfold.verify("markov")
    assert results and all(r["passed"] for r in results)


def test_session_service():
    s = qfold.SessionService()
    status, body = s.handle("POST", "/api/session")
    assert status == 201
    sid = json.loads(body)["id"]
    status, _ = s.handle("PUT", f"/api/session/{sid}/quiver", json.dumps(a2()))
    assert status == 200
    status, body = s.handle("POST", f"/api/session/{sid}/mutate", json.dumps({"vertex": 1}))
    assert status == 200
    assert json.loads(body)["colors"] == ["red", "green"]
    status, body = s.handle("GET", f"/api/session/{sid}/graph", query={"budget": "5"})
    assert status == 200 and json.loads(body)["complete"]
