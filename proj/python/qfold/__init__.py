"""Folded quivers over group rings.

Matrices, quivers and actions are plain dicts in the JSON layout used by the
``qfold`` command line tool. Vertex and orbit indices are 1-based.
"""

import json

from . import _qfold
from ._qfold import QfoldError, SessionService

__all__ = [
    "QfoldError",
    "SessionService",
    "corpus",
    "corpus_names",
    "error_info",
    "exchange_graph",
    "fold",
    "mutate",
    "quiver_dot",
    "reddening_search",
    "unfold",
    "verify",
    "weave",
    "weaving_isomorphic",
]


def _s(x):
    return x if isinstance(x, str) else json.dumps(x)


def error_info(err):
    """The {"error", "detail", "witness"?} dict carried by a QfoldError."""
    return json.loads(str(err))


def fold(quiver, action, reps=None):
    return json.loads(_qfold.fold(_s(quiver), _s(action), reps))


def mutate(matrix, k, rule="auto"):
    """Returns (matrix, rule used, stale entries). Stale entries are only
    reported by the Markov rule, which leaves them untouched."""
    out, kind, stale = _qfold.mutate(_s(matrix), k, rule)
    return json.loads(out), kind, stale


def unfold(matrix):
    """Canonical unfolding: (quiver, action)."""
    q, a = _qfold.unfold(_s(matrix))
    return json.loads(q), json.loads(a)


def weave(matrix, j, element):
    return json.loads(_qfold.weave(_s(matrix), j, _s(element)))


def weaving_isomorphic(a, b):
    return _qfold.weaving_isomorphic(_s(a), _s(b))


def exchange_graph(start, budget=100000, framed=False):
    """start is a folded matrix (has "entries") or a quiver (has "b")."""
    d = json.loads(start) if isinstance(start, str) else start
    if "entries" in d:
        return json.loads(_qfold.matrix_graph(_s(d), budget))
    return json.loads(_qfold.quiver_graph(_s(d), budget, framed))


def reddening_search(quiver, depth):
    s = _qfold.reddening_search(_s(quiver), depth)
    return None if s is None else json.loads(s)


def quiver_dot(quiver, framed=False):
    return _qfold.quiver_dot(_s(quiver), framed)


def corpus_names():
    return _qfold.corpus_names()


def corpus(name):
    return json.loads(_qfold.corpus_matrix(name))


def verify(suite="all", seed=1):
    return [{"name": n, "passed": p, "detail": d} for n, p, d in _qfold.verify(suite, seed)]
