"""Cyclic covers of the line, hypergeometric monodromy and Fujita decompositions.

The heavy lifting happens in the compiled ``_core`` module; this layer turns
its JSON results into Python dictionaries and its errors into exceptions.
"""

import json

from . import _core
from ._core import CoreError, cover_genus, frac, hj_resolve, hurwitz_base_genus, semistable_base_order

SCHEMA_VERSION = _core.SCHEMA_VERSION

__all__ = [
    "CyclohodgeError",
    "CoreError",
    "run",
    "analyze_cover",
    "classify_hg",
    "monodromy",
    "resolve_sing",
    "reduce",
    "fujita_report",
    "kodaira_check",
    "cover_genus",
    "frac",
    "hj_resolve",
    "hurwitz_base_genus",
    "semistable_base_order",
]


class CyclohodgeError(Exception):
    """A command failed; ``code`` is the stable error identifier."""

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


def run(command, payload, bfs_bound=20000, certify_infinite=True):
    result = json.loads(_core.run_command(command, json.dumps(payload), bfs_bound, certify_infinite))
    if "error" in result:
        raise CyclohodgeError(result["error"]["code"], result["error"]["message"])
    return result


def _cover(n, branch):
    return {"n": n, "branch": [dict(b) for b in branch]}


def analyze_cover(n, branch):
    return run("analyze-cover", _cover(n, branch))


def classify_hg(alpha, beta, gamma):
    return run("classify-hg", {"alpha": str(alpha), "beta": str(beta), "gamma": str(gamma)})


def monodromy(alpha, beta, gamma, bfs_bound=20000, certify_infinite=True):
    payload = {"alpha": str(alpha), "beta": str(beta), "gamma": str(gamma)}
    return run("monodromy", payload, bfs_bound, certify_infinite)


def resolve_sing(n, q):
    return run("resolve-sing", {"n": n, "q": q})


def reduce(multiplicities=None, base_cover=None):
    payload = {}
    if multiplicities is not None:
        payload["multiplicities"] = list(multiplicities)
    if base_cover is not None:
        payload["base_cover"] = base_cover
    return run("reduce", payload)


def fujita_report(spec, bfs_bound=20000):
    return run("fujita-report", spec, bfs_bound)


def kodaira_check(K2, b, g, sigma):
    return run("kodaira-check", {"K2": K2, "b": b, "g": g, "sigma": sigma})
