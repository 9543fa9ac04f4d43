"""The graph of structure-to-structure constructions and the round-trip cycles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .basic import a_of_g, a_of_l, b_of_reduct, g_of_a, implication_reduct, l_of_a
from .errors import AlgebraError, PreconditionFails, UnreachableTarget
from .lattice import Involution
from .logics import build_nelson, check_kleene, nelson_to_residuated, oml_to_basic, oml_to_groupoid
from .residuation import classify
from .sections import SectionedLattice, g_of_l, g_of_l_involutive, l_of_g, l_of_g_involutive


def _sections_to_groupoid(S: SectionedLattice):
    if S.tilde is not None:
        return g_of_l(S)
    return g_of_l_involutive(S)


def _groupoid_to_sections(G):
    rep = classify(G)
    if rep.involutive and rep.I3:
        return l_of_g(G)
    return l_of_g_involutive(G)


def _lattice_to_groupoid(s):
    if not isinstance(s, Involution):
        raise PreconditionFails("a bare lattice needs an orthocomplement (ops.neg) to yield a groupoid")
    return oml_to_groupoid(s.host, s)


def _lattice_to_basic(s):
    if not isinstance(s, Involution):
        raise PreconditionFails("a bare lattice needs an orthocomplement (ops.neg) to yield a basic algebra")
    return oml_to_basic(s.host, s)


# (source kind, target kind) -> construction, in BFS preference order
EDGES = {
    ("sectioned-lattice", "rrl-groupoid"): _sections_to_groupoid,
    ("sectioned-lattice", "basic-algebra"): a_of_l,
    ("rrl-groupoid", "sectioned-lattice"): _groupoid_to_sections,
    ("rrl-groupoid", "basic-algebra"): a_of_g,
    ("basic-algebra", "sectioned-lattice"): l_of_a,
    ("basic-algebra", "rrl-groupoid"): g_of_a,
    ("basic-algebra", "implication-reduct"): implication_reduct,
    ("implication-reduct", "basic-algebra"): b_of_reduct,
    ("kleene", "nelson"): build_nelson,
    ("nelson", "rrl-groupoid"): nelson_to_residuated,
    ("lattice", "rrl-groupoid"): _lattice_to_groupoid,
    ("lattice", "basic-algebra"): _lattice_to_basic,
}


def route(source: str, target: str) -> list[str]:
    """Shortest kind path from ``source`` to ``target`` (ties broken by edge order)."""
    if source == target:
        return [source]
    prev = {source: None}
    queue = deque([source])
    while queue:
        k = queue.popleft()
        if k == target:
            break
        for (a, b) in EDGES:
            if a == k and b not in prev:
                prev[b] = k
                queue.append(b)
    if target not in prev:
        raise UnreachableTarget(f"no construction leads from {source} to {target}", (source, target))
    path = [target]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def transform(structure, source: str, target: str):
    if source == target:
        return structure
    path = route(source, target)
    for a, b in zip(path, path[1:]):
        structure = EDGES[(a, b)](structure)
    return structure


# round trips

@dataclass
class Cycle:
    name: str
    applicable: bool
    ok: bool | None
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "applicable": self.applicable, "ok": self.ok, "detail": self.detail}


def _run(name: str, guard, fn) -> Cycle:
    if not guard():
        return Cycle(name, False, None, "hypotheses fail")
    try:
        return Cycle(name, True, bool(fn()))
    except AlgebraError as exc:
        return Cycle(name, True, False, f"{type(exc).__name__}: {exc}")


def _groupoid_cycles(G) -> list[Cycle]:
    rep = classify(G)
    return [
        _run("groupoid->sections(~)->groupoid", lambda: rep.involutive and rep.I3,
             lambda: g_of_l(l_of_g(G)) == G),
        _run("groupoid->sectional-involutions->groupoid",
             lambda: rep.integral and rep.involutive and rep.I3_star,
             lambda: g_of_l_involutive(l_of_g_involutive(G)) == G),
        _run("groupoid->basic->groupoid", lambda: rep.lukasiewicz_type, lambda: g_of_a(a_of_g(G)) == G),
    ]


def _basic_cycles(A) -> list[Cycle]:
    return [
        _run("basic->sections->basic", lambda: True, lambda: a_of_l(l_of_a(A)) == A),
        _run("basic->groupoid->basic", lambda: True, lambda: a_of_g(g_of_a(A)) == A),
        _run("basic->reduct->basic", lambda: True, lambda: b_of_reduct(implication_reduct(A)) == A),
    ]


def _sections_cycles(S: SectionedLattice) -> list[Cycle]:
    F = S.family
    return [
        _run("sections(~)->groupoid->sections", lambda: S.tilde is not None, lambda: l_of_g(g_of_l(S)) == S),
        _run("sectional-involutions->groupoid->sectional-involutions", lambda: F.is_involutive,
             lambda: l_of_g_involutive(g_of_l_involutive(S)).family == F),
        _run("sectional-involutions->basic->sectional-involutions", lambda: F.is_involutive,
             lambda: l_of_a(a_of_l(S)).family == F),
    ]


def round_trips(structure, kind: str) -> list[Cycle]:
    """Every composed construction that should reproduce ``structure`` exactly."""
    if kind == "rrl-groupoid":
        return _groupoid_cycles(structure)
    if kind == "basic-algebra":
        return _basic_cycles(structure)
    if kind == "sectioned-lattice":
        return _sections_cycles(structure)
    if kind == "implication-reduct":
        return [_run("reduct->basic->reduct", lambda: True,
                     lambda: implication_reduct(b_of_reduct(structure)) == structure)]
    if kind == "nelson":
        N = structure
        cycles = [_run("nelson->kleene->nelson", lambda: True,
                       lambda: build_nelson(check_kleene(N.lattice, N.kleene.tilde)) == N)]
        return cycles + _groupoid_cycles(nelson_to_residuated(N))
    if kind == "kleene":
        return _groupoid_cycles(nelson_to_residuated(build_nelson(structure)))
    return []
