"""Congruence lattices of finite algebras and the regularity/permutability checks.

An algebra here is anything with ``operations()`` returning ``(arity, table)``
pairs over dense indices; ``n`` is taken from the first table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import TheoremViolation
from .lattice import first_failure
from .residuation import RRLGroupoid, classify


def _normalize(labels) -> tuple[int, ...]:
    """Relabel classes 0, 1, ... in order of their least member."""
    ids: dict[int, int] = {}
    return tuple(ids.setdefault(c, len(ids)) for c in labels)


@dataclass(frozen=True)
class Congruence:
    class_of: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.class_of)

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def block(self, x: int) -> frozenset[int]:
        c = self.class_of[x]
        return frozenset(i for i, d in enumerate(self.class_of) if d == c)

    def classes(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.class_of):
            out.setdefault(c, []).append(i)
        return [tuple(v) for v in out.values()]

    def refines(self, other: "Congruence") -> bool:
        return all(other.related(x, y) for cls in self.classes() for x in cls for y in cls)

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for cls in self.classes() for x in cls for y in cls)


def identity_congruence(n: int) -> Congruence:
    return Congruence(tuple(range(n)))


def total_congruence(n: int) -> Congruence:
    return Congruence((0,) * n)


def _carrier_size(alg) -> int:
    return len(alg.operations()[0][1])


class _UnionFind:
    def __init__(self, labels):
        self.parent = list(range(len(labels)))
        first: dict[int, int] = {}
        for i, c in enumerate(labels):
            if c in first:
                self.parent[i] = first[c]
            else:
                first[c] = i

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def _close(ops, n: int, labels) -> Congruence:
    """Smallest congruence containing the partition ``labels``.

    Compatibility only needs checking one argument position at a time, and only
    for pairs (x, root(x)), since those generate every class.
    """
    uf = _UnionFind(labels)
    changed = True
    while changed:
        changed = False
        for arity, table in ops:
            for x in range(n):
                r = uf.find(x)
                if r == x:
                    continue
                if arity == 1:
                    changed |= uf.union(table[x], table[r])
                    continue
                for z in range(n):
                    changed |= uf.union(table[x][z], table[r][z])
                    changed |= uf.union(table[z][x], table[z][r])
    return Congruence(_normalize(uf.find(i) for i in range(n)))


def principal_congruence(alg, a: int, b: int) -> Congruence:
    n = _carrier_size(alg)
    labels = list(range(n))
    labels[max(a, b)] = min(a, b)
    return _close(alg.operations(), n, labels)


def congruence_join(alg, t: Congruence, p: Congruence) -> Congruence:
    uf = _UnionFind(t.class_of)
    for x in range(t.n):
        uf.union(x, p.class_of.index(p.class_of[x]))
    return _close(alg.operations(), t.n, [uf.find(i) for i in range(t.n)])


def congruence_meet(t: Congruence, p: Congruence) -> Congruence:
    return Congruence(_normalize(zip(t.class_of, p.class_of)))


@dataclass(frozen=True)
class CongruenceLattice:
    congruences: tuple[Congruence, ...]
    leq: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.congruences)

    def index(self, c: Congruence) -> int:
        return self.congruences.index(c)

    def join_index(self, i: int, j: int) -> int:
        ups = [k for k in range(self.size) if self.leq[i][k] and self.leq[j][k]]
        return next(k for k in ups if all(self.leq[k][u] for u in ups))

    def meet_index(self, i: int, j: int) -> int:
        return self.index(congruence_meet(self.congruences[i], self.congruences[j]))


def _sort_key(c: Congruence):
    return (-len(c.classes()), c.class_of)


def all_congruences(alg) -> CongruenceLattice:
    n = _carrier_size(alg)
    found = {identity_congruence(n)}
    for a, b in itertools.combinations(range(n), 2):
        found.add(principal_congruence(alg, a, b))
    # close under joins; principal ones generate everything
    frontier = list(found)
    while frontier:
        new = []
        for t in frontier:
            for p in list(found):
                j = congruence_join(alg, t, p)
                if j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    cons = tuple(sorted(found, key=_sort_key))
    leq = tuple(tuple(s.refines(t) for t in cons) for s in cons)
    return CongruenceLattice(cons, leq)


def _compose(t: Congruence, p: Congruence) -> frozenset[tuple[int, int]]:
    n = t.n
    return frozenset(
        (x, z) for x in range(n) for z in range(n) if any(t.related(x, y) and p.related(y, z) for y in range(n))
    )


def permutability_failure(CL: CongruenceLattice):
    for i, j in itertools.combinations(range(CL.size), 2):
        t, p = CL.congruences[i], CL.congruences[j]
        if _compose(t, p) != _compose(p, t):
            return (i, j)
    return None


def check_permutable(CL: CongruenceLattice) -> bool:
    return permutability_failure(CL) is None


def check_distributive_con(CL: CongruenceLattice) -> bool:
    J, M = CL.join_index, CL.meet_index
    return first_failure(CL.size, 3, lambda x, y, z: M(x, J(y, z)) == J(M(x, y), M(x, z))) is None


# regularity, straight from the definitions

@dataclass
class RegularityReport:
    constant: int
    c_regular: bool
    c_locally_regular: bool
    regular: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def is_c_regular(CL: CongruenceLattice, c: int) -> bool:
    seen: dict[frozenset, Congruence] = {}
    for t in CL.congruences:
        if seen.setdefault(t.block(c), t) != t:
            return False
    return True


def is_c_locally_regular(CL: CongruenceLattice, c: int) -> bool:
    n = CL.congruences[0].n
    for t, p in itertools.combinations(CL.congruences, 2):
        if any(t.block(a) == p.block(a) for a in range(n)) and t.block(c) != p.block(c):
            return False
    return True


def is_regular(CL: CongruenceLattice) -> bool:
    """Every congruence is determined by any one of its classes."""
    n = CL.congruences[0].n
    for t, p in itertools.combinations(CL.congruences, 2):
        if any(t.block(a) == p.block(a) for a in range(n)):
            return False
    return True


def check_regularity(alg, CL: CongruenceLattice, c: int) -> RegularityReport:
    return RegularityReport(c, is_c_regular(CL, c), is_c_locally_regular(CL, c), is_regular(CL))


# the specific terms behind permutability and regularity of groupoids

@dataclass
class TermReport:
    malcev: bool
    b_term: bool
    t_term: bool | None
    local_terms: bool | None
    witnesses: dict

    def as_dict(self) -> dict:
        return {
            "malcev": self.malcev,
            "b_term": self.b_term,
            "t_term": self.t_term,
            "local_terms": self.local_terms,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def check_terms(G: RRLGroupoid, strict: bool = True) -> TermReport:
    """Evaluate the Mal'cev term and the regularity terms exhaustively.

    ``t_term`` is None without double negation, ``local_terms`` is None
    without double negation and divisibility. With ``strict`` any failing
    clause raises TheoremViolation, since none can fail on a valid groupoid.
    """
    L, ar, od = G.lattice, G.arrow, G.odot
    n, j, m, zero, one = G.n, L.join, L.meet, L.bottom, L.top

    def b(x, y):
        return m[ar[x][y]][ar[y][x]]

    def p(x, y, z):
        return j[od[b(y, z)][x]][od[b(x, y)][z]]

    rep = classify(G)
    w = {}
    f = first_failure(n, 2, lambda x, y: p(x, y, y) == x and p(x, x, y) == y)
    if f is not None:
        w["malcev"] = L.names(f)
    f = first_failure(n, 2, lambda x, y: (b(x, y) == one) == (x == y))
    if f is not None:
        w["b_term"] = L.names(f)
    t_ok = local_ok = None
    if rep.double_negation:
        f = first_failure(n, 2, lambda x, y: (ar[b(x, y)][zero] == zero) == (x == y))
        t_ok = f is None
        if f is not None:
            w["t_term"] = L.names(f)
        if rep.divisibility:
            f = first_failure(
                n, 2, lambda x, y: (ar[ar[x][y]][zero] == x and j[x][y] == x) == (y == zero)
            )
            local_ok = f is None
            if f is not None:
                w["local_terms"] = L.names(f)
    report = TermReport("malcev" not in w, "b_term" not in w, t_ok, local_ok, w)
    if strict and w:
        name = sorted(w)[0]
        raise TheoremViolation(f"term clause {name} fails on a valid groupoid", w[name])
    return report
