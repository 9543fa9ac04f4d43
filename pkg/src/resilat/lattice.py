"""Finite bounded lattices, antitone involutions and sections.

Elements are dense indices ``0..n-1``; names are kept only for I/O and for
witnesses in error messages.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import CycleError, NoBounds, NotALattice, NotAntitone, NotInvolutive

Table = tuple[tuple[int, ...], ...]
Unary = tuple[int, ...]


def first_failure(n: int, arity: int, pred: Callable[..., bool]):
    """Least tuple (lexicographic in index order) on which ``pred`` is false."""
    for args in itertools.product(range(n), repeat=arity):
        if not pred(*args):
            return args
    return None


def freeze(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class FiniteLattice:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    join: Table
    meet: Table
    bottom: int
    top: int
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.elements)})

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self._index[name]

    def name(self, i: int) -> str:
        return self.elements[i]

    def names(self, idxs: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in idxs)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def up(self, a: int) -> tuple[int, ...]:
        """Members of the section [a, 1] in index order."""
        return tuple(x for x in range(self.n) if self.leq[a][x])

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (x, y) with x covered by y, sorted by index."""
        n = self.n
        out = []
        for x in range(n):
            for y in range(n):
                if x != y and self.leq[x][y]:
                    if not any(z not in (x, y) and self.leq[x][z] and self.leq[z][y] for z in range(n)):
                        out.append((x, y))
        return out

    def operations(self):
        return [(2, self.join), (2, self.meet)]


@dataclass(frozen=True)
class Involution:
    host: FiniteLattice
    map: Unary

    def __call__(self, x: int) -> int:
        return self.map[x]


@dataclass(frozen=True)
class Section:
    host: FiniteLattice
    base: int
    members: tuple[int, ...]


def _closure(n: int, rel: list[list[bool]]) -> list[list[bool]]:
    rel = [row[:] for row in rel]
    for i in range(n):
        rel[i][i] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                rk = rel[k]
                ri = rel[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return rel


def lattice_from_leq(elements: Sequence[str], leq: Sequence[Sequence[bool]]) -> FiniteLattice:
    """Validate a full order relation and compute the lattice tables."""
    names = tuple(elements)
    n = len(names)
    leq = [[bool(v) for v in row] for row in leq]
    for i in range(n):
        if not leq[i][i]:
            raise CycleError(f"relation not reflexive at {names[i]}", (names[i],))
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise CycleError(f"{names[i]} <= {names[j]} <= {names[i]}", (names[i], names[j]))
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        raise CycleError("relation not transitive", (names[i], names[j], names[k]))
    if n == 0:
        raise NoBounds("empty carrier")
    bottoms = [b for b in range(n) if all(leq[b][x] for x in range(n))]
    tops = [t for t in range(n) if all(leq[x][t] for x in range(n))]
    if not bottoms or not tops:
        missing = "least" if not bottoms else "greatest"
        raise NoBounds(f"no {missing} element", (missing,))
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            lubs = [z for z in ubs if all(leq[z][w] for w in ubs)]
            if len(lubs) != 1:
                raise NotALattice(f"{names[x]}, {names[y]} have no least upper bound", (names[x], names[y]))
            lbs = [z for z in range(n) if leq[z][x] and leq[z][y]]
            glbs = [z for z in lbs if all(leq[w][z] for w in lbs)]
            if len(glbs) != 1:
                raise NotALattice(f"{names[x]}, {names[y]} have no greatest lower bound", (names[x], names[y]))
            join[x][y] = lubs[0]
            meet[x][y] = glbs[0]
    return FiniteLattice(
        elements=names,
        leq=tuple(tuple(row) for row in leq),
        join=freeze(join),
        meet=freeze(meet),
        bottom=bottoms[0],
        top=tops[0],
    )


def build_lattice(elements: Sequence[str], order_pairs: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Build a lattice from any generating relation (Hasse edges suffice).

    >>> build_lattice(["0", "1"], [("0", "1")]).join
    ((0, 1), (1, 1))
    """
    names = tuple(elements)
    if len(set(names)) != len(names):
        dupes = sorted({x for x in names if names.count(x) > 1})
        raise ValueError(f"duplicate element names: {dupes}")
    idx = {name: i for i, name in enumerate(names)}
    n = len(names)
    rel = [[False] * n for _ in range(n)]
    for lo, hi in order_pairs:
        if lo not in idx or hi not in idx:
            raise ValueError(f"order pair ({lo}, {hi}) uses an undeclared element")
        rel[idx[lo]][idx[hi]] = True
    return lattice_from_leq(names, _closure(n, rel))


def rename(L: FiniteLattice, names: Sequence[str]) -> FiniteLattice:
    return FiniteLattice(tuple(names), L.leq, L.join, L.meet, L.bottom, L.top)


def validate_involution(L: FiniteLattice, mapping: Sequence[int]) -> Involution:
    n = L.n
    m = tuple(int(v) for v in mapping)
    if len(m) != n or any(not 0 <= v < n for v in m):
        raise ValueError("involution table must map every element into the carrier")
    for x in range(n):
        if m[m[x]] != x:
            raise NotInvolutive(f"~~{L.name(x)} != {L.name(x)}", (L.name(x),))
    bad = first_failure(n, 2, lambda x, y: not L.leq[x][y] or L.leq[m[y]][m[x]])
    if bad is not None:
        x, y = bad
        raise NotAntitone(f"{L.name(x)} <= {L.name(y)} but ~{L.name(y)} not <= ~{L.name(x)}", L.names(bad))
    return Involution(L, m)


def is_distributive(L: FiniteLattice) -> bool:
    return distributivity_failure(L) is None


def distributivity_failure(L: FiniteLattice):
    j, m = L.join, L.meet
    return first_failure(L.n, 3, lambda x, y, z: m[x][j[y][z]] == j[m[x][y]][m[x][z]])


def is_complemented(L: FiniteLattice) -> bool:
    return all(
        any(L.join[x][y] == L.top and L.meet[x][y] == L.bottom for y in range(L.n)) for x in range(L.n)
    )


def is_boolean(L: FiniteLattice) -> bool:
    return is_distributive(L) and is_complemented(L)


def section(L: FiniteLattice, a: int) -> Section:
    return Section(L, a, L.up(a))


def section_lattice(L: FiniteLattice, a: int) -> tuple[FiniteLattice, tuple[int, ...]]:
    """The interval [a, 1] as a lattice in its own right, plus the embedding."""
    members = L.up(a)
    pos = {x: i for i, x in enumerate(members)}
    return (
        FiniteLattice(
            elements=L.names(members),
            leq=tuple(tuple(L.leq[x][y] for y in members) for x in members),
            join=tuple(tuple(pos[L.join[x][y]] for y in members) for x in members),
            meet=tuple(tuple(pos[L.meet[x][y]] for y in members) for x in members),
            bottom=0,
            top=pos[L.top],
        ),
        members,
    )


def are_isomorphic(L1: FiniteLattice, L2: FiniteLattice):
    """An order isomorphism as a tuple ``p`` with ``p[i]`` the image of ``i``, or None."""
    n = L1.n
    if n != L2.n:
        return None
    deg1 = [sum(L1.leq[x]) for x in range(n)]
    deg2 = [sum(L2.leq[x]) for x in range(n)]
    if sorted(deg1) != sorted(deg2):
        return None
    p = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or deg2[c] != deg1[i]:
                continue
            if all(L1.leq[i][k] == L2.leq[c][p[k]] and L1.leq[k][i] == L2.leq[p[k]][c] for k in range(i)):
                p[i] = c
                used[c] = True
                if extend(i + 1):
                    return True
                used[c] = False
        p[i] = -1
        return False

    return tuple(p) if extend(0) else None


def canonical_code(
    n: int,
    leq: Sequence[Sequence[bool]],
    binaries: Sequence[Table] = (),
    unaries: Sequence[Unary] = (),
    bottom: int | None = None,
    top: int | None = None,
) -> bytes:
    """Lexicographically least encoding over relabelings fixing ``bottom``/``top``.

    New label 0 goes to ``bottom`` and ``n-1`` to ``top``. The order relation is
    encoded first in shell order (cells whose larger label is k come at depth k),
    so partial relabelings can be pruned against the best code found so far.
    Operation tables follow, row-major in the new labels.
    """
    order = [-1] * n
    used = [False] * n
    best: list = [None, None]  # leq prefix code, full code

    def shell(k: int) -> list[int]:
        ok = order[k]
        out = []
        for i in range(k):
            oi = order[i]
            out.append(1 if leq[oi][ok] else 0)
            out.append(1 if leq[ok][oi] else 0)
        return out

    def leaf(code: list[int]) -> None:
        pos = [0] * n
        for new, old in enumerate(order):
            pos[old] = new
        full = [n] + code
        for t in binaries:
            full.extend(pos[t[order[i]][order[j]]] for i in range(n) for j in range(n))
        for u in unaries:
            full.extend(pos[u[order[i]]] for i in range(n))
        if best[1] is None or full < best[1]:
            best[0] = code
            best[1] = full

    def candidates(k: int):
        if bottom is not None and k == 0:
            return [bottom]
        if top is not None and k == n - 1 and top != bottom:
            return [top]
        return [c for c in range(n) if not used[c] and c != bottom and c != top]

    def search(k: int, code: list[int]) -> None:
        if k == n:
            leaf(code)
            return
        for c in candidates(k):
            if used[c]:
                continue
            order[k] = c
            used[c] = True
            nxt = code + shell(k)
            if best[0] is None or nxt <= best[0][: len(nxt)]:
                search(k + 1, nxt)
            used[c] = False
            order[k] = -1

    search(0, [])
    return bytes(best[1])


def canonical_form(L: FiniteLattice) -> bytes:
    return canonical_code(L.n, L.leq, bottom=L.bottom, top=L.top)


def relabel_table(t: Table, perm: Sequence[int]) -> Table:
    """Apply the bijection ``perm`` (old index -> new index) to a binary table."""
    n = len(perm)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
