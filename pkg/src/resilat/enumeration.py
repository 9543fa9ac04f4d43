"""Exhaustive generation of small lattices, groupoids and basic algebras.

Every list returned here is free of isomorphic duplicates and sorted by a
canonical code, so output does not depend on search order or parallelism.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .basic import BasicAlgebra, a_of_l, is_mv
from .errors import SizeCapExceeded, UnknownKind
from .lattice import (
    FiniteLattice,
    Involution,
    canonical_form,
    is_boolean,
    is_distributive,
    lattice_from_leq,
)
from .residuation import RRLGroupoid, classify, validate_rrl
from .sections import (
    EXTENSIVE,
    INVOLUTIVE,
    OUTSIDE,
    SectionedLattice,
    SectionFamily,
    is_sectionally_pseudocomplemented,
)

KINDS = ("lattice", "rrl-groupoid", "basic-algebra")
DEFAULT_CAPS = {"lattice": 7, "rrl-groupoid": 5, "basic-algebra": 5}
CAP_ENV = "RESILAT_SIZE_CAP"


def size_caps() -> dict:
    """Default caps, overridden by ``RESILAT_SIZE_CAP`` (``8`` or ``lattice=8,basic-algebra=6``)."""
    caps = dict(DEFAULT_CAPS)
    raw = os.environ.get(CAP_ENV, "").strip()
    if not raw:
        return caps
    if raw.isdigit():
        return {k: int(raw) for k in caps}
    for part in raw.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in caps or not val.strip().isdigit():
            raise ValueError(f"bad {CAP_ENV} entry {part!r}")
        caps[key] = int(val)
    return caps


def check_cap(kind: str, n: int) -> None:
    if kind not in DEFAULT_CAPS:
        raise UnknownKind(f"cannot enumerate kind {kind!r}", (kind,))
    cap = size_caps()[kind]
    if n > cap:
        raise SizeCapExceeded(f"{kind} enumeration capped at size {cap} (set {CAP_ENV} to raise it)", (kind, str(n)))
    if n < 1:
        raise SizeCapExceeded(f"size must be at least 1, got {n}", (kind, str(n)))


# lattices

def _element_names(n: int) -> list[str]:
    if n == 1:
        return ["0"]
    mids = [chr(ord("a") + i) if i < 26 else f"e{i}" for i in range(n - 2)]
    return ["0", *mids, "1"]


def _naturally_labeled_posets(m: int):
    """Strict orders on 0..m-1 contained in the index order, as sets of pairs."""
    pairs = list(itertools.combinations(range(m), 2))
    for bits in range(1 << len(pairs)):
        rel = {p for k, p in enumerate(pairs) if bits >> k & 1}
        if all((i, k) in rel for (i, j) in rel for (j2, k) in rel if j == j2):
            yield rel


def _lattices_unchecked(n: int) -> list[FiniteLattice]:
    names = _element_names(n)
    if n == 1:
        return [lattice_from_leq(names, [[True]])]
    m = n - 2
    seen = {}
    for rel in _naturally_labeled_posets(m):
        leq = [[False] * n for _ in range(n)]
        for i in range(n):
            leq[0][i] = leq[i][n - 1] = leq[i][i] = True
        for i, j in rel:
            leq[i + 1][j + 1] = True
        try:
            L = lattice_from_leq(names, leq)
        except Exception:
            continue
        seen.setdefault(canonical_form(L), L)
    return [seen[k] for k in sorted(seen)]


def enumerate_lattices(n: int) -> list[FiniteLattice]:
    """All bounded lattices of order ``n`` up to isomorphism."""
    check_cap("lattice", n)
    return _lattices_unchecked(n)


def automorphisms(L: FiniteLattice) -> list[tuple[int, ...]]:
    """Order automorphisms as tuples ``p`` (``p[x]`` the image of ``x``)."""
    n = L.n
    height = [sum(L.leq[y][x] for y in range(n)) for x in range(n)]
    out = []
    p = [-1] * n
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            out.append(tuple(p))
            return
        for c in range(n):
            if used[c] or height[c] != height[i]:
                continue
            if all(L.leq[i][k] == L.leq[c][p[k]] and L.leq[k][i] == L.leq[p[k]][c] for k in range(i)):
                p[i], used[c] = c, True
                extend(i + 1)
                used[c] = False
        p[i] = -1

    extend(0)
    return sorted(out)


def _table_code(perms, binaries=(), unaries=()) -> tuple:
    """Least relabeling of the tables under a group of lattice automorphisms."""
    best = None
    for p in perms:
        n = len(p)
        inv = [0] * n
        for old, new in enumerate(p):
            inv[new] = old
        code = tuple(p[t[inv[i]][inv[j]]] for t in binaries for i in range(n) for j in range(n))
        code += tuple(p[u[inv[i]]] for u in unaries for i in range(n))
        if best is None or code < best:
            best = code
    return best


# involutions and sectional maps

def enumerate_involutions(L: FiniteLattice) -> list[Involution]:
    n = L.n
    out = []
    for perm in itertools.permutations(range(n)):
        if any(perm[perm[x]] != x for x in range(n)):
            continue
        if all(not L.leq[x][y] or L.leq[perm[y]][perm[x]] for x in range(n) for y in range(n)):
            out.append(Involution(L, perm))
    return out


def _section_maps(L: FiniteLattice, a: int, mode: str) -> list[tuple[int, ...]]:
    sec = L.up(a)
    le = L.leq
    found = []
    img = {}

    def extend(k: int) -> None:
        if k == len(sec):
            if img[L.top] != a:
                return
            if mode == INVOLUTIVE and any(img[img[x]] != x for x in sec):
                return
            if any(not le[x][img[img[x]]] for x in sec):
                return
            row = [OUTSIDE] * L.n
            for x in sec:
                row[x] = img[x]
            found.append(tuple(row))
            return
        x = sec[k]
        for v in sec:
            if all(
                (not le[x][y] or le[img[y]][v]) and (not le[y][x] or le[v][img[y]]) for y in sec[:k]
            ):
                img[x] = v
                extend(k + 1)
        img.pop(x, None)

    extend(0)
    return found


def enumerate_section_families(L: FiniteLattice, mode: str = EXTENSIVE) -> list[SectionFamily]:
    """Every family of sectional maps of the given mode, in product order."""
    per = [_section_maps(L, a, mode) for a in range(L.n)]
    return [SectionFamily(L, tuple(maps)) for maps in itertools.product(*per)]


# groupoids

def _join_preserving_columns(L: FiniteLattice, y: int) -> list[tuple[int, ...]]:
    """Maps ``f`` with ``f(0) = 0``, ``f(1) = y`` that preserve binary joins.

    On a finite lattice these are exactly the maps ``x -> x . y`` of a
    residuated ``.`` whose column at ``y`` satisfies ``1 . y = y``.
    """
    n, j, le = L.n, L.join, L.leq
    order = sorted(range(n), key=lambda x: (sum(le[w][x] for w in range(n)), x))
    out = []
    f = [-1] * n

    def consistent(x: int) -> bool:
        done = [w for w in range(n) if f[w] >= 0]
        for p in done:
            for q in done:
                u = j[p][q]
                if x in (p, q, u) and f[u] >= 0 and f[u] != j[f[p]][f[q]]:
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(tuple(f))
            return
        x = order[k]
        if x == L.bottom:
            choices = [L.bottom]
        elif x == L.top:
            choices = [y]
        else:
            choices = [v for v in range(n) if le[v][y]]
        for v in choices:
            f[x] = v
            if consistent(x):
                extend(k + 1)
        f[x] = -1

    extend(0)
    return sorted(out)


def _arrow_of(L: FiniteLattice, odot) -> tuple:
    n, j, le = L.n, L.join, L.leq
    rows = []
    for y in range(n):
        row = []
        for z in range(n):
            acc = L.bottom
            for x in range(n):
                if le[odot[x][y]][z]:
                    acc = j[acc][x]
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def enumerate_rrl_groupoids(L: FiniteLattice, up_to_iso: bool = True) -> list[RRLGroupoid]:
    """All right-residuated groupoids on ``L``.

    The search is column by column: for fixed ``y`` the map ``x -> x . y`` must
    preserve joins and send 1 to ``y``, and any choice of such columns gives a
    residuated operation. Each candidate is still validated.
    """
    check_cap("rrl-groupoid", L.n)
    n = L.n
    cols = [_join_preserving_columns(L, y) for y in range(n)]
    perms = automorphisms(L) if up_to_iso else [tuple(range(n))]
    seen = {}
    for choice in itertools.product(*cols):
        odot = tuple(tuple(choice[y][x] for y in range(n)) for x in range(n))
        code = _table_code(perms, (odot,))
        if code in seen:
            continue
        seen[code] = validate_rrl(L, odot, _arrow_of(L, odot))
    return [seen[k] for k in sorted(seen)]


def _groupoids_on(L):
    return enumerate_rrl_groupoids(L)


def _basic_on(L):
    perms = automorphisms(L)
    seen = {}
    for F in enumerate_section_families(L, INVOLUTIVE):
        A = a_of_l(SectionedLattice(L, None, F))
        seen.setdefault(_table_code(perms, (A.oplus,), (A.neg,)), A)
    return [seen[k] for k in sorted(seen)]


def _map(fn, items, jobs: int):
    if jobs is None or jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def enumerate_groupoids_of_size(n: int, jobs: int = 1) -> list[RRLGroupoid]:
    check_cap("rrl-groupoid", n)
    out = []
    for gs in _map(_groupoids_on, _lattices_unchecked(n), jobs):
        out.extend(gs)
    return out


def enumerate_basic_algebras(n: int, jobs: int = 1) -> list[BasicAlgebra]:
    """Basic algebras of order ``n`` up to isomorphism, built from lattices with
    sectional involutions. Lattices are processed in canonical order, so the
    result is sorted by (lattice form, table code)."""
    check_cap("basic-algebra", n)
    out = []
    for algs in _map(_basic_on, _lattices_unchecked(n), jobs):
        out.extend(algs)
    return out


def enumerate_kind(kind: str, n: int, jobs: int = 1) -> list:
    if kind == "lattice":
        return enumerate_lattices(n)
    if kind == "rrl-groupoid":
        return enumerate_groupoids_of_size(n, jobs)
    if kind == "basic-algebra":
        return enumerate_basic_algebras(n, jobs)
    raise UnknownKind(f"cannot enumerate kind {kind!r}", (kind,))


# census

@dataclass
class CensusRow:
    kind: str
    size: int
    total: int
    flags: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kind": self.kind, "size": self.size, "total": self.total, "flags": dict(self.flags)}

    def csv_rows(self) -> list[tuple]:
        rows = [(self.kind, self.size, "total", self.total)]
        rows.extend((self.kind, self.size, k, v) for k, v in self.flags.items())
        return rows


def _lattice_flags(L: FiniteLattice) -> dict:
    return {
        "distributive": is_distributive(L),
        "boolean": is_boolean(L),
        "sectionally_pseudocomplemented": is_sectionally_pseudocomplemented(L),
        "has_involution": bool(enumerate_involutions(L)),
    }


def _groupoid_flags(G: RRLGroupoid) -> dict:
    return classify(G).flags()


def _basic_flags(A: BasicAlgebra) -> dict:
    op = A.oplus
    n = A.n
    return {
        "is_mv": is_mv(A),
        "commutative": all(op[x][y] == op[y][x] for x in range(n) for y in range(n)),
        "idempotent": all(op[x][x] == x for x in range(n)),
    }


_FLAGGERS = {"lattice": _lattice_flags, "rrl-groupoid": _groupoid_flags, "basic-algebra": _basic_flags}


def census(kind: str, n: int, jobs: int = 1) -> CensusRow:
    if kind not in _FLAGGERS:
        raise UnknownKind(f"no census for kind {kind!r}", (kind,))
    items = enumerate_kind(kind, n, jobs)
    counts: dict[str, int] = {}
    for item in items:
        for k, v in _FLAGGERS[kind](item).items():
            counts[k] = counts.get(k, 0) + (1 if v else 0)
    return CensusRow(kind, n, len(items), counts)
