"""Brute-force reference computations used to produce frozen test fixtures.

Nothing here imports the package under test. Everything is plain exhaustive
search over raw relations and tables, deliberately naive.
"""

from __future__ import annotations

import itertools


# orders and lattices

def partial_orders(n: int):
    """Every partial order on ``range(n)`` as a frozenset of strict pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel.add((i, j))
            elif c == 2:
                rel.add((j, i))
        if all((a, d) in rel for (a, b) in rel for (c, d) in rel if b == c and a != d):
            yield frozenset(rel)


def _le(rel, x, y):
    return x == y or (x, y) in rel


def is_bounded_lattice(n: int, rel) -> bool:
    pts = range(n)
    if not any(all(_le(rel, b, x) for x in pts) for b in pts):
        return False
    if not any(all(_le(rel, x, t) for x in pts) for t in pts):
        return False
    for x in pts:
        for y in pts:
            ub = [z for z in pts if _le(rel, x, z) and _le(rel, y, z)]
            if sum(all(_le(rel, z, w) for w in ub) for z in ub) != 1:
                return False
            lb = [z for z in pts if _le(rel, z, x) and _le(rel, z, y)]
            if sum(all(_le(rel, w, z) for w in lb) for z in lb) != 1:
                return False
    return True


def _order_code(n, rel, perm):
    return tuple(int(_le(rel, perm[i], perm[j])) for i in range(n) for j in range(n))


def lattice_classes(n: int) -> list:
    """Isomorphism classes of n-element lattices, as the least order code."""
    codes = set()
    for rel in partial_orders(n):
        if is_bounded_lattice(n, rel):
            codes.add(min(_order_code(n, rel, p) for p in itertools.permutations(range(n))))
    return sorted(codes)


def lattice_count(n: int) -> int:
    return len(lattice_classes(n))


# residuated groupoids on chains

def chain_groupoids(n: int) -> list:
    """All ``.`` tables on the chain 0 < 1 < ... < n-1 with a unit at the top
    and a right residual, found by scanning every table."""
    top = n - 1
    out = []
    for flat in itertools.product(range(n), repeat=n * n):
        od = [flat[i * n:(i + 1) * n] for i in range(n)]
        if any(od[top][x] != x for x in range(n)):
            continue
        ok = True
        for y in range(n):
            for z in range(n):
                below = [x for x in range(n) if od[x][y] <= z]
                # must be a non-empty down-set {0..m}, so that it has a maximum
                if not below or below != list(range(len(below))):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(tuple(r) for r in od))
    return out


def column_residuated_count(leq, top: int) -> int:
    """Labeled count of residuated ``.`` with ``1 . y = y``, by scanning every
    column ``x -> x . y`` independently and checking that each preimage
    ``{x : x . y <= z}`` is a principal down-set."""
    n = len(leq)
    total = 1
    for y in range(n):
        good = 0
        for col in itertools.product(range(n), repeat=n):
            if col[top] != y:
                continue
            ok = True
            for z in range(n):
                pre = [x for x in range(n) if leq[col[x]][z]]
                tops = [m for m in pre if all(leq[x][m] for x in pre)]
                if not tops or any(not (x in pre) for x in range(n) if leq[x][tops[0]]):
                    ok = False
                    break
            good += ok
        total *= good
    return total


# basic algebras

def basic_algebra_classes(n: int) -> list:
    """Isomorphism classes of basic algebras on ``n`` points, via raw tables.

    Staged only by the axioms themselves: BA2 picks the negation, BA1 fixes
    the column ``x + 0``, everything else is scanned.
    """
    found = set()
    for zero in range(n):
        for neg in itertools.product(range(n), repeat=n):
            if any(neg[neg[x]] != x for x in range(n)):
                continue
            one = neg[zero]
            free = [(x, y) for x in range(n) for y in range(n) if y != zero]
            for vals in itertools.product(range(n), repeat=len(free)):
                op = [[x if y == zero else None for y in range(n)] for x in range(n)]
                for (x, y), v in zip(free, vals):
                    op[x][y] = v
                if not all(
                    op[neg[op[neg[x]][y]]][y] == op[neg[op[neg[y]][x]]][x] for x in range(n) for y in range(n)
                ):
                    continue
                if not all(
                    op[neg[op[neg[op[neg[op[x][y]]][y]]][z]]][op[x][z]] == one
                    for x in range(n) for y in range(n) for z in range(n)
                ):
                    continue
                codes = []
                for p in itertools.permutations(range(n)):
                    inv = [0] * n
                    for a, b in enumerate(p):
                        inv[b] = a
                    codes.append((
                        p[zero],
                        tuple(p[neg[inv[i]]] for i in range(n)),
                        tuple(p[op[inv[i]][inv[j]]] for i in range(n) for j in range(n)),
                    ))
                found.add(min(codes))
    return sorted(found)


# congruences

def partitions(n: int):
    """Every set partition of ``range(n)`` as a tuple of class labels."""
    def rec(i, labels, k):
        if i == n:
            yield tuple(labels)
            return
        for c in range(k + 1):
            labels.append(c)
            yield from rec(i + 1, labels, max(k, c + 1))
            labels.pop()
    yield from rec(0, [], 0)


def congruence_partitions(n: int, ops) -> list:
    """Partitions compatible with every ``(arity, table)`` in ``ops``, checked
    on all pairs of related argument tuples."""
    out = []
    for lab in partitions(n):
        ok = True
        for arity, t in ops:
            for xs in itertools.product(range(n), repeat=arity):
                for ys in itertools.product(range(n), repeat=arity):
                    if all(lab[a] == lab[b] for a, b in zip(xs, ys)):
                        fx = t[xs[0]] if arity == 1 else t[xs[0]][xs[1]]
                        fy = t[ys[0]] if arity == 1 else t[ys[0]][ys[1]]
                        if lab[fx] != lab[fy]:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(lab)
    return out


def basic_algebra_classes_pruned(n: int) -> list:
    """Same result as :func:`basic_algebra_classes`, but cells of ``+`` are
    filled one at a time and any BA3/BA4 instance whose cells are all known is
    checked immediately."""
    found = set()
    cells = [(x, y) for x in range(n) for y in range(n)]

    def val(op, *path):
        return op.get(path)

    for zero in range(n):
        for neg in itertools.product(range(n), repeat=n):
            if any(neg[neg[x]] != x for x in range(n)):
                continue
            one = neg[zero]
            op = {(x, zero): x for x in range(n)}

            def ev(a, b):
                return op.get((a, b))

            def ba3_ok():
                for x in range(n):
                    for y in range(n):
                        u = ev(neg[x], y)
                        v = ev(neg[y], x)
                        if u is None or v is None:
                            continue
                        s1 = ev(neg[u], y)
                        s2 = ev(neg[v], x)
                        if s1 is not None and s2 is not None and s1 != s2:
                            return False
                return True

            def ba4_ok():
                for x in range(n):
                    for y in range(n):
                        for z in range(n):
                            a = ev(x, y)
                            a = None if a is None else ev(neg[a], y)
                            a = None if a is None else ev(neg[a], z)
                            b = ev(x, z)
                            if a is None or b is None:
                                continue
                            r = ev(neg[a], b)
                            if r is not None and r != one:
                                return False
                return True

            free = [c for c in cells if c not in op]

            def rec(k):
                if not ba3_ok() or not ba4_ok():
                    return
                if k == len(free):
                    tab = [[op[(x, y)] for y in range(n)] for x in range(n)]
                    codes = []
                    for p in itertools.permutations(range(n)):
                        inv = [0] * n
                        for a, b in enumerate(p):
                            inv[b] = a
                        codes.append((
                            p[zero],
                            tuple(p[neg[inv[i]]] for i in range(n)),
                            tuple(p[tab[inv[i]][inv[j]]] for i in range(n) for j in range(n)),
                        ))
                    found.add(min(codes))
                    return
                for v in range(n):
                    op[free[k]] = v
                    rec(k + 1)
                del op[free[k]]

            rec(0)
    return sorted(found)
