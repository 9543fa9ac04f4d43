"""Lattices with sectional maps ``x |-> x^a`` on each interval ``[a, 1]``.

Covers the passage between such lattices and involutive groupoids in both
directions, the implication ``x => y := (x v y)^y`` a family induces, and
sectional pseudocomplementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    IdentityFails,
    NotAntitone,
    NotExtensive,
    NotIntoSection,
    NotInvolutive,
    NotSectionallyPseudocomplemented,
    PreconditionFails,
    UnitImageFails,
)
from .lattice import FiniteLattice, Involution, Table, first_failure, is_boolean, validate_involution
from .residuation import (
    IMPLICATION_IDENTITIES,
    Equivalence,
    RRLGroupoid,
    classify,
    derived_implication,
    i3_star_failure,
    validate_rrl,
)

OUTSIDE = -1

EXTENSIVE = "extensive"
INVOLUTIVE = "involutive"


@dataclass(frozen=True)
class SectionFamily:
    """One map per base element ``a``; ``maps[a][x]`` is ``x^a`` for ``x >= a``
    and ``OUTSIDE`` elsewhere. The degenerate section ``[1, 1]`` is included."""

    host: FiniteLattice
    maps: tuple[tuple[int, ...], ...]

    def apply(self, a: int, x: int) -> int:
        return self.maps[a][x]

    @property
    def is_involutive(self) -> bool:
        L = self.host
        return all(self.maps[a][self.maps[a][x]] == x for a in range(L.n) for x in L.up(a))


@dataclass(frozen=True)
class SectionedLattice:
    lattice: FiniteLattice
    tilde: Involution | None
    family: SectionFamily

    def operations(self):
        ops = list(self.lattice.operations())
        if self.tilde is not None:
            ops.append((1, self.tilde.map))
        return ops


def _normalize(L: FiniteLattice, maps) -> tuple[tuple[int, ...], ...]:
    n = L.n
    if len(maps) != n:
        raise ValueError(f"need one sectional map per element, got {len(maps)}")
    out = []
    for a in range(n):
        m = maps[a]
        row = [OUTSIDE] * n
        for x in L.up(a):
            v = m[x] if not isinstance(m, Mapping) else m.get(x)
            if v is None or v == OUTSIDE:
                raise ValueError(f"sectional map for {L.name(a)} undefined at {L.name(x)}")
            row[x] = int(v)
        out.append(tuple(row))
    return tuple(out)


def validate_family(L: FiniteLattice, maps, mode: str = EXTENSIVE) -> SectionFamily:
    """Check every sectional map; ``maps[a]`` may be a sequence or a dict on [a, 1]."""
    if mode not in (EXTENSIVE, INVOLUTIVE):
        raise ValueError(f"unknown mode {mode!r}")
    tab = _normalize(L, maps)
    le, nm = L.leq, L.name
    for a in range(L.n):
        m = tab[a]
        sec = L.up(a)
        for x in sec:
            if not (0 <= m[x] < L.n and le[a][m[x]]):
                raise NotIntoSection(f"{nm(x)}^{nm(a)} leaves [{nm(a)},1]", (nm(a), nm(x)))
        for x in sec:
            for y in sec:
                if le[x][y] and not le[m[y]][m[x]]:
                    raise NotAntitone(
                        f"{nm(x)} <= {nm(y)} but {nm(y)}^{nm(a)} not <= {nm(x)}^{nm(a)}", (nm(a), nm(x), nm(y))
                    )
        for x in sec:
            if not le[x][m[m[x]]]:
                raise NotExtensive(f"{nm(x)}^{nm(a)}{nm(a)} not >= {nm(x)}", (nm(a), nm(x)))
        if mode == INVOLUTIVE:
            for x in sec:
                if m[m[x]] != x:
                    raise NotInvolutive(f"{nm(x)}^{nm(a)}{nm(a)} != {nm(x)}", (nm(a), nm(x)))
        if m[L.top] != a:
            raise UnitImageFails(f"1^{nm(a)} = {nm(m[L.top])}", (nm(a),))
    return SectionFamily(L, tab)


def implication_from_family(F: SectionFamily) -> Table:
    L = F.host
    n = L.n
    return tuple(tuple(F.maps[y][L.join[x][y]] for y in range(n)) for x in range(n))


def family_from_implication(L: FiniteLattice, impl) -> SectionFamily:
    impl = tuple(tuple(int(v) for v in row) for row in impl)
    for name, check in IMPLICATION_IDENTITIES.items():
        bad = check(L, impl)
        if bad is not None:
            raise IdentityFails(name, L.names(bad))
    n = L.n
    maps = [[impl[x][a] if L.leq[a][x] else OUTSIDE for x in range(n)] for a in range(n)]
    F = validate_family(L, maps, EXTENSIVE)
    if implication_from_family(F) != impl:
        raise IdentityFails("I0", None, "implication is not reproduced by its sectional maps")
    return F


def g_of_l(S: SectionedLattice) -> RRLGroupoid:
    """Groupoid of a lattice with involution ``~`` and extensive sectional maps::

        x -> y := (~x v ~y)^(~x)        x . y := ~(y -> ~x)
    """
    if S.tilde is None:
        raise PreconditionFails("the construction needs an antitone involution ~")
    L, t, F = S.lattice, S.tilde.map, S.family
    n, j = L.n, L.join
    arrow = tuple(tuple(F.maps[t[x]][j[t[x]][t[y]]] for y in range(n)) for x in range(n))
    odot = tuple(tuple(t[arrow[y][t[x]]] for y in range(n)) for x in range(n))
    return validate_rrl(L, odot, arrow)


def l_of_g(G: RRLGroupoid) -> SectionedLattice:
    """Inverse of :func:`g_of_l`: ``~x := x -> 0`` and ``x^a := x => a``."""
    rep = classify(G)
    if not rep.involutive:
        raise PreconditionFails("groupoid is not involutive", rep.witnesses.get("involutive"))
    if not rep.I3:
        raise PreconditionFails("derived implication fails I3", rep.witnesses.get("I3"))
    L = G.lattice
    tilde = validate_involution(L, [G.neg(x) for x in range(L.n)])
    imp = derived_implication(G)
    maps = [[imp[x][a] if L.leq[a][x] else OUTSIDE for x in range(L.n)] for a in range(L.n)]
    return SectionedLattice(L, tilde, validate_family(L, maps, EXTENSIVE))


def g_of_l_involutive(S: SectionedLattice) -> RRLGroupoid:
    """Same construction driven by sectional involutions alone, with ``~x := x^0``.

    Any stored ``tilde`` is ignored; the output is integral.
    """
    F = S.family
    if not F.is_involutive:
        bad = next(
            (a, x) for a in range(F.host.n) for x in F.host.up(a) if F.maps[a][F.maps[a][x]] != x
        )
        raise PreconditionFails("sectional maps are not involutions", F.host.names(bad))
    L = S.lattice
    tilde = validate_involution(L, F.maps[L.bottom])
    return g_of_l(SectionedLattice(L, tilde, F))


def l_of_g_involutive(G: RRLGroupoid) -> SectionedLattice:
    """Sectional involutions ``x^a := x => a`` of an integral involutive groupoid
    whose derived implication satisfies I3*. The result carries no ``tilde``."""
    rep = classify(G)
    for flag in ("integral", "involutive", "I3_star"):
        if not getattr(rep, flag):
            raise PreconditionFails(f"groupoid is not {flag}", rep.witnesses.get(flag))
    L = G.lattice
    imp = derived_implication(G)
    maps = [[imp[x][a] if L.leq[a][x] else OUTSIDE for x in range(L.n)] for a in range(L.n)]
    return SectionedLattice(L, None, validate_family(L, maps, INVOLUTIVE))


def pseudocomplement_in_section(L: FiniteLattice, a: int, x: int):
    """Greatest ``y`` in [a, 1] with ``y ^ x = a``, or None when there is no greatest one."""
    cands = [y for y in L.up(a) if L.meet[y][x] == a]
    tops = [y for y in cands if all(L.leq[z][y] for z in cands)]
    return tops[0] if tops else None


def sectional_pseudocomplement_family(L: FiniteLattice) -> SectionFamily:
    n = L.n
    maps = [[OUTSIDE] * n for _ in range(n)]
    for a in range(n):
        for x in L.up(a):
            p = pseudocomplement_in_section(L, a, x)
            if p is None:
                raise NotSectionallyPseudocomplemented(
                    f"{L.name(x)} has no pseudocomplement in [{L.name(a)},1]", (L.name(a), L.name(x))
                )
            maps[a][x] = p
    return validate_family(L, maps, EXTENSIVE)


def is_sectionally_pseudocomplemented(L: FiniteLattice) -> bool:
    return all(pseudocomplement_in_section(L, a, x) is not None for a in range(L.n) for x in L.up(a))


def p4_failure(L: FiniteLattice, imp: Table):
    """(P4) verbatim, right-hand side ``x ^ z``. It fails at x = y = z = 0 on
    every lattice with more than one element, since the left side is then 1."""
    j, m = L.join, L.meet
    return first_failure(
        L.n, 3,
        lambda x, y, z: m[imp[m[j[x][z]][j[y][z]]][z]][imp[m[j[x][z]][imp[y][z]]][z]] == m[x][z],
    )


def p4_implication_failure(L: FiniteLattice, imp: Table):
    """(P4) with right-hand side ``x => z``, the reading that sectionally
    pseudocomplemented lattices satisfy."""
    j, m = L.join, L.meet
    return first_failure(
        L.n, 3,
        lambda x, y, z: m[imp[m[j[x][z]][j[y][z]]][z]][imp[m[j[x][z]][imp[y][z]]][z]] == imp[x][z],
    )


def check_P1_P4(L: FiniteLattice, imp) -> dict:
    """Least counterexample (names) or None for each of P1..P4, plus ``P4_implication`` for the ``x => z`` reading."""
    imp = tuple(tuple(int(v) for v in row) for row in imp)
    one, j, m = L.top, L.join, L.meet
    n = L.n
    out = {
        "P1": first_failure(n, 1, lambda x: imp[x][x] == one and imp[one][x] == x),
        "P2": first_failure(n, 2, lambda x, y: imp[j[x][y]][y] == imp[x][y] and m[y][imp[x][y]] == y),
        "P3": first_failure(n, 2, lambda x, y: m[imp[imp[x][y]][y]][j[x][y]] == j[x][y]),
        "P4": p4_failure(L, imp),
        "P4_implication": p4_implication_failure(L, imp),
    }
    return {k: (None if v is None else L.names(v)) for k, v in out.items()}


def check_prop3(G: RRLGroupoid) -> Equivalence:
    """For involutive ``G``: P3 and P4 hold for ``=>`` iff the lattice is sectionally
    pseudocomplemented and ``x => y`` is the pseudocomplement of x in [y, 1] for x >= y."""
    rep = classify(G)
    L = G.lattice
    imp = derived_implication(G)
    ids = check_P1_P4(L, imp)
    left = ids["P3"] is None and ids["P4_implication"] is None
    spc = is_sectionally_pseudocomplemented(L)
    mismatch = None
    if spc:
        mismatch = next(
            ((y, x) for y in range(L.n) for x in L.up(y) if imp[x][y] != pseudocomplement_in_section(L, y, x)),
            None,
        )
    right = spc and mismatch is None
    witnesses = {k: v for k, v in ids.items() if v is not None and k in ("P3", "P4_implication")}
    if mismatch is not None:
        witnesses["pseudocomplement"] = L.names(mismatch)
    return Equivalence(
        "sectional_pseudocomplements", rep.involutive,
        {"P3 and P4": left, "sectionally pseudocomplemented with => as pseudocomplement": right},
        witnesses,
    )


def check_boolean_integral(L: FiniteLattice, tilde: Involution) -> dict:
    """Integrality of the groupoid built from ``tilde`` and the sectional
    pseudocomplements, next to Booleanness of ``L``.

    Integral forces Boolean. The converse needs ``tilde`` to be the Boolean
    complement: on the four-element Boolean lattice the involution fixing both
    atoms yields a non-integral groupoid.
    """
    G = g_of_l(SectionedLattice(L, tilde, sectional_pseudocomplement_family(L)))
    rep = classify(G)
    boolean = is_boolean(L)
    complement = all(L.meet[x][tilde.map[x]] == L.bottom for x in range(L.n))
    return {
        "integral": rep.integral,
        "boolean": boolean,
        "tilde_is_complement": complement,
        "integral_implies_boolean": (not rep.integral) or boolean,
        "boolean_complement_implies_integral": not (boolean and complement) or rep.integral,
    }


def i3_star_holds(L: FiniteLattice, F: SectionFamily) -> bool:
    return i3_star_failure(L, implication_from_family(F)) is None
