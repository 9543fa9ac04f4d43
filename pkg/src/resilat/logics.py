"""Kleene and Nelson algebras, and orthomodular lattices, reduced to groupoids."""

from __future__ import annotations

from dataclasses import dataclass

from .basic import BasicAlgebra, induced_lattice, validate_basic
from .errors import (
    ConstructionInvalid,
    AlgebraError,
    MissingRelativePseudocomplement,
    NelsonIdentityFails,
    NormalityFails,
    NotDistributive,
    NotOrthocomplemented,
    OrthomodularFails,
)
from .lattice import FiniteLattice, Involution, Table, distributivity_failure, first_failure, validate_involution
from .residuation import RRLGroupoid, derived_implication, validate_rrl


@dataclass(frozen=True)
class KleeneAlgebra:
    lattice: FiniteLattice
    tilde: Involution

    def operations(self):
        return self.lattice.operations() + [(1, self.tilde.map)]


@dataclass(frozen=True)
class NelsonAlgebra:
    kleene: KleeneAlgebra
    nelson_arrow: Table

    @property
    def lattice(self) -> FiniteLattice:
        return self.kleene.lattice

    def operations(self):
        return self.kleene.operations() + [(2, self.nelson_arrow)]


def check_kleene(L: FiniteLattice, tilde) -> KleeneAlgebra:
    if not isinstance(tilde, Involution):
        tilde = validate_involution(L, tilde)
    bad = distributivity_failure(L)
    if bad is not None:
        raise NotDistributive("lattice is not distributive", L.names(bad))
    t, m, j, le = tilde.map, L.meet, L.join, L.leq
    bad = first_failure(L.n, 2, lambda x, y: le[m[x][t[x]]][j[y][t[y]]])
    if bad is not None:
        raise NormalityFails("x ^ ~x <= y v ~y fails", L.names(bad))
    return KleeneAlgebra(L, tilde)


def relative_pseudocomplement(L: FiniteLattice, a: int, b: int):
    """Greatest ``x`` with ``a ^ x <= b``, or None if the candidates have no maximum."""
    cands = [x for x in range(L.n) if L.leq[L.meet[a][x]][b]]
    tops = [x for x in cands if all(L.leq[y][x] for y in cands)]
    return tops[0] if tops else None


def _nelson_arrow(K: KleeneAlgebra) -> Table:
    L, t = K.lattice, K.tilde.map
    n = L.n
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            r = relative_pseudocomplement(L, a, L.join[t[a]][b])
            if r is None:
                raise MissingRelativePseudocomplement(
                    f"{L.name(a)} |> (~{L.name(a)} v {L.name(b)}) does not exist", (L.name(a), L.name(b))
                )
            row.append(r)
        rows.append(tuple(row))
    return tuple(rows)


def build_nelson(K: KleeneAlgebra) -> NelsonAlgebra:
    """``a -> b := a |> (~a v b)``, then the Nelson identity ``(x ^ y) -> z = x -> (y -> z)``."""
    arrow = _nelson_arrow(K)
    L = K.lattice
    bad = first_failure(L.n, 3, lambda x, y, z: arrow[L.meet[x][y]][z] == arrow[x][arrow[y][z]])
    if bad is not None:
        raise NelsonIdentityFails("Nelson identity fails", L.names(bad))
    return NelsonAlgebra(K, arrow)


def validate_nelson(K: KleeneAlgebra, arrow) -> NelsonAlgebra:
    """Accept a stored arrow table only if it is the one the Kleene algebra forces."""
    N = build_nelson(K)
    arrow = tuple(tuple(int(v) for v in row) for row in arrow)
    if arrow != N.nelson_arrow:
        L = K.lattice
        bad = next((x, y) for x in range(L.n) for y in range(L.n) if arrow[x][y] != N.nelson_arrow[x][y])
        raise MissingRelativePseudocomplement("arrow differs from a |> (~a v b)", L.names(bad))
    return N


def nelson_to_residuated(N: NelsonAlgebra) -> RRLGroupoid:
    """Residuated lattice of a Nelson algebra::

        x => y := (x -> y) ^ (~y -> ~x)
        x * y  := ~(x -> ~y) v ~(y -> ~x)
    """
    L, t, ar = N.lattice, N.kleene.tilde.map, N.nelson_arrow
    n, m, j = L.n, L.meet, L.join
    imp = tuple(tuple(m[ar[x][y]][ar[t[y]][t[x]]] for y in range(n)) for x in range(n))
    star = tuple(tuple(j[t[ar[x][t[y]]]][t[ar[y][t[x]]]] for y in range(n)) for x in range(n))
    try:
        return validate_rrl(L, star, imp)
    except AlgebraError as exc:
        raise ConstructionInvalid(f"Nelson construction is not residuated: {exc}", exc.witness) from exc


def three_potency_failure(G: RRLGroupoid):
    imp = derived_implication(G)
    return first_failure(G.n, 2, lambda x, y: imp[x][imp[x][imp[x][y]]] == imp[x][imp[x][y]])


# orthomodular lattices

@dataclass
class OrthomodularReport:
    orthocomplemented: bool
    orthomodular: bool
    witness: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "orthocomplemented": self.orthocomplemented,
            "orthomodular": self.orthomodular,
            "witness": None if self.witness is None else list(self.witness),
        }


def check_orthomodular(L: FiniteLattice, tilde) -> OrthomodularReport:
    """Staged: involution, then complement law, then the orthomodular law."""
    try:
        t = tilde if isinstance(tilde, Involution) else validate_involution(L, tilde)
    except AlgebraError as exc:
        return OrthomodularReport(False, False, exc.witness)
    tm = t.map
    bad = first_failure(L.n, 1, lambda x: L.meet[x][tm[x]] == L.bottom)
    if bad is not None:
        return OrthomodularReport(False, False, L.names(bad))
    m, j, le = L.meet, L.join, L.leq
    bad = first_failure(L.n, 2, lambda x, y: not le[x][y] or j[x][m[tm[x]][y]] == y)
    if bad is not None:
        return OrthomodularReport(True, False, L.names(bad))
    return OrthomodularReport(True, True)


def require_orthomodular(L: FiniteLattice, tilde) -> Involution:
    rep = check_orthomodular(L, tilde)
    if not rep.orthocomplemented:
        raise NotOrthocomplemented("not an orthocomplementation", rep.witness)
    if not rep.orthomodular:
        raise OrthomodularFails("x <= y but x v (~x ^ y) != y", rep.witness)
    return tilde if isinstance(tilde, Involution) else validate_involution(L, tilde)


def oml_to_groupoid(L: FiniteLattice, tilde) -> RRLGroupoid:
    """``x -> y := (x ^ y) v ~x`` and ``x . y := (x v ~y) ^ y``."""
    t = require_orthomodular(L, tilde).map
    n, m, j = L.n, L.meet, L.join
    arrow = tuple(tuple(j[m[x][y]][t[x]] for y in range(n)) for x in range(n))
    odot = tuple(tuple(m[j[x][t[y]]][y] for y in range(n)) for x in range(n))
    return validate_rrl(L, odot, arrow)


def oml_to_basic(L: FiniteLattice, tilde) -> BasicAlgebra:
    """``x + y := (x ^ ~y) v y`` with negation ``~``."""
    t = require_orthomodular(L, tilde).map
    n, m, j = L.n, L.meet, L.join
    op = tuple(tuple(j[m[x][t[y]]][y] for y in range(n)) for x in range(n))
    return validate_basic(L.elements, op, t, L.bottom)


def omi_failure(A: BasicAlgebra):
    m = induced_lattice(A).meet
    op = A.oplus
    return first_failure(A.n, 2, lambda x, y: op[y][m[x][y]] == y)


def check_OMI(A: BasicAlgebra) -> bool:
    return omi_failure(A) is None


def omi_star_failure(G: RRLGroupoid):
    imp = derived_implication(G)
    L = G.lattice
    return first_failure(G.n, 2, lambda x, y: imp[L.join[G.neg(x)][G.neg(y)]][y] == y)


def check_OMI_star(G: RRLGroupoid) -> bool:
    return omi_star_failure(G) is None
