"""Basic algebras ``(A, +, neg, 0)`` and their implication reducts.

``1`` is never stored: it is always ``neg(0)`` (for reducts, ``0 => 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AlgebraError,
    AxiomFails,
    IdentityFails,
    InternalInconsistency,
    InvalidSize,
    NotLukasiewiczType,
    NotReconstructible,
)
from .lattice import FiniteLattice, Table, Unary, first_failure, freeze, lattice_from_leq
from .residuation import RRLGroupoid, classify, validate_rrl
from .sections import INVOLUTIVE, OUTSIDE, SectionedLattice, validate_family


@dataclass(frozen=True)
class BasicAlgebra:
    elements: tuple[str, ...]
    oplus: Table
    neg: Unary
    zero: int

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def one(self) -> int:
        return self.neg[self.zero]

    def names(self, idxs):
        return tuple(self.elements[i] for i in idxs)

    def operations(self):
        return [(2, self.oplus), (1, self.neg)]


@dataclass(frozen=True)
class ImplicationReduct:
    elements: tuple[str, ...]
    imp: Table
    zero: int

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def one(self) -> int:
        return self.imp[self.zero][self.zero]

    def names(self, idxs):
        return tuple(self.elements[i] for i in idxs)

    def operations(self):
        return [(2, self.imp)]


def _axiom_failures(n, op, ng, zero):
    one = ng[zero]
    return {
        "BA1": first_failure(n, 1, lambda x: op[x][zero] == x),
        "BA2": first_failure(n, 1, lambda x: ng[ng[x]] == x),
        "BA3": first_failure(n, 2, lambda x, y: op[ng[op[ng[x]][y]]][y] == op[ng[op[ng[y]][x]]][x]),
        "BA4": first_failure(
            n, 3, lambda x, y, z: op[ng[op[ng[op[ng[op[x][y]]][y]]][z]]][op[x][z]] == one
        ),
    }


def validate_basic(elements: Sequence[str], oplus, neg, zero: int) -> BasicAlgebra:
    names = tuple(elements)
    n = len(names)
    op = freeze(oplus)
    ng = tuple(int(v) for v in neg)
    if len(op) != n or any(len(r) != n for r in op) or len(ng) != n or not 0 <= zero < n:
        raise ValueError("basic algebra tables must be total on the carrier")
    if any(not 0 <= v < n for r in op for v in r) or any(not 0 <= v < n for v in ng):
        raise ValueError("table entry outside the carrier")
    # BA2 first: the other axioms only make sense for an involutive negation
    fails = _axiom_failures(n, op, ng, zero)
    for axiom in ("BA2", "BA1", "BA3", "BA4"):
        if fails[axiom] is not None:
            raise AxiomFails(axiom, tuple(names[i] for i in fails[axiom]))
    return BasicAlgebra(names, op, ng, zero)


def _join_table(A: BasicAlgebra) -> Table:
    op, ng, n = A.oplus, A.neg, A.n
    return tuple(tuple(op[ng[op[ng[x]][y]]][y] for y in range(n)) for x in range(n))


def induced_lattice(A: BasicAlgebra) -> FiniteLattice:
    """Lattice of ``x <= y iff neg(x) + y = 1``, checked against the term joins and meets."""
    n, op, ng, one = A.n, A.oplus, A.neg, A.one
    leq = [[op[ng[x]][y] == one for y in range(n)] for x in range(n)]
    try:
        L = lattice_from_leq(A.elements, leq)
    except AlgebraError as exc:
        raise InternalInconsistency(f"induced relation is not a lattice order: {exc}", exc.witness) from exc
    jt = _join_table(A)
    mt = tuple(tuple(ng[jt[ng[x]][ng[y]]] for y in range(n)) for x in range(n))
    if L.join != jt or L.meet != mt or L.bottom != A.zero or L.top != one:
        raise InternalInconsistency("term operations disagree with the induced order")
    return L


def a_of_l(S: SectionedLattice) -> BasicAlgebra:
    """``neg x := x^0`` and ``x + y := (x^0 v y)^y`` from sectional involutions."""
    F, L = S.family, S.lattice
    if not F.is_involutive:
        raise AxiomFails("BA2", None, "sectional maps are not involutions")
    n, j, m = L.n, L.join, F.maps
    ng = m[L.bottom]
    op = tuple(tuple(m[y][j[ng[x]][y]] for y in range(n)) for x in range(n))
    return validate_basic(L.elements, op, ng, L.bottom)


def l_of_a(A: BasicAlgebra) -> SectionedLattice:
    """Induced lattice with sectional involutions ``x^a := neg(x) + a``."""
    L = induced_lattice(A)
    n = L.n
    maps = [[A.oplus[A.neg[x]][a] if L.leq[a][x] else OUTSIDE for x in range(n)] for a in range(n)]
    return SectionedLattice(L, None, validate_family(L, maps, INVOLUTIVE))


def g_of_a(A: BasicAlgebra) -> RRLGroupoid:
    """``x . y := neg(neg x + neg y)`` and ``x -> y := y + neg x``."""
    L = induced_lattice(A)
    n, op, ng = A.n, A.oplus, A.neg
    odot = tuple(tuple(ng[op[ng[x]][ng[y]]] for y in range(n)) for x in range(n))
    arrow = tuple(tuple(op[y][ng[x]] for y in range(n)) for x in range(n))
    return validate_rrl(L, odot, arrow)


def a_of_g(G: RRLGroupoid) -> BasicAlgebra:
    """``neg x := x -> 0`` and ``x + y := neg(neg x . neg y)``; needs Lukasiewicz type."""
    rep = classify(G)
    if not rep.lukasiewicz_type:
        which = next(f for f in ("integral", "involutive", "lukasiewicz_identity") if not getattr(rep, f))
        raise NotLukasiewiczType(f"groupoid is not of Lukasiewicz type ({which} fails)", rep.witnesses.get(which))
    n = G.n
    ng = tuple(G.neg(x) for x in range(n))
    op = tuple(tuple(ng[G.odot[ng[x]][ng[y]]] for y in range(n)) for x in range(n))
    return validate_basic(G.lattice.elements, op, ng, G.lattice.bottom)


@dataclass
class LawTransferReport:
    oplus_associative: bool
    odot_associative: bool
    oplus_commutative: bool
    odot_commutative: bool

    @property
    def agree(self) -> bool:
        return (self.oplus_associative == self.odot_associative
                and self.oplus_commutative == self.odot_commutative)

    def as_dict(self) -> dict:
        return {**self.__dict__, "agree": self.agree}


def check_remark4(A: BasicAlgebra) -> LawTransferReport:
    n, op, ng = A.n, A.oplus, A.neg
    od = [[ng[op[ng[x]][ng[y]]] for y in range(n)] for x in range(n)]
    return LawTransferReport(
        oplus_associative=first_failure(n, 3, lambda x, y, z: op[op[x][y]][z] == op[x][op[y][z]]) is None,
        odot_associative=first_failure(n, 3, lambda x, y, z: od[od[x][y]][z] == od[x][od[y][z]]) is None,
        oplus_commutative=first_failure(n, 2, lambda x, y: op[x][y] == op[y][x]) is None,
        odot_commutative=first_failure(n, 2, lambda x, y: od[x][y] == od[y][x]) is None,
    )


def is_mv(A: BasicAlgebra) -> bool:
    op = A.oplus
    return first_failure(A.n, 3, lambda x, y, z: op[op[x][y]][z] == op[x][op[y][z]]) is None


def mv_chain(n: int, names: Sequence[str] | None = None) -> BasicAlgebra:
    """The n-element Lukasiewicz chain ``e_i + e_j = e_min(i+j, n-1)``, ``neg e_i = e_(n-1-i)``."""
    if n < 2:
        raise InvalidSize(f"a Lukasiewicz chain needs at least 2 elements, got {n}")
    if names is None:
        names = [f"e{i}" for i in range(n)]
    op = tuple(tuple(min(i + j, n - 1) for j in range(n)) for i in range(n))
    return validate_basic(names, op, tuple(n - 1 - i for i in range(n)), 0)


# implication reducts

REDUCT_IDENTITIES = ("I0*", "I1*", "L", "I4", "I5")


def implication_reduct(A: BasicAlgebra) -> ImplicationReduct:
    n, op, ng = A.n, A.oplus, A.neg
    imp = tuple(tuple(op[ng[x]][y] for y in range(n)) for x in range(n))
    return ImplicationReduct(A.elements, imp, A.zero)


def _reduct_failures(n: int, imp: Table, zero: int) -> dict:
    one = imp[zero][zero]
    return {
        "I0*": first_failure(n, 1, lambda x: imp[x][x] == one and imp[x][one] == one and imp[one][x] == x),
        "I1*": first_failure(n, 2, lambda x, y: imp[y][imp[x][y]] == one),
        "L": first_failure(n, 2, lambda x, y: imp[imp[x][y]][y] == imp[imp[y][x]][x]),
        "I4": first_failure(n, 3, lambda x, y, z: imp[imp[imp[imp[x][y]][y]][z]][imp[x][z]] == one),
        "I5": first_failure(n, 1, lambda x: imp[zero][x] == one),
        # consequences derived from the five above
        "triple": first_failure(n, 2, lambda x, y: imp[imp[imp[x][y]][y]][y] == imp[x][y]),
    }


def check_reduct_identities(R: ImplicationReduct) -> dict:
    """Least counterexample (names) or None per identity, plus the derived
    ``((x=>y)=>y)=>y = x=>y`` law (key ``triple``) and antitonicity (``antitone``)."""
    f = _reduct_failures(R.n, R.imp, R.zero)
    imp, one = R.imp, R.one
    f["antitone"] = first_failure(
        R.n, 3, lambda x, y, z: imp[x][y] != one or imp[imp[y][z]][imp[x][z]] == one
    )
    return {k: (None if v is None else R.names(v)) for k, v in f.items()}


def validate_reduct(elements: Sequence[str], imp, zero: int) -> ImplicationReduct:
    names = tuple(elements)
    imp = freeze(imp)
    n = len(names)
    if len(imp) != n or any(len(r) != n for r in imp) or any(not 0 <= v < n for r in imp for v in r):
        raise ValueError("implication table must be total on the carrier")
    f = _reduct_failures(n, imp, zero)
    for name in REDUCT_IDENTITIES:
        if f[name] is not None:
            raise IdentityFails(name, tuple(names[i] for i in f[name]))
    return ImplicationReduct(names, imp, zero)


def reduct_order(R: ImplicationReduct) -> FiniteLattice:
    """Order ``x <= y iff x => y = 1``; its join must be ``(x => y) => y``."""
    n, imp, one = R.n, R.imp, R.one
    L = lattice_from_leq(R.elements, [[imp[x][y] == one for y in range(n)] for x in range(n)])
    jt = tuple(tuple(imp[imp[x][y]][y] for y in range(n)) for x in range(n))
    if L.join != jt:
        raise InternalInconsistency("(x=>y)=>y is not the join of the reduct order")
    return L


def b_of_reduct(R: ImplicationReduct) -> BasicAlgebra:
    """``neg x := x => 0`` and ``x + y := neg(x) => y``."""
    validate_reduct(R.elements, R.imp, R.zero)
    n, imp = R.n, R.imp
    ng = tuple(imp[x][R.zero] for x in range(n))
    op = tuple(tuple(imp[ng[x]][y] for y in range(n)) for x in range(n))
    try:
        return validate_basic(R.elements, op, ng, R.zero)
    except AxiomFails as exc:
        raise NotReconstructible(str(exc), exc.witness) from exc
