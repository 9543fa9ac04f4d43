"""Right-residuated l-groupoids given by operation tables.

A groupoid here is a bounded lattice with two extra binary tables, ``odot`` and
``arrow``, tied together by right adjointness::

    x odot y <= z   iff   x <= y arrow z

Each table determines the other, so most checks only need one of them; both
are stored so that property checks are plain table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AdjointnessFails, NotResiduated, TheoremViolation, UnitFails
from .lattice import FiniteLattice, Table, first_failure, freeze


@dataclass(frozen=True)
class RRLGroupoid:
    lattice: FiniteLattice
    odot: Table
    arrow: Table

    @property
    def n(self) -> int:
        return self.lattice.n

    def neg(self, x: int) -> int:
        return self.arrow[x][self.lattice.bottom]

    def operations(self):
        L = self.lattice
        return [(2, L.join), (2, L.meet), (2, self.odot), (2, self.arrow)]


def _check_shape(L: FiniteLattice, t, what: str) -> Table:
    n = L.n
    t = freeze(t)
    if len(t) != n or any(len(row) != n for row in t) or any(not 0 <= v < n for row in t for v in row):
        raise ValueError(f"{what} table must be total on the {n}-element carrier")
    return t


def validate_rrl(L: FiniteLattice, odot, arrow) -> RRLGroupoid:
    odot = _check_shape(L, odot, "odot")
    arrow = _check_shape(L, arrow, "arrow")
    one, le = L.top, L.leq
    for x in range(L.n):
        if odot[one][x] != x:
            raise UnitFails(f"1 . {L.name(x)} = {L.name(odot[one][x])}", (L.name(x),))
    bad = first_failure(L.n, 3, lambda x, y, z: le[odot[x][y]][z] == le[x][arrow[y][z]])
    if bad is not None:
        x, y, z = L.names(bad)
        raise AdjointnessFails(f"right adjointness fails at x={x}, y={y}, z={z}", (x, y, z))
    return RRLGroupoid(L, odot, arrow)


def _join_all(L: FiniteLattice, xs) -> int:
    acc = L.bottom
    for x in xs:
        acc = L.join[acc][x]
    return acc


def _meet_all(L: FiniteLattice, xs) -> int:
    acc = L.top
    for x in xs:
        acc = L.meet[acc][x]
    return acc


def derive_arrow_from_odot(L: FiniteLattice, odot) -> Table:
    """``y -> z`` as the join of all ``x`` with ``x . y <= z``."""
    odot = _check_shape(L, odot, "odot")
    n, le = L.n, L.leq
    arrow = freeze(
        [[_join_all(L, (x for x in range(n) if le[odot[x][y]][z])) for z in range(n)] for y in range(n)]
    )
    try:
        validate_rrl(L, odot, arrow)
    except AdjointnessFails as exc:
        raise NotResiduated(f"odot has no right residual: {exc}", exc.witness) from exc
    return arrow


def derive_odot_from_arrow(L: FiniteLattice, arrow) -> Table:
    """``x . y`` as the meet of all ``z`` with ``x <= y -> z``."""
    arrow = _check_shape(L, arrow, "arrow")
    n, le = L.n, L.leq
    odot = freeze(
        [[_meet_all(L, (z for z in range(n) if le[x][arrow[y][z]])) for y in range(n)] for x in range(n)]
    )
    try:
        validate_rrl(L, odot, arrow)
    except (AdjointnessFails, UnitFails) as exc:
        raise NotResiduated(f"arrow is not a right residual: {exc}", exc.witness) from exc
    return odot


def negation(G: RRLGroupoid, x: int) -> int:
    return G.neg(x)


def derived_implication(G: RRLGroupoid) -> Table:
    """``x => y := neg(y) -> neg(x)``."""
    n = G.n
    neg = [G.neg(x) for x in range(n)]
    return tuple(tuple(G.arrow[neg[y]][neg[x]] for y in range(n)) for x in range(n))


# Identities on an implication-like table over a lattice. Each returns the least
# failing tuple or None.

def i0_failure(L: FiniteLattice, imp: Table):
    one, j = L.top, L.join
    bad = first_failure(L.n, 2, lambda x, y: imp[j[x][y]][y] == imp[x][y])
    if bad is not None:
        return bad
    bad = first_failure(L.n, 1, lambda x: imp[x][x] == one and imp[one][x] == x)
    return bad


def i1_failure(L: FiniteLattice, imp: Table):
    return first_failure(L.n, 2, lambda x, y: L.meet[imp[x][y]][y] == y)


def i2_failure(L: FiniteLattice, imp: Table):
    le = L.leq
    return first_failure(L.n, 3, lambda x, y, z: not le[x][y] or le[imp[y][z]][imp[x][z]])


def i3_failure(L: FiniteLattice, imp: Table):
    j, m = L.join, L.meet
    return first_failure(L.n, 2, lambda x, y: m[imp[imp[x][y]][y]][j[x][y]] == j[x][y])


def i3_star_failure(L: FiniteLattice, imp: Table):
    return first_failure(L.n, 2, lambda x, y: imp[imp[x][y]][y] == L.join[x][y])


def lukasiewicz_failure(L: FiniteLattice, imp: Table):
    return first_failure(L.n, 2, lambda x, y: imp[imp[x][y]][y] == imp[imp[y][x]][x])


IMPLICATION_IDENTITIES = {
    "I0": i0_failure,
    "I1": i1_failure,
    "I2": i2_failure,
    "I3": i3_failure,
}


@dataclass
class PropertyReport:
    """Exhaustive truth values of the structural identities of one groupoid.

    ``lemma1_items`` holds six entries; the sixth is ``None`` (not applicable)
    unless the double negation law holds. ``witnesses`` maps each false flag to
    its least counterexample, as element names.
    """

    integral: bool
    commutative: bool
    associative: bool
    double_negation: bool
    involutive: bool
    condition_C: bool
    divisibility: bool
    I0: bool
    I1: bool
    I2: bool
    I3: bool
    I3_star: bool
    identity_D: bool
    lukasiewicz_identity: bool
    lukasiewicz_type: bool
    odot_formula: bool
    lemma1_items: tuple
    witnesses: dict = field(default_factory=dict)

    FLAGS = (
        "integral", "commutative", "associative", "double_negation", "involutive",
        "condition_C", "divisibility", "I0", "I1", "I2", "I3", "I3_star",
        "identity_D", "lukasiewicz_identity", "lukasiewicz_type", "odot_formula",
    )

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in self.FLAGS}

    def as_dict(self) -> dict:
        out = self.flags()
        out["lemma1_items"] = list(self.lemma1_items)
        out["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return out


def _failures(G: RRLGroupoid) -> dict:
    """Least counterexample (index tuple) or None for every tracked identity."""
    L = G.lattice
    n, le, j, m = L.n, L.leq, L.join, L.meet
    zero, one = L.bottom, L.top
    od, ar = G.odot, G.arrow
    neg = [G.neg(x) for x in range(n)]
    imp = derived_implication(G)
    f = {}
    f["integral"] = first_failure(n, 1, lambda x: od[one][x] == x and od[x][one] == x)
    f["commutative"] = first_failure(n, 2, lambda x, y: od[x][y] == od[y][x])
    f["associative"] = first_failure(n, 3, lambda x, y, z: od[od[x][y]][z] == od[x][od[y][z]])
    f["double_negation"] = first_failure(n, 1, lambda x: neg[neg[x]] == x)
    f["antitone_negation"] = first_failure(n, 2, lambda x, y: not le[x][y] or le[neg[y]][neg[x]])
    f["involutive"] = f["double_negation"] or f["antitone_negation"]
    f["condition_C"] = first_failure(
        n, 3, lambda x, y, z: le[z][od[x][y]] == le[ar[y][neg[x]]][neg[z]]
    )
    f["divisibility"] = first_failure(n, 2, lambda x, y: od[ar[x][y]][x] == m[x][y])
    f["I0"] = i0_failure(L, imp)
    f["I1"] = i1_failure(L, imp)
    f["I2"] = i2_failure(L, imp)
    f["I3"] = i3_failure(L, imp)
    f["I3_star"] = i3_star_failure(L, imp)
    f["identity_D"] = first_failure(n, 3, lambda x, y, z: imp[od[x][y]][z] == imp[x][imp[y][z]])
    f["lukasiewicz_identity"] = lukasiewicz_failure(L, imp)
    f["lukasiewicz_type"] = f["integral"] or f["involutive"] or f["lukasiewicz_identity"]
    f["odot_formula"] = first_failure(n, 2, lambda x, y: od[x][y] == neg[ar[y][neg[x]]])
    # basic properties every valid groupoid has, reported one by one
    f["L1.i"] = None if neg[zero] == one else (zero,)
    f["L1.ii"] = first_failure(n, 2, lambda a, b: le[a][b] == (ar[a][b] == one))
    f["L1.iii"] = first_failure(n, 1, lambda a: od[a][zero] == zero and od[zero][a] == zero)
    f["L1.iv"] = first_failure(
        n, 3, lambda x, y, z: not le[y][z] or (le[od[y][x]][od[z][x]] and le[ar[x][y]][ar[x][z]])
    )
    f["L1.v"] = first_failure(n, 3, lambda x, y, z: le[od[x][y]][y] and ar[y][z] == ar[y][m[y][z]])
    f["L1.vi"] = None if neg[one] == zero else (one,)
    return f


def classify(G: RRLGroupoid) -> PropertyReport:
    f = _failures(G)
    dn = f["double_negation"] is None
    lemma1 = tuple(f[f"L1.{k}"] is None for k in ("i", "ii", "iii", "iv", "v")) + (
        (f["L1.vi"] is None) if dn else None,
    )
    if not dn:
        f["L1.vi"] = None
    names = G.lattice.names
    flags = {name: f[name] is None for name in PropertyReport.FLAGS}
    witnesses = {k: names(v) for k, v in f.items() if v is not None}
    return PropertyReport(**flags, lemma1_items=lemma1, witnesses=witnesses)


@dataclass
class Equivalence:
    """One equivalence of properties evaluated on a concrete instance.

    ``applicable`` is False when its hypotheses fail; in that case the
    sides are still reported but never count as a disagreement.
    """

    name: str
    applicable: bool
    sides: dict
    witnesses: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return not self.applicable or len(set(self.sides.values())) == 1

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "sides": dict(self.sides),
            "agree": self.agree,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


@dataclass
class BiconditionalReport:
    checks: list

    @property
    def violations(self) -> list:
        return [c for c in self.checks if not c.agree]

    def __getitem__(self, name: str) -> Equivalence:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {"checks": [c.as_dict() for c in self.checks], "violations": len(self.violations)}


def check_biconditionals(G: RRLGroupoid, strict: bool = False) -> BiconditionalReport:
    f = _failures(G)
    L = G.lattice
    n, one, zero = L.n, L.top, L.bottom
    ok = {k: v is None for k, v in f.items()}
    imp = derived_implication(G)
    neg = [G.neg(x) for x in range(n)]
    names = L.names

    def w(*keys):
        return {k: names(f[k]) for k in keys if f[k] is not None}

    checks = []
    checks.append(Equivalence(
        "dn_and_C", True,
        {"DN and C": ok["double_negation"] and ok["condition_C"],
         "involutive and odot formula": ok["involutive"] and ok["odot_formula"]},
        w("double_negation", "condition_C", "involutive", "odot_formula"),
    ))
    checks.append(Equivalence(
        "involutive_odot_forms", ok["involutive"],
        {"I3": ok["I3"], "odot formula": ok["odot_formula"], "C": ok["condition_C"]},
        w("I3", "odot_formula", "condition_C"),
    ))
    t2_guard = ok["involutive"] and ok["odot_formula"]
    neg_agree = first_failure(n, 1, lambda x: imp[x][zero] == G.arrow[x][zero])
    imp_agree = first_failure(n, 2, lambda x, y: imp[x][y] == G.arrow[x][y])
    checks.append(Equivalence(
        "integral_negations", t2_guard,
        {"integral": ok["integral"], "x=>0 == x->0": neg_agree is None},
        {**w("integral"), **({"x=>0 == x->0": names(neg_agree)} if neg_agree else {})},
    ))
    checks.append(Equivalence(
        "commutative_arrows", t2_guard,
        {"commutative": ok["commutative"], "=> == ->": imp_agree is None},
        {**w("commutative"), **({"=> == ->": names(imp_agree)} if imp_agree else {})},
    ))
    checks.append(Equivalence(
        "associative_D", t2_guard,
        {"associative": ok["associative"], "D": ok["identity_D"]},
        w("associative", "identity_D"),
    ))
    checks.append(Equivalence(
        "associative_residuated_lattice", ok["involutive"] and ok["I3"],
        {"associative": ok["associative"],
         "integral commutative residuated lattice": ok["associative"] and ok["commutative"] and ok["integral"]},
        w("associative", "commutative", "integral"),
    ))
    checks.append(Equivalence(
        "lukasiewicz_type_forms", True,
        {"Lukasiewicz identity and involutive": ok["lukasiewicz_identity"] and ok["involutive"],
         "I3* and involutive": ok["I3_star"] and ok["involutive"],
         "DN, divisibility and C": ok["double_negation"] and ok["divisibility"] and ok["condition_C"]},
        w("lukasiewicz_identity", "involutive", "I3_star", "double_negation", "divisibility", "condition_C"),
    ))
    if ok["involutive"]:
        order = first_failure(n, 2, lambda x, y: L.leq[x][y] == (imp[x][y] == one))
        checks.append(Equivalence(
            "implication_identities", True,
            {"I0, I1, I2 and x<=y iff x=>y=1": ok["I0"] and ok["I1"] and ok["I2"] and order is None,
             "expected": True},
            {**w("I0", "I1", "I2"), **({"order": names(order)} if order else {})},
        ))
    else:
        checks.append(Equivalence("implication_identities", False, {"I0, I1, I2 and x<=y iff x=>y=1": False, "expected": True}))
    rl_guard = ok["integral"] and ok["commutative"] and ok["associative"] and ok["double_negation"]
    c3 = residuated_section_failure(G) if rl_guard else None
    checks.append(Equivalence(
        "residuated_lattice_sections", rl_guard,
        {"=> == -> and x->a antitone extensive on [a,1]": rl_guard and c3 is None, "expected": True},
        {"sections": names(c3)} if c3 else {},
    ))
    report = BiconditionalReport(checks)
    if strict and report.violations:
        bad = report.violations[0]
        raise TheoremViolation(f"{bad.name} sides disagree: {bad.sides}", bad.witnesses)
    return report


def residuated_section_failure(G: RRLGroupoid):
    """Least witness against: ``=>`` equals ``->`` and ``x |-> x -> a`` is antitone
    and extensive on every section ``[a, 1]``."""
    L = G.lattice
    n, le, ar = L.n, L.leq, G.arrow
    imp = derived_implication(G)
    bad = first_failure(n, 2, lambda x, y: imp[x][y] == ar[x][y])
    if bad is not None:
        return bad
    bad = first_failure(
        n, 3, lambda a, x, y: not (le[a][x] and le[x][y]) or (le[a][ar[x][a]] and le[ar[y][a]][ar[x][a]])
    )
    if bad is not None:
        return bad
    return first_failure(n, 2, lambda a, x: not le[a][x] or le[x][ar[ar[x][a]][a]])
