"""Built-in example structures."""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .basic import BasicAlgebra, mv_chain
from .errors import UnknownKind
from .lattice import FiniteLattice, Involution, build_lattice, validate_involution
from .logics import NelsonAlgebra, build_nelson, check_kleene
from .residuation import RRLGroupoid, derive_arrow_from_odot, validate_rrl
from .sections import OUTSIDE, SectionedLattice, sectional_pseudocomplement_family, validate_family


def chain(names: Sequence[str]) -> FiniteLattice:
    return build_lattice(names, zip(names, names[1:]))


def boolean_lattice(k: int) -> FiniteLattice:
    """Subsets of ``{0..k-1}``; names list the members (``0`` and ``1`` for the bounds)."""
    subsets = sorted(
        (frozenset(s) for r in range(k + 1) for s in itertools.combinations(range(k), r)),
        key=lambda s: (len(s), sorted(s)),
    )
    letters = "abcdefgh"

    def name(s):
        if not s:
            return "0"
        if len(s) == k:
            return "1"
        return "".join(letters[i] for i in sorted(s))

    names = [name(s) for s in subsets]
    pairs = [(name(s), name(t)) for s in subsets for t in subsets if s < t and len(t) == len(s) + 1]
    return build_lattice(names, pairs)


def n5() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"], [("0", "b"), ("b", "c"), ("c", "1"), ("0", "a"), ("a", "1")])


def m3() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"], [(x, y) for x in "0" for y in "abc"] + [(y, "1") for y in "abc"])


def mo2() -> FiniteLattice:
    atoms = ["a", "a'", "b", "b'"]
    return build_lattice(["0", *atoms, "1"], [("0", x) for x in atoms] + [(x, "1") for x in atoms])


def o6() -> FiniteLattice:
    return build_lattice(
        ["0", "a", "b", "b'", "a'", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")],
    )


def involution_by_names(L: FiniteLattice, pairs: dict[str, str]) -> Involution:
    m = list(range(L.n))
    for x, y in pairs.items():
        m[L.index(x)] = L.index(y)
        m[L.index(y)] = L.index(x)
    return validate_involution(L, m)


def reversal(L: FiniteLattice) -> Involution:
    """The order reversal of a chain."""
    order = sorted(range(L.n), key=lambda x: sum(L.leq[y][x] for y in range(L.n)))
    m = [0] * L.n
    for i, x in enumerate(order):
        m[x] = order[-1 - i]
    return validate_involution(L, m)


def complement(L: FiniteLattice) -> Involution:
    """Complementation of a Boolean lattice."""
    m = [
        next(y for y in range(L.n) if L.join[x][y] == L.top and L.meet[x][y] == L.bottom) for x in range(L.n)
    ]
    return validate_involution(L, m)


def meet_groupoid(L: FiniteLattice) -> RRLGroupoid:
    """``.`` is the lattice meet, residuated by the relative pseudocomplement."""
    return validate_rrl(L, L.meet, derive_arrow_from_odot(L, L.meet))


def c2() -> RRLGroupoid:
    return meet_groupoid(chain(["0", "1"]))


def godel3() -> RRLGroupoid:
    return meet_groupoid(chain(["0", "m", "1"]))


def boolean4() -> RRLGroupoid:
    return meet_groupoid(boolean_lattice(2))


def boolean8() -> RRLGroupoid:
    return meet_groupoid(boolean_lattice(3))


def lukasiewicz3() -> BasicAlgebra:
    return mv_chain(3, ["0", "m", "1"])


def lukasiewicz4() -> BasicAlgebra:
    return mv_chain(4, ["0", "a", "b", "1"])


def n5_involution() -> SectionedLattice:
    """N5 with its antitone involution and sectional pseudocomplements."""
    L = n5()
    tilde = involution_by_names(L, {"0": "1", "b": "c"})
    return SectionedLattice(L, tilde, sectional_pseudocomplement_family(L))


def mo2_sectioned() -> SectionedLattice:
    """MO2 with orthocomplement ``~`` and sectional maps ``x^a := ~x v a``."""
    L = mo2()
    tilde = involution_by_names(L, {"0": "1", "a": "a'", "b": "b'"})
    maps = [[L.join[tilde(x)][a] if L.leq[a][x] else OUTSIDE for x in range(L.n)] for a in range(L.n)]
    return SectionedLattice(L, tilde, validate_family(L, maps))


def o6_involution() -> Involution:
    L = o6()
    return involution_by_names(L, {"0": "1", "a": "a'", "b": "b'"})


def m3_lattice() -> FiniteLattice:
    return m3()


def nelson3() -> NelsonAlgebra:
    L = chain(["0", "m", "1"])
    return build_nelson(check_kleene(L, reversal(L)))


BUILTINS: dict[str, tuple[str, Callable]] = {
    "c2": ("rrl-groupoid", c2),
    "lukasiewicz-3": ("basic-algebra", lukasiewicz3),
    "lukasiewicz-4": ("basic-algebra", lukasiewicz4),
    "godel-3": ("rrl-groupoid", godel3),
    "boolean-4": ("rrl-groupoid", boolean4),
    "boolean-8": ("rrl-groupoid", boolean8),
    "n5-involution": ("sectioned-lattice", n5_involution),
    "mo2": ("sectioned-lattice", mo2_sectioned),
    "o6": ("lattice", o6_involution),
    "m3": ("lattice", m3_lattice),
    "nelson-3": ("nelson", nelson3),
}


def builtin(name: str):
    """``(kind, structure)`` for a named built-in example."""
    if name not in BUILTINS:
        raise UnknownKind(f"no built-in example {name!r}; choose from {', '.join(BUILTINS)}", (name,))
    kind, make = BUILTINS[name]
    return kind, make()
