import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattices_up_to
from oracles import lattice_classes
from resilat.corpus import boolean_lattice, chain, involution_by_names, m3, n5
from resilat.errors import CycleError, NoBounds, NotALattice, NotAntitone, NotInvolutive
from resilat.lattice import (
    FiniteLattice,
    are_isomorphic,
    build_lattice,
    canonical_form,
    is_boolean,
    is_distributive,
    lattice_from_leq,
    section,
    section_lattice,
    validate_involution,
)


def test_two_chain_tables():
    L = build_lattice(["0", "1"], [("0", "1")])
    assert L.join == ((0, 1), (1, 1))
    assert L.meet == ((0, 0), (0, 1))
    assert (L.bottom, L.top) == (0, 1)


def test_pentagon_from_generating_pairs():
    L = build_lattice(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])
    assert not is_distributive(L)
    assert are_isomorphic(L, n5()) is not None
    assert are_isomorphic(L, m3()) is None


def test_missing_top_is_no_bounds():
    with pytest.raises(NoBounds):
        build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b")])


def test_cycle_rejected():
    with pytest.raises(CycleError) as e:
        build_lattice(["0", "a", "b", "1"], [("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")])
    assert set(e.value.witness) == {"a", "b"}


def test_two_maximal_upper_bounds_is_not_a_lattice():
    # 0 < a, b < c, d < 1 : a and b have two minimal upper bounds
    pairs = [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]
    with pytest.raises(NotALattice) as e:
        build_lattice(["0", "a", "b", "c", "d", "1"], pairs)
    assert e.value.witness == ("a", "b")


def test_bad_names():
    with pytest.raises(ValueError):
        build_lattice(["0", "0"], [])
    with pytest.raises(ValueError):
        build_lattice(["0", "1"], [("0", "x")])


def test_involutions():
    L2 = chain(["0", "1"])
    assert validate_involution(L2, [1, 0]).map == (1, 0)
    N = n5()
    t = involution_by_names(N, {"0": "1", "b": "c"})
    assert t(N.index("a")) == N.index("a")
    L3 = chain(["0", "m", "1"])
    with pytest.raises(NotAntitone):
        validate_involution(L3, [0, 1, 2])
    with pytest.raises(NotInvolutive):
        validate_involution(L3, [1, 2, 0])


def test_sections():
    N = n5()
    assert N.names(section(N, N.index("b")).members) == ("b", "c", "1")
    S, emb = section_lattice(N, N.bottom)
    assert S.leq == N.leq and emb == tuple(range(N.n))


def test_identity_isomorphism():
    L = chain(["0", "1"])
    assert are_isomorphic(L, L) == (0, 1)


def test_boolean_and_distributive():
    assert is_boolean(boolean_lattice(2)) and is_boolean(boolean_lattice(3))
    assert is_distributive(chain(["0", "a", "b", "1"])) and not is_boolean(chain(["0", "a", "1"]))
    assert not is_distributive(m3())


def test_lattice_laws_on_enumerated():
    for L in lattices_up_to(6):
        r = range(L.n)
        for x, y in itertools.product(r, r):
            assert L.join[x][y] == L.join[y][x]
            assert L.meet[x][L.join[x][y]] == x
            assert L.join[x][L.meet[x][y]] == x


# canonical forms agree with isomorphism, checked against a brute-force oracle

def test_canonical_form_matches_oracle_classes():
    for n in range(1, 6):
        lats = [L for L in lattices_up_to(5) if L.n == n]
        assert len({canonical_form(L) for L in lats}) == len(lattice_classes(n))
        for A, B in itertools.combinations(lats, 2):
            assert are_isomorphic(A, B) is None


def _permuted(L: FiniteLattice, perm) -> FiniteLattice:
    n = L.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    leq = [[L.leq[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
    return lattice_from_leq([f"p{i}" for i in range(n)], leq)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_canonical_form_is_relabeling_invariant(data):
    L = data.draw(st.sampled_from(lattices_up_to(6)))
    perm = data.draw(st.permutations(range(L.n)))
    P = _permuted(L, perm)
    assert canonical_form(P) == canonical_form(L)
    iso = are_isomorphic(L, P)
    assert iso is not None
    assert all(L.leq[x][y] == P.leq[iso[x]][iso[y]] for x in range(L.n) for y in range(L.n))
