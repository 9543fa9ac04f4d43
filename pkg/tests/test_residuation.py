import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import groupoids_up_to
from oracles import chain_groupoids
from resilat.corpus import c2, chain, godel3
from resilat.errors import AdjointnessFails, NotResiduated, TheoremViolation, UnitFails
from resilat.residuation import (
    PropertyReport,
    check_biconditionals,
    classify,
    derive_arrow_from_odot,
    derive_odot_from_arrow,
    derived_implication,
    negation,
    validate_rrl,
)

L3 = chain(["0", "m", "1"])
# Lukasiewicz tables from the closed formulas max(0, x+y-2) and min(2, 2-x+y)
LUK_ODOT = tuple(tuple(max(0, x + y - 2) for y in range(3)) for x in range(3))
LUK_ARROW = tuple(tuple(min(2, 2 - x + y) for y in range(3)) for x in range(3))
GODEL_ARROW = tuple(tuple(2 if x <= y else y for y in range(3)) for x in range(3))


def test_two_chain_classical():
    L = chain(["0", "1"])
    G = validate_rrl(L, L.meet, [[1, 1], [0, 1]])
    assert G == c2()


def test_lukasiewicz_three_chain_valid():
    G = validate_rrl(L3, LUK_ODOT, LUK_ARROW)
    assert G.arrow[1][0] == 1  # m -> 0 = m
    assert G.odot[1][1] == 0


def test_adjointness_witness_is_least_failing_triple():
    with pytest.raises(AdjointnessFails) as e:
        validate_rrl(L3, L3.meet, [[2] * 3] * 3)
    # (m, m, 0) precedes (1, 1, 0) in index order and already fails
    assert e.value.witness == ("m", "m", "0")


def test_unit_fails():
    bad = [list(r) for r in L3.meet]
    bad[2][1] = 0
    with pytest.raises(UnitFails):
        validate_rrl(L3, bad, LUK_ARROW)


def test_derivations():
    L = chain(["0", "1"])
    assert derive_arrow_from_odot(L, L.meet) == ((1, 1), (0, 1))
    assert derive_odot_from_arrow(L, ((1, 1), (0, 1))) == L.meet
    assert derive_arrow_from_odot(L3, LUK_ODOT) == LUK_ARROW
    assert derive_odot_from_arrow(L3, GODEL_ARROW) == L3.meet


def test_derivation_failures():
    od = [list(r) for r in L3.meet]
    od[1][1] = 2
    with pytest.raises(NotResiduated):
        derive_arrow_from_odot(L3, od)
    with pytest.raises(NotResiduated):
        derive_odot_from_arrow(chain(["0", "1"]), [[1, 1], [1, 1]])


def test_negation_and_derived_implication():
    luk = validate_rrl(L3, LUK_ODOT, LUK_ARROW)
    assert negation(luk, 1) == 1
    assert derived_implication(luk) == luk.arrow
    assert all(derived_implication(luk)[x][x] == 2 for x in range(3))
    G = godel3()
    assert negation(G, 1) == 0 and negation(G, 0) == 2
    imp = derived_implication(G)
    assert imp[1][0] == 0 and G.arrow[1][0] == 0
    assert imp[0][1] == 2


def test_classify_examples(corpus):
    luk = classify(corpus["lukasiewicz-3"])
    for flag in ("integral", "commutative", "associative", "involutive", "condition_C", "divisibility",
                 "lukasiewicz_type"):
        assert getattr(luk, flag), flag
    g = classify(godel3())
    assert not g.involutive and g.divisibility and g.integral
    assert g.witnesses["double_negation"] == ("m",)
    assert g.lemma1_items[5] is None
    mo2 = classify(corpus["mo2"])
    assert mo2.lukasiewicz_type and not mo2.commutative
    assert mo2.witnesses["commutative"] == ("a", "b")


def test_mo2_non_commutativity_pair(corpus):
    G = corpus["mo2"]
    a, b = G.lattice.index("a"), G.lattice.index("b")
    assert (G.odot[a][b], G.odot[b][a]) == (b, a)


def test_biconditionals_on_examples(corpus):
    for name in ("lukasiewicz-3", "godel-3", "mo2", "boolean-4"):
        assert check_biconditionals(corpus[name], strict=True).violations == []
    p1 = check_biconditionals(godel3())["dn_and_C"]
    assert set(p1.sides.values()) == {False}
    c2_check = check_biconditionals(corpus["mo2"])["associative_residuated_lattice"]
    assert c2_check.sides["associative"] is False and c2_check.agree


def test_strict_mode_raises_on_disagreement():
    from resilat.residuation import BiconditionalReport, Equivalence

    rep = BiconditionalReport([Equivalence("X", True, {"a": True, "b": False}, {})])
    assert [e.name for e in rep.violations] == ["X"]
    assert Equivalence("Y", False, {"a": True, "b": False}, {}).agree


def test_report_shape(corpus):
    rep = classify(corpus["boolean-4"])
    d = rep.as_dict()
    assert list(rep.flags()) == list(PropertyReport.FLAGS)
    assert len(d["lemma1_items"]) == 6


def test_chain_groupoids_match_oracle():
    for n in (2, 3):
        L = chain([str(i) for i in range(n)])
        from resilat.enumeration import enumerate_rrl_groupoids

        mine = sorted(G.odot for G in enumerate_rrl_groupoids(L, up_to_iso=False))
        assert mine == sorted(chain_groupoids(n))


# universal properties over every enumerated groupoid of order <= 4

def test_basic_properties_on_enumerated():
    for G in groupoids_up_to(4):
        rep = classify(G)
        assert all(rep.lemma1_items[:5])
        assert rep.lemma1_items[5] in ((True,) if rep.double_negation else (None,))
        assert derive_arrow_from_odot(G.lattice, G.odot) == G.arrow
        assert derive_odot_from_arrow(G.lattice, G.arrow) == G.odot


def test_involutive_implication_identities_on_enumerated():
    for G in groupoids_up_to(4):
        rep = classify(G)
        if rep.involutive:
            assert rep.I0 and rep.I1 and rep.I2
            imp = derived_implication(G)
            L = G.lattice
            assert all(L.leq[x][y] == (imp[x][y] == L.top) for x in range(L.n) for y in range(L.n))


def test_biconditionals_never_disagree_on_enumerated():
    for G in groupoids_up_to(4):
        assert check_biconditionals(G).violations == []


def _relabel(G, perm):
    from resilat.lattice import lattice_from_leq, relabel_table

    L, n = G.lattice, G.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    leq = [[L.leq[inv[i]][inv[j]] for j in range(n)] for i in range(n)]
    P = lattice_from_leq([L.name(inv[i]) for i in range(n)], leq)
    return validate_rrl(P, relabel_table(G.odot, perm), relabel_table(G.arrow, perm))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_flags_survive_relabeling(data):
    G = data.draw(st.sampled_from(groupoids_up_to(4)))
    perm = data.draw(st.permutations(range(G.n)))
    assert classify(_relabel(G, perm)).flags() == classify(G).flags()
