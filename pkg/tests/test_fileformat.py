import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import groupoids_up_to
from resilat.basic import implication_reduct
from resilat.corpus import BUILTINS, builtin, lukasiewicz3
from resilat.enumeration import enumerate_basic_algebras, enumerate_lattices
from resilat.errors import AxiomFails, NotResiduated, ParseError, UnknownKind
from resilat.fileformat import AlgebraFile, kind_of, parse, serialize, to_doc
from resilat.logics import check_kleene

L3_DOC = {
    "kind": "rrl-groupoid",
    "elements": ["0", "m", "1"],
    "leq": [["0", "m"], ["m", "1"]],
    "ops": {"odot": [["0", "0", "0"], ["0", "0", "m"], ["0", "m", "1"]]},
}


def _text(doc):
    return json.dumps(doc)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtins_round_trip_through_text(name):
    kind, s = builtin(name)
    text = serialize(AlgebraFile(kind, s))
    f = parse(text)
    assert f.kind == kind and f.structure == s
    assert serialize(f) == text


def test_missing_arrow_is_derived():
    G = parse(_text(L3_DOC)).structure
    assert G.arrow == ((2, 2, 2), (1, 2, 2), (0, 1, 2))
    doc = dict(L3_DOC, ops={"arrow": [["1", "1", "1"], ["m", "1", "1"], ["0", "m", "1"]]})
    assert parse(_text(doc)).structure == G


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("{not json")
    with pytest.raises(ParseError):
        parse(_text({"kind": "lattice", "leq": []}))
    with pytest.raises(UnknownKind):
        parse(_text(dict(L3_DOC, kind="quasigroup")))
    with pytest.raises(ParseError) as e:
        parse(_text(dict(L3_DOC, elements=["0", "m", "1"], leq=[["0", "q"]])))
    assert e.value.witness == ("q",)
    with pytest.raises(ParseError):
        parse(_text(dict(L3_DOC, elements=["0", "0", "1"])))
    with pytest.raises(ParseError):
        parse(_text({"kind": "basic-algebra", "elements": ["0", "1"], "ops": {"oplus": [["0", "1"], ["1", "1"]]}}))


def test_domain_errors_surface():
    bad = dict(L3_DOC, ops={"odot": [["0", "0", "0"], ["0", "1", "m"], ["0", "m", "1"]]})
    with pytest.raises(NotResiduated):
        parse(_text(bad))
    doc = {
        "kind": "basic-algebra",
        "elements": ["0", "m", "1"],
        "ops": {"oplus": [["0", "m", "1"], ["m", "1", "1"], ["1", "1", "1"]], "neg": ["1", "0", "0"]},
        "constants": {"zero": "0"},
    }
    with pytest.raises(AxiomFails):
        parse(_text(doc))


def test_kind_override_and_leq_check():
    kind, A = builtin("lukasiewicz-3")
    doc = to_doc(kind, A)
    doc["leq"] = [["0", "m"], ["m", "1"]]
    assert parse(_text(doc)).structure == A
    doc["leq"] = [["m", "0"], ["0", "1"]]
    with pytest.raises(ParseError):
        parse(_text(doc))


def test_reduct_and_kleene_documents():
    R = implication_reduct(lukasiewicz3())
    assert parse(serialize(AlgebraFile("implication-reduct", R))).structure == R
    _, N = builtin("nelson-3")
    K = N.kleene
    assert parse(serialize(AlgebraFile("kleene", K))).structure == check_kleene(K.lattice, K.tilde)
    doc = to_doc("nelson", N)
    del doc["ops"]["arrow"]
    assert parse(_text(doc)).structure == N


def test_provenance_survives():
    kind, s = builtin("c2")
    f = parse(serialize(AlgebraFile(kind, s, {"constructions": []})))
    assert f.provenance == {"constructions": []}


def test_tables_are_one_row_per_line():
    text = serialize(AlgebraFile(*builtin("lukasiewicz-3")))
    assert '      ["0", "m", "1"],' in text


_POOL = (
    list(groupoids_up_to(3))
    + [A for n in (2, 3, 4) for A in enumerate_basic_algebras(n)]
    + [L for n in range(1, 6) for L in enumerate_lattices(n)]
)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_POOL))
def test_serialize_then_parse_is_identity(s):
    f = AlgebraFile(kind_of(s), s)
    again = parse(serialize(f))
    assert again.structure == s
