import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FAMILIES, gl11, graded_spaces, small_rationals, tensors
from superpybe import documents as docs
from superpybe import fixtures
from superpybe.graded import LinearMap
from superpybe.operators import BilinearForm
from superpybe.representation import coregular_rep, parity_reversed_rep, regular_rep, same_matrices
from superpybe.superalgebra import family_1dim1


def _envelope(kind, payload):
    return json.dumps({"kind": kind, "version": 1, "payload": payload})


BASIS = [{"name": "x", "parity": 0}, {"name": "y", "parity": 1}]


# -- round trips ------------------------------------------------------------------

@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("k", [F(1), F(-1), F(2), F(1, 2)])
def test_algebra_round_trip(family, k):
    A = family_1dim1(family, k)
    text = docs.serialize(docs.algebra_document(A))
    B = docs.to_algebra(docs.parse(text))
    assert B == A
    assert docs.serialize(docs.parse(text)) == text


def test_gl11_round_trip():
    G = gl11()
    B = docs.to_algebra(docs.parse(docs.serialize(docs.algebra_document(G))))
    assert B == G


@pytest.mark.parametrize("family", FAMILIES)
def test_representation_round_trip(family):
    A = family_1dim1(family, 1)
    for rep in (regular_rep(A), coregular_rep(A), parity_reversed_rep(coregular_rep(A))):
        text = docs.serialize(docs.representation_document(rep))
        back = docs.to_representation(docs.parse(text))
        assert back.module == rep.module
        assert same_matrices(back, rep)
        # without the embedded algebra the caller supplies it
        bare = docs.serialize(docs.representation_document(rep, embed_algebra=False))
        assert same_matrices(docs.to_representation(docs.parse(bare), A), rep)


def test_linear_map_and_form_round_trip():
    for T in (fixtures.t0(), fixtures.t1()):
        assert docs.to_linear_map(docs.parse(docs.serialize(docs.linear_map_document(T)))) == T
    B = BilinearForm(fixtures.ONE_ONE, [[0, F(-1, 3)], [F(1, 3), 0]])
    back = docs.to_form(docs.parse(docs.serialize(docs.form_document(B))))
    assert back.matrix == B.matrix


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_tensor_round_trip(data):
    V = data.draw(graded_spaces())
    r = data.draw(tensors(V))
    text = docs.serialize(docs.tensor_document(r))
    assert docs.to_tensor(docs.parse(text)) == r
    assert docs.serialize(docs.parse(text)) == text
    bare = docs.parse(docs.serialize(docs.tensor_document(r, with_basis=False)))
    assert docs.to_tensor(bare, V) == r


# -- canonical form ----------------------------------------------------------------------

def test_rationals_are_normalized():
    text = _envelope("linear_map", {"parity": 0, "domain": BASIS, "codomain": BASIS,
                                    "rows": [["2/4", 0], [0, "-6/3"]]})
    doc = docs.parse(text)
    assert doc.payload["rows"] == [["1/2", "0"], ["0", "-2"]]
    assert '"1/2"' in docs.serialize(doc)
    assert docs.to_linear_map(doc).matrix[0][0] == F(1, 2)


def test_serialization_is_sorted_and_stable():
    text = docs.serialize(docs.algebra_document(family_1dim1(2, 1)))
    raw = json.loads(text)
    assert list(raw) == sorted(raw)
    assert text.endswith("\n")
    assert docs.serialize(docs.parse(text)) == text


@given(small_rationals)
def test_scalar_round_trip(c):
    assert docs.parse_scalar(docs.format_scalar(c)) == c


# -- errors ------------------------------------------------------------------------------

def test_mixed_parity_tensor_reports_the_index_pair():
    text = _envelope("tensor", {"parity": 1, "basis": BASIS, "terms": [
        {"left": "x", "right": "y", "coeff": 1}, {"left": "y", "right": "y", "coeff": 1}]})
    with pytest.raises(docs.HomogeneityViolation) as info:
        docs.parse(text)
    assert "(1,1)" in str(info.value)


def test_mixed_parity_map_is_rejected():
    text = _envelope("linear_map", {"parity": 0, "domain": BASIS, "codomain": BASIS,
                                    "rows": [[1, 1], [0, 1]]})
    with pytest.raises(docs.HomogeneityViolation) as info:
        docs.parse(text)
    assert "(0,1)" in str(info.value)


def test_syntax_error_reports_position():
    with pytest.raises(docs.MalformedDocument) as info:
        docs.parse('{"kind": "tensor",\n  "version": 1,,}')
    assert "line 2" in str(info.value) and "column" in str(info.value)


@pytest.mark.parametrize("token", ["0.5", "1e3", "NaN", "Infinity"])
def test_floats_are_refused(token):
    text = ('{"kind": "form", "version": 1, "payload": {"basis": [{"name": "x", "parity": 0}], '
            f'"rows": [[{token}]]}}}}')
    with pytest.raises(docs.MalformedDocument):
        docs.parse(text)


def test_schema_errors_name_the_field():
    text = _envelope("tensor", {"parity": 2, "terms": []})
    with pytest.raises(docs.SchemaViolation) as info:
        docs.parse(text)
    assert "payload/parity" in str(info.value)
    with pytest.raises(docs.SchemaViolation) as info:
        docs.parse(_envelope("form", {"basis": BASIS, "rows": [["1/x", 0], [0, 0]]}))
    assert "payload/rows/0/0" in str(info.value)
    with pytest.raises(docs.SchemaViolation):
        docs.parse(json.dumps({"kind": "matrix", "version": 1, "payload": {}}))
    with pytest.raises(docs.SchemaViolation):
        docs.parse(json.dumps({"kind": "form", "version": 2, "payload": {"rows": []}}))


def test_unknown_basis_names_and_shapes_are_rejected():
    with pytest.raises(docs.SchemaViolation) as info:
        docs.parse(_envelope("tensor", {"parity": 0, "basis": BASIS,
                                        "terms": [{"left": "z", "right": "x", "coeff": 1}]}))
    assert "'z'" in str(info.value)
    with pytest.raises(docs.SchemaViolation):
        docs.parse(_envelope("form", {"basis": BASIS, "rows": [[1, 0]]}))
    with pytest.raises(docs.SchemaViolation):
        docs.parse(_envelope("form", {"basis": BASIS, "rows": [["1/0", 0], [0, 0]]}))


def test_kind_mismatch_is_rejected():
    doc = docs.linear_map_document(fixtures.t0())
    with pytest.raises(docs.DocumentError):
        docs.to_algebra(doc)


def test_odd_map_document_keeps_parity():
    T = LinearMap(fixtures.ONE_ONE, fixtures.ONE_ONE, 1, [[0, F(2, 3)], [5, 0]])
    back = docs.to_linear_map(docs.parse(docs.serialize(docs.linear_map_document(T))))
    assert back.parity == 1 and back == T
