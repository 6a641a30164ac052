import json

import pytest
from importlib import resources

from hhtwist.algebra import (AlgebraError, parse_algebra,
                             quantum_plane_algebra, truncated_poly,
                             twisted_tensor_algebra)
from hhtwist.fields import (FieldSpec, RationalField, RationalFunctionField,
                            Twist)

Q = RationalField()


def test_truncated_poly():
    A = truncated_poly(Q, "x", 3)
    x = A.index["x"]
    x2 = A.index["x^2"]
    assert A.multiply(A.monomial(x), A.monomial(x)) == A.monomial(x2)
    assert A.multiply(A.monomial(x), A.monomial(x2)) == {}
    A.verify()


def test_quantum_plane_relations():
    fld = RationalFunctionField()
    alg, R, S, tw = quantum_plane_algebra(fld, fld.q())
    x, y = alg.index["x"], alg.index["y"]
    assert alg.multiply(alg.monomial(x), alg.monomial(x)) == {}
    assert alg.multiply(alg.monomial(y), alg.monomial(y)) == {}
    # xy = -q^{-1} yx, i.e. xy + q yx = 0
    xy = alg.multiply(alg.monomial(x), alg.monomial(y))
    yx = alg.multiply(alg.monomial(y), alg.monomial(x))
    lhs = dict(xy)
    for k, c in yx.items():
        v = lhs.get(k, fld.zero()) + fld.q() * c
        if v:
            lhs[k] = v
        else:
            lhs.pop(k)
    assert lhs == {}


def test_twisted_commutation():
    """(1 (x) s)(r (x) 1) = t^<r|s> (r (x) 1)(1 (x) s) for homogeneous r, s."""
    fld = RationalFunctionField()
    R = truncated_poly(fld, "x", 2)
    S = truncated_poly(fld, "y", 2)
    tw = Twist([[fld.q()]])
    A = twisted_tensor_algebra(R, S, tw)
    x, y = A.index["x"], A.index["y"]
    lhs = A.multiply(A.monomial(y), A.monomial(x))
    rhs = A.multiply(A.monomial(x), A.monomial(y))
    factor = tw.eval((1,), (1,))
    assert lhs == {k: factor * c for k, c in rhs.items()}


def test_builtin_equals_builder():
    data = resources.files("hhtwist.data").joinpath(
        "lambda_q_generic.json").read_text()
    alg, fld = parse_algebra(data)
    fld2 = RationalFunctionField()
    alg2, _, _, _ = quantum_plane_algebra(fld2, fld2.q())
    assert alg.labels == alg2.labels
    assert alg.degrees == alg2.degrees
    assert alg.unit_idx == alg2.unit_idx
    assert {k: {m: repr(c) for m, c in v.items()}
            for k, v in alg.table.items()} == \
           {k: {m: repr(c) for m, c in v.items()}
            for k, v in alg2.table.items()}


def test_to_json_round_trip():
    fld = RationalFunctionField()
    alg, _, _, _ = quantum_plane_algebra(fld, fld.q())
    data = alg.to_json(field_spec=FieldSpec("Qq"))
    alg2, _ = parse_algebra(json.dumps(data))
    assert alg2.labels == alg.labels and alg2.table == alg.table


def _base_presentation():
    fld = RationalFunctionField()
    alg, _, _, _ = quantum_plane_algebra(fld, fld.q())
    return alg.to_json(field_spec=FieldSpec("Qq"))


def test_missing_unit_rejected():
    data = _base_presentation()
    data["unit"] = "nope"
    with pytest.raises(AlgebraError, match="unit"):
        parse_algebra(json.dumps(data))


def test_missing_field_rejected():
    data = _base_presentation()
    del data["field"]
    with pytest.raises(AlgebraError, match="field"):
        parse_algebra(json.dumps(data))


def test_non_associative_rejected():
    # (a*a)*b = b but a*(a*b) = a*a = 1
    data = {
        "format": 1, "name": "bad", "grading_rank": 1,
        "field": {"kind": "Q"},
        "basis": [{"label": "1", "degree": [0]},
                  {"label": "a", "degree": [0]},
                  {"label": "b", "degree": [0]}],
        "unit": "1",
        "products": [
            {"left": "a", "right": "a", "terms": [{"coeff": "1", "basis": "1"}]},
            {"left": "a", "right": "b", "terms": [{"coeff": "1", "basis": "a"}]},
            {"left": "b", "right": "a", "terms": [{"coeff": "1", "basis": "b"}]},
            {"left": "b", "right": "b", "terms": [{"coeff": "1", "basis": "1"}]},
        ],
    }
    with pytest.raises(AlgebraError, match=r"\(a, a, b\)"):
        parse_algebra(json.dumps(data))


def test_inhomogeneous_product_rejected():
    data = _base_presentation()
    for prod in data["products"]:
        if prod["left"] == "x" and prod["right"] == "y":
            prod["terms"] = [{"coeff": "1", "basis": "x"}]
    with pytest.raises(AlgebraError, match="homogeneous"):
        parse_algebra(json.dumps(data))


def test_unknown_format_rejected():
    data = _base_presentation()
    data["format"] = 99
    with pytest.raises(AlgebraError, match="format"):
        parse_algebra(json.dumps(data))
