import json
from fractions import Fraction

from splitspin import Field, Matrix, QuadraticSpace, exceptional_cover, split_spin
from splitspin.serialize import (
    algebra_from_json,
    algebra_to_json,
    matrix_from_json,
    matrix_to_json,
    scalar_to_json,
    vector_to_json,
)

QQ = Field.rationals()
F7 = Field.prime(7)


def test_scalar_encoding():
    assert scalar_to_json(QQ.scalar(Fraction(-2, 4))) == "-1/2"
    assert scalar_to_json(F7.scalar(9)) == 2


def test_matrix_roundtrip():
    m = Matrix(QQ, [[1, Fraction(1, 2)], [Fraction(1, 2), 3]])
    doc = matrix_to_json(m)
    assert doc == [["1/1", "1/2"], ["1/2", "3/1"]]
    assert matrix_from_json(QQ, doc) == m


def test_field_roundtrip():
    for field in (QQ, F7):
        assert Field.from_json(field.to_json()) == field


def test_algebra_roundtrip_split():
    space = QuadraticSpace(Matrix(QQ, [[1, 2], [2, 1]]))
    algebra = split_spin(space, Fraction(5, 2))
    doc = algebra_to_json(algebra)
    json.dumps(doc)  # must be pure JSON
    rebuilt = algebra_from_json(doc)
    assert rebuilt.labels == algebra.labels
    assert rebuilt.table == algebra.table
    assert rebuilt.meta.kind == "split_spin"
    assert rebuilt.meta.alpha == algebra.meta.alpha


def test_algebra_roundtrip_cover():
    space = QuadraticSpace(Matrix(F7, [[1]]))
    algebra = exceptional_cover(space)
    rebuilt = algebra_from_json(algebra_to_json(algebra))
    assert rebuilt.table == algebra.table
    assert rebuilt.meta.space == space


def test_sparse_triplets_only_state_upper_pairs():
    algebra = split_spin(QuadraticSpace(Matrix(QQ, [[1]])), 3)
    doc = algebra_to_json(algebra)
    for i, j, _, _ in doc["structure_constants"]:
        assert i <= j


def test_vector_encoding():
    assert vector_to_json((QQ.one(), QQ.scalar(-2))) == ["1/1", "-2/1"]
