import math

import pytest

from pinchcalc.core import DomainError, TorusKnot, normalize
from pinchcalc.invariants import signature_recursive
from pinchcalc.oracle import (
    CAP_ENV,
    OracleUnavailable,
    determinant,
    oracle_cap,
    oracle_signature,
    seifert_matrix,
    symmetric_signature,
)


def test_trefoil_anchor():
    v = seifert_matrix(TorusKnot(2, 3))
    assert v.dim == 2
    assert symmetric_signature(v.symmetrized()).signature == -2


@pytest.mark.parametrize("pair, sigma", [((2, 5), -4), ((2, 7), -6), ((5, 3), -8), ((5, 6), -16), ((6, 5), -16)])
def test_oracle_values(pair, sigma):
    assert oracle_signature(normalize(*pair)) == sigma


@pytest.mark.parametrize(
    "matrix, sig",
    [
        ([[-2, 1], [1, -2]], -2),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[2, 0], [0, -3]], 0),
        ([[0, 1], [1, 0]], 0),
        ([[0, 0], [0, 5]], 1),
    ],
)
def test_symmetric_signature(matrix, sig):
    assert symmetric_signature(matrix).signature == sig


def test_signature_counts_zeros():
    r = symmetric_signature([[0, 0], [0, 5]])
    assert (r.positives, r.negatives, r.zeros, r.dim) == (1, 0, 1, 2)
    assert r.determinant == 0


def test_rejects_bad_matrices():
    with pytest.raises(DomainError):
        symmetric_signature([[1, 2], [3, 4]])
    with pytest.raises(DomainError):
        symmetric_signature([[1, 2]])


def test_determinant():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[2, 1], [4, 3]]) == 2
    assert determinant([[1, 2], [2, 4]]) == 0


@pytest.mark.parametrize("p, q", [(p, q) for p in range(2, 9) for q in range(p + 1, 14) if math.gcd(p, q) == 1 and (p - 1) * (q - 1) <= 60])
def test_matrix_properties(p, q):
    k = normalize(p, q)
    v = seifert_matrix(k)
    assert v.dim == (p - 1) * (q - 1)
    assert abs(determinant(v.antisymmetrized())) == 1
    sym = symmetric_signature(v.symmetrized())
    assert sym.determinant % 2 == 1
    assert sym.signature == signature_recursive(k)


def test_mirror_and_unknot():
    assert oracle_signature(normalize(-3, 4)) == 6
    assert oracle_signature(TorusKnot(3, 1)) == 0
    with pytest.raises(DomainError):
        seifert_matrix(TorusKnot(3, 1))


def test_cap(monkeypatch):
    with pytest.raises(OracleUnavailable):
        oracle_signature(TorusKnot(4, 9), cap=10)
    monkeypatch.setenv(CAP_ENV, "5")
    assert oracle_cap() == 5
    with pytest.raises(OracleUnavailable):
        seifert_matrix(TorusKnot(2, 7))
    monkeypatch.delenv(CAP_ENV)
    assert oracle_cap() == 400
