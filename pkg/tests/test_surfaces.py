import random

import pytest

from stratacheck.curves import riemann_hurwitz_branch
from stratacheck.errors import ToolkitError
from stratacheck.surfaces import (
    ClassBasis,
    DivisorClass,
    adjunction_genus,
    bidegree_class,
    divisor,
    intersect,
)

SQUARE = ClassBasis(("f1", "f2", "diag"), ((0, 1, 1), (1, 0, 1), (1, 1, -6)))


def test_pairing_examples():
    diag = divisor(SQUARE, diag=1)
    f1 = divisor(SQUARE, f1=1)
    f2 = divisor(SQUARE, f2=1)
    assert intersect(diag, diag) == -6
    assert intersect(f1, f1) == 0
    assert intersect(f2, f2) == 0
    assert intersect(f1, f2) == 1
    assert intersect(diag, f1) == 1


def test_adjoint_chain_reproduces_the_reference_numbers():
    tangency = bidegree_class(SQUARE, 1, 2, 6) - 2 * divisor(SQUARE, diag=1)
    canonical = bidegree_class(SQUARE, 1, 1, 6)
    assert tangency.coefficients == (12, 6, -2)
    assert canonical.coefficients == (6, 6, 0)
    k_deg = intersect(canonical + tangency, tangency)
    assert k_deg == 132
    assert adjunction_genus(k_deg) == 67
    assert riemann_hurwitz_branch(67, 4, 4) == 108


def test_zero_diagonal_pairing_cannot_reproduce_132():
    flat = ClassBasis(("f1", "f2", "diag"), ((0, 1, 0), (1, 0, 0), (0, 0, -6)))
    tangency = bidegree_class(flat, 1, 2, 6) - 2 * divisor(flat, diag=1)
    canonical = bidegree_class(flat, 1, 1, 6)
    assert intersect(canonical + tangency, tangency) == 228


def test_intersect_symmetric_and_bilinear():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 4)
        pairing = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                pairing[i][j] = pairing[j][i] = rng.randint(-5, 5)
        basis = ClassBasis(tuple(f"c{i}" for i in range(n)), tuple(map(tuple, pairing)))
        vec = lambda: DivisorClass(basis, tuple(rng.randint(-6, 6) for _ in range(n)))
        a, b, c = vec(), vec(), vec()
        s = rng.randint(-3, 3)
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
        assert intersect(s * a, b) == s * intersect(a, b)


def test_adjunction_examples():
    assert adjunction_genus(132) == 67
    assert adjunction_genus(-2) == 0
    assert adjunction_genus(0) == 1
    with pytest.raises(ToolkitError):
        adjunction_genus(7)
    with pytest.raises(ToolkitError):
        adjunction_genus(-4)


def test_bidegree_examples():
    assert bidegree_class(SQUARE, 1, 2, 6).coefficients == (12, 6, 0)
    assert bidegree_class(SQUARE, 0, 0, 6).coefficients == (0, 0, 0)
    assert bidegree_class(SQUARE, 1, 1, 6).coefficients == (6, 6, 0)
    with pytest.raises(ToolkitError):
        bidegree_class(SQUARE, -1, 0, 6)


def test_basis_mismatch_rejected():
    other = ClassBasis(("f1", "f2"), ((0, 1), (1, 0)))
    with pytest.raises(ToolkitError):
        intersect(divisor(SQUARE, f1=1), divisor(other, f1=1))


def test_basis_validation():
    with pytest.raises(ToolkitError):
        ClassBasis(("a", "b"), ((0, 1), (2, 0)))
    with pytest.raises(ToolkitError):
        ClassBasis(("a", "a"), ((0, 0), (0, 0)))
    with pytest.raises(ToolkitError):
        divisor(SQUARE, nope=1)
