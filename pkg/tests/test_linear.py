"""Exact linear algebra: LinComb, rank, kernels, complements."""

import random
from fractions import Fraction

import pytest

from trioperad.linear import (
    LinComb,
    RatMatrix,
    as_lincomb,
    kernel_basis,
    orthogonal_complement,
    rank,
)


def naive_dense_rank(M):
    """Independent referee: plain Gaussian elimination over Fraction."""
    M = [[Fraction(v) for v in row] for row in M]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


# ---------------------------------------------------------------- LinComb


def test_lincomb_basics():
    v = LinComb([("a", 1), ("b", 2), ("a", -1)])
    assert v.coeff("a") == 0
    assert v.coeff("b") == 2
    assert len(v) == 1
    assert not LinComb()
    assert LinComb().is_zero()


def test_lincomb_arithmetic():
    u = LinComb([("a", 1), ("b", 1)])
    v = LinComb([("b", -1), ("c", 3)])
    assert (u + v).coeff("b") == 0
    assert (u - v).coeff("c") == -3
    assert (-u).coeff("a") == -1
    assert (2 * u).coeff("b") == 2
    assert 0 * u == LinComb()
    assert u + LinComb() == u


def test_lincomb_map_basis_collects():
    v = LinComb([("a", 1), ("b", -1)])
    assert v.map_basis(lambda _: "x") == LinComb()


def test_lincomb_str():
    assert str(LinComb()) == "0"
    assert str(LinComb([("a", 1), ("b", -2)])) == "a - 2*b"


def test_as_lincomb():
    assert as_lincomb("a") == LinComb.single("a")
    v = LinComb.single("a")
    assert as_lincomb(v) is v


# ------------------------------------------------------------------- rank


def test_rank_known_matrices():
    assert rank([]) == 0
    assert rank([{0: 1}, {1: 1}, {2: 1}]) == 3
    assert rank([{0: 1, 1: 1}, {0: 2, 1: 2}]) == 1
    assert rank([[1, 2], [2, 4], [1, 0]]) == 2
    assert rank([[Fraction(1, 2), Fraction(1, 3)]]) == 1


def test_rank_fill_in_regression():
    # pivot row has support the target row lacks; fill-in must survive
    rows = [{0: 1, 1: 1, 2: 1}, {0: 1}, {1: 1, 2: 1}]
    assert rank(rows) == 2


def test_rank_fuzz_against_independent_referee():
    random.seed(7)
    for _ in range(500):
        m = random.randint(1, 10)
        n = random.randint(1, 10)
        rows = []
        for _ in range(m):
            row = {
                j: Fraction(random.randint(-4, 4), random.randint(1, 3))
                for j in range(n)
                if random.random() < 0.5
            }
            rows.append({k: v for k, v in row.items() if v})
        dense = [[rows[i].get(j, Fraction(0)) for j in range(n)] for i in range(m)]
        assert rank(rows) == naive_dense_rank(dense)


# -------------------------------------------------------- rref and kernel


def test_rref_pivots():
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    red, pivots = m.rref()
    assert pivots == [0, 2]
    assert m.rank() == 2


def test_kernel_basis_property():
    random.seed(11)
    for _ in range(50):
        m = random.randint(1, 6)
        n = random.randint(1, 6)
        rows = [[random.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        mat = RatMatrix.from_rows(rows)
        ker = kernel_basis(mat)
        assert len(ker) == n - mat.rank()
        for vec in ker:
            for row in rows:
                assert sum(Fraction(row[j]) * vec[j] for j in range(n)) == 0


# ----------------------------------------------------------- complements


def test_orthogonal_complement_identity_gram():
    eye3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    comp = orthogonal_complement([[1, 0, 0]], eye3)
    assert comp.pairing_nondegenerate
    assert len(comp.basis) == 2
    for vec in comp.basis:
        assert vec[0] == 0


def test_orthogonal_complement_degenerate_gram_flagged():
    comp = orthogonal_complement([[1, 0]], [[0, 0], [0, 0]])
    assert not comp.pairing_nondegenerate
    assert len(comp.basis) == 2  # everything pairs to zero


def test_orthogonal_complement_empty_span():
    comp = orthogonal_complement([], [[1, 0], [0, 1]])
    assert len(comp.basis) == 2
