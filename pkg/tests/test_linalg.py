import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from walledbrauer.linalg import Element, SparseMatrix, as_rational, kernel, rank, solve_in_span
from oracles import hand_rank


def test_rank_examples():
    assert rank(SparseMatrix([{}, {}, {}], columns=["a", "b"])) == 0
    assert rank([{k: 1} for k in "abcd"]) == 4
    assert rank([{"a": 1, "b": 1}, {"a": 1, "b": -1}, {"a": 2}]) == 2


def test_solve_examples():
    basis = [Element({"a": 1}), Element({"b": 1})]
    assert solve_in_span(Element(), basis) == [0, 0]
    assert solve_in_span(Element({"a": 3}), basis) == [3, 0]
    assert solve_in_span(Element({"c": 1}), basis) is None


def test_kernel_examples():
    assert kernel([{k: 1} for k in range(4)]) == []
    (v,) = kernel(SparseMatrix([{0: 1, 1: 1}]))
    assert v[0] == -v[1] != 0
    assert len(kernel([{"a": 1, "b": 1}, {"a": 2, "b": 2}])) == 1


def test_as_rational():
    assert as_rational("7/3") == Fraction(7, 3)
    assert as_rational("4/2") == 2 and isinstance(as_rational("4/2"), int)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_element_has_no_zero_terms():
    x = Element({"a": 1, "b": 2}) - Element({"a": 1})
    assert x.terms == {"b": 2}
    assert (x - x).is_zero()


entries = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=8, max_cols=8):
    nr = draw(st.integers(0, max_rows))
    nc = draw(st.integers(1, max_cols))
    return [draw(st.lists(entries, min_size=nc, max_size=nc)) for _ in range(nr)], nc


def _sparse(rows, nc):
    return SparseMatrix([{j: v for j, v in enumerate(r) if v} for r in rows], columns=range(nc))


@given(matrices())
def test_rank_nullity(data):
    rows, nc = data
    M = _sparse(rows, nc)
    ker = kernel(M)
    assert rank(M) + len(ker) == nc
    for v in ker:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


@given(matrices())
def test_rank_matches_hand_elimination(data):
    rows, nc = data
    assert rank(_sparse(rows, nc)) == hand_rank(rows)


@given(matrices(max_rows=6), st.lists(entries, min_size=6, max_size=6))
def test_solve_reexpands(data, coefs):
    rows, nc = data
    if not rows:
        return
    basis = [Element({j: v for j, v in enumerate(r)}) for r in rows]
    target = Element()
    for c, b in zip(coefs, basis):
        target = target + b * c
    sol = solve_in_span(target, basis)
    assert sol is not None
    back = Element()
    for c, b in zip(sol, basis):
        back = back + b * c
    assert back == target


def test_rank_nullity_large_sparse():
    rng = random.Random(7)
    n = 200
    rows = []
    for _ in range(n):
        rows.append({rng.randrange(n): rng.randint(-2, 2) for _ in range(3)})
    # a few dependent rows
    for i in range(10):
        rows[-1 - i] = {k: 2 * v for k, v in rows[i].items()}
    M = SparseMatrix(rows, columns=range(n))
    assert rank(M) + len(kernel(M)) == n
