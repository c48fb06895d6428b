from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from walledbrauer.linalg import Element
from walledbrauer.superalgebra import (KacModule, act_natural, bracket, elem_parity, kac_act,
                                       typical_by_rho, typicality, weight_pq)


def br(x, y, m, n):
    """Bilinear extension of the bracket to combinations of matrix units."""
    out = Element()
    for a, ca in x:
        for b, cb in y:
            out = out + Element(bracket(a, b, m, n).terms) * (ca * cb)
    return out


def test_bracket_examples():
    m, n = 2, 2
    assert bracket((1, 2), (2, 1), m, n).terms == {(1, 1): 1, (2, 2): -1}
    assert bracket((m + 1, 1), (m + 2, 1), m, n).is_zero()
    assert bracket((1, m + 1), (m + 1, 1), m, n).terms == {(1, 1): 1, (m + 1, m + 1): 1}
    with pytest.raises(IndexError):
        bracket((1, 5), (1, 1), m, n)


units = st.integers(1, 5)


@given(st.integers(1, 3), st.integers(1, 2), st.data())
def test_super_jacobi(m, n, data):
    N = m + n
    pick = st.tuples(st.integers(1, N), st.integers(1, N))
    a, b, c = (data.draw(pick) for _ in range(3))
    A, B, C = (Element({x: 1}) for x in (a, b, c))
    sign = -1 if elem_parity(a, m) * elem_parity(b, m) else 1
    lhs = br(A, br(B, C, m, n), m, n)
    rhs = br(br(A, B, m, n), C, m, n) + br(B, br(A, C, m, n), m, n) * sign
    assert lhs == rhs


def test_natural_examples():
    assert act_natural((1, 2), 2, 2, 2).terms == {1: 1}
    assert act_natural((1, 1), 1, 2, 2, dual=True).terms == {1: -1}
    assert act_natural((1, 2), 3, 2, 2, dual=True).is_zero()


def _module_axiom(act, basis, m, n):
    N = m + n
    for g in product(range(1, N + 1), repeat=2):
        for h in product(range(1, N + 1), repeat=2):
            sign = -1 if elem_parity(g, m) * elem_parity(h, m) else 1
            for v in basis:
                gh = {}
                for w, c in act(h, {v: 1}).items():
                    for u, d in act(g, {w: 1}).items():
                        gh[u] = gh.get(u, 0) + c * d
                hg = {}
                for w, c in act(g, {v: 1}).items():
                    for u, d in act(h, {w: 1}).items():
                        hg[u] = hg.get(u, 0) + c * d
                lhs = Element(gh) - Element(hg) * sign
                rhs = Element()
                for k, c in bracket(g, h, m, n):
                    rhs = rhs + Element(act(k, {v: 1})) * c
                assert lhs == rhs, (g, h, v)


@pytest.mark.parametrize("dual", [False, True])
def test_natural_modules_are_representations(dual):
    m, n = 2, 1

    def act(g, vec):
        out = Element()
        for v, c in vec.items():
            out = out + act_natural(g, v, m, n, dual) * c
        return out.terms
    _module_axiom(act, range(1, m + n + 1), m, n)


@pytest.mark.parametrize("p,q", [(1, -5), (Fraction(1, 2), 3)])
def test_kac_is_representation(p, q):
    K = KacModule(2, 2, p, q)
    _module_axiom(lambda g, vec: K.act_element(g, vec), K.basis(), 2, 2)


def test_kac_examples():
    m, n, p, q = 2, 2, Fraction(3), Fraction(-1, 2)
    K = KacModule(m, n, p, q)
    assert len(K.basis()) == 2 ** (m * n)
    assert K.act((1, 1), ()) == {(): p}
    low = K.act((m + 1, 1), ())
    assert low == {((1, 1),): 1}
    assert K.act_element((m + 1, 1), low) == {}
    # [E_{1,m+1}, E_{m+1,1}] v = (E_11 + E_{m+1,m+1}) v = (p - q) v
    assert K.act_element((1, m + 1), low) == {(): p - q}
    assert kac_act((1, 1), (), p, q, m, n).terms == {(): p}


def test_kac_closes_and_weights():
    K = KacModule(2, 2, 1, -5)
    basis = set(K.basis())
    for g in product(range(1, 5), repeat=2):
        for b in basis:
            assert set(K.act(g, b)) <= basis
    for b in basis:
        w = K.weight(b)
        for i in range(1, 5):
            assert K.act((i, i), b) == ({b: w[i - 1]} if w[i - 1] else {})


@pytest.mark.parametrize("p,q,m,n,typ", [(1, -5, 2, 2, True), (0, 0, 2, 2, False),
                                         (Fraction(1, 2), 0, 3, 2, True), (2, -4, 3, 2, True),
                                         (1, 0, 2, 2, False), (-2, 0, 2, 2, True)])
def test_typicality(p, q, m, n, typ):
    assert typicality(p, q, m, n) is typ
    assert typical_by_rho(weight_pq(p, q, m, n), m, n) is typ


@given(st.integers(-6, 6), st.integers(1, 3), st.integers(1, 3))
def test_typicality_matches_rho(d, m, n):
    assert typicality(d, 0, m, n) == typical_by_rho(weight_pq(d, 0, m, n), m, n)
