from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from walledbrauer.perms import (ENYANG, TOP, GroupElement, Perm, coset_reps, cycle,
                                is_right_transversal, jucys_murphy, subgroup)


def g(p):
    return GroupElement({p: 1})


def s(i, n):
    return g(Perm.transposition(n, i, i + 1))


def test_jucys_murphy_examples():
    assert jucys_murphy(1, 4).is_zero()
    assert jucys_murphy(2, 4) == g(Perm.transposition(4, 1, 2))
    assert jucys_murphy(3, 4) == g(Perm.transposition(4, 1, 3)) + g(Perm.transposition(4, 2, 3))
    with pytest.raises(IndexError):
        jucys_murphy(5, 4)


def test_cycle_examples():
    assert cycle(2, 2, 4).is_identity()
    # s_{1,3} = (3,2,1): 3 -> 2 -> 1 -> 3
    c = cycle(1, 3, 3)
    assert (c(3), c(2), c(1)) == (2, 1, 3)
    assert cycle(3, 1, 3) == cycle(1, 3, 3).inverse()


def test_product_is_right_action():
    a, b = Perm.transposition(3, 1, 2), Perm.transposition(3, 2, 3)
    assert (a * b)(1) == b(a(1))


@pytest.mark.parametrize("n", range(2, 6))
def test_jucys_murphy_relations(n):
    one = g(Perm.identity(n))
    for i in range(1, n + 1):
        L = jucys_murphy(i, n)
        for j in range(1, n):
            if j not in (i - 1, i):
                assert L * s(j, n) == s(j, n) * L
        if i < n:
            L1 = jucys_murphy(i + 1, n)
            assert s(i, n) * L == L1 * s(i, n) - one
            assert (L + L1) * s(i, n) == s(i, n) * (L + L1)


@pytest.mark.parametrize("conv", [ENYANG, TOP])
def test_coset_counts(conv):
    for r in range(6):
        for t in range(6):
            for f in range(min(r, t) + 1):
                reps = coset_reps(r, t, f, conv, certify=False)
                assert len(reps) == comb(r, f) * comb(t, f) * factorial(f)


def test_coset_examples():
    assert len(coset_reps(2, 2, 1)) == 4
    (c,) = coset_reps(3, 2, 0)
    assert c.is_identity()
    assert len(coset_reps(3, 2, 2)) == 6
    with pytest.raises(ValueError):
        coset_reps(1, 1, 2)


@pytest.mark.parametrize("conv", [ENYANG, TOP])
def test_transversal_exhaustive(conv):
    for r in range(4):
        for t in range(4):
            if r + t > 6:
                continue
            for f in range(min(r, t) + 1):
                reps = coset_reps(r, t, f, conv, certify=False)
                assert is_right_transversal(reps, subgroup(r, t, f, conv), r, t)


def test_top_convention_allows_single_pair():
    # at r = t = f = 1 the printed bound would leave no representative
    reps = coset_reps(1, 1, 1, TOP)
    assert len(reps) == 1 and reps[0].is_identity()


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(1, n + 1)))))
def test_reduced_word(data):
    n, img = data
    w = Perm(img)
    acc = Perm.identity(n)
    for i in w.reduced_word():
        acc = acc * Perm.transposition(n, i, i + 1)
    assert acc == w
    inversions = sum(1 for a in range(n) for b in range(a + 1, n) if img[a] > img[b])
    assert len(w.reduced_word()) == inversions
