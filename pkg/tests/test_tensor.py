from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from walledbrauer import words as W
from walledbrauer.tensor import (PRINTED, Operator, TensorModule,
                                 endomorphism_dimension, generator_operator, monomial_operator,
                                 monomial_specs, swap_closed_form, verify_realization)

M2211 = (2, 2, 1, 1, 1, -5)
M3211 = (3, 2, 1, 1, 2, -4)


@pytest.fixture(scope="module")
def mod():
    return TensorModule(*M2211)


def op(mod, w):
    return Operator(mod, w)


def test_dimension(mod):
    assert mod.dim == 2 ** 4 * 4 ** 2 == len(mod.basis())
    with pytest.raises(ResourceWarning):
        TensorModule(3, 3, 3, 3, 1, -6)


def test_e1_action_closed_form(mod):
    m, N = 2, 4
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            got = mod.casimir_apply(1, -1, (i, (), j))
            if i != j:
                assert got == {}
            else:
                sign = -1 if i <= m else 1
                assert got == {(a, (), a): sign for a in range(1, N + 1)}


def test_x_actions_on_highest_vector(mod):
    for i in (1, 2):
        for j in range(1, 5):
            v = (i, (), j)
            assert mod.casimir_apply(1, 0, v) == {v: mod.p}
    for i in (3, 4):
        for k in range(1, 5):
            v = (k, (), i)
            assert mod.casimir_apply(0, -1, v) == {v: -mod.q}


@pytest.mark.parametrize("mnrt,bar", [((2, 2, 2, 0), False), ((2, 1, 0, 2), True),
                                      ((2, 2, 2, 1), False)])
def test_swap_closed_form(mnrt, bar):
    M = TensorModule(*mnrt, 1, -5)
    for v in M.basis():
        a, b = (-1, -2) if bar else (2, 1)
        assert M.casimir_apply(a, b, v) == swap_closed_form(M, 1, v, bar)


def test_s_squares_to_one():
    M = TensorModule(2, 2, 2, 0, 1, -5)
    s = generator_operator("s1", M)
    assert s * s == op(M, W.ONE)


def test_omega1_and_lemma_identities(mod):
    e, x, xb = (generator_operator(g, mod) for g in ("e1", "x1", "xb1"))
    assert e * x * e == e * mod.omega1
    assert mod.omega1 == 2 * -5 - 2 * 1
    assert (x + xb) * e == op(mod, W.Word()) == e * (x + xb)
    assert x * (e + xb) == (e + xb) * x


def test_x2_commutes_with_x1():
    M = TensorModule(2, 2, 2, 0, 1, -5)
    s, x = generator_operator("s1", M), generator_operator("x1", M)
    x2 = s * x * s - s
    assert x * x2 == x2 * x
    assert op(M, W.x(2)) == x2


def test_omega_sequences():
    assert TensorModule(*M2211).omegas(4) == [0, -12, 72, -516, 3600]
    assert TensorModule(*M2211).omegabars(4) == [0, 12, 72, 372, 1872]
    M = TensorModule(*M3211)
    assert M.omegas(4) == [-1, -14, 56, -476, 3164]
    assert M.omegabars(4) == [-1, 14, 56, 224, 896]
    assert TensorModule(*M3211, convention=PRINTED).omega0 == 1


@pytest.mark.parametrize("params", [M2211, M3211])
def test_omega_values_are_operator_values(params):
    M = TensorModule(*params)
    e, x, xb = (generator_operator(g, M) for g in ("e1", "x1", "xb1"))
    for a, (w, wb) in enumerate(zip(M.omegas(3), M.omegabars(3))):
        assert e * x ** a * e == e * w
        assert e * xb ** a * e == e * wb


def test_diagonal_action_commutes(mod):
    gens = [generator_operator(g, mod) for g in ("e1", "x1", "xb1")]
    for g in product(range(1, 5), repeat=2):
        for v in mod.basis()[::7]:
            for G in gens:
                left = {}
                for w, c in mod.diagonal_action(g, v).items():
                    for u, d in G.column(w).items():
                        left[u] = left.get(u, 0) + c * d
                right = {}
                for w, c in G.column(v).items():
                    for u, d in mod.diagonal_action(g, w).items():
                        right[u] = right.get(u, 0) + c * d
                assert {k: c for k, c in left.items() if c} == {k: c for k, c in right.items() if c}


letters = st.sampled_from([W.letter(W.E), W.letter(W.X), W.letter(W.XB)])


@settings(max_examples=15)
@given(st.lists(letters, min_size=1, max_size=3), st.lists(letters, min_size=1, max_size=3))
def test_sigma_is_reversal(a, b):
    mod = TensorModule(*M2211)
    A, B = W.ONE, W.ONE
    for L in a:
        A = A * L
    for L in b:
        B = B * L
    assert op(mod, (A * B).sigma()) == op(mod, B.sigma()) * op(mod, A.sigma())
    for L in a:
        assert L.sigma() == L


@pytest.mark.parametrize("params", [M2211, M3211])
def test_realization_corrected(params):
    rep = verify_realization(*params)
    assert rep.passed, rep.table()
    assert len(rep.records) == 29


def test_realization_printed_fails_at_32():
    rep = verify_realization(*M3211, convention=PRINTED)
    assert {"aff06", "aff12", "aff25"} <= {r.id for r in rep.failures()}
    # at m = n both conventions agree on omega_0 = 0
    assert TensorModule(*M2211, convention=PRINTED).omega0 == 0


def test_realization_negative_control():
    rep = verify_realization(*M2211, corrupt="x1")
    failed = {r.id for r in rep.failures()}
    assert "quad-row" in failed and "aff08" in failed
    assert all(r.witness for r in rep.failures())


def test_realization_guards():
    with pytest.raises(ValueError):
        verify_realization(2, 2, 1, 0, 1, -5)
    with pytest.raises(ValueError):
        TensorModule(2, 2, 1, 1, 1, -5, convention="other")


def test_monomials():
    specs = monomial_specs(1, 1)
    assert len(specs) == 8
    M = TensorModule(*M2211)
    ident = [s for s in specs if s[2] == 0 and not any(s[1]) and not any(s[3])]
    assert any(monomial_operator(s, M) == op(M, W.ONE) for s in ident)
    assert len(monomial_specs(2, 1)) == 2 ** 3 * 6


@pytest.mark.parametrize("params", [M2211, M3211, (2, 2, 1, 1, 0, 0)])
def test_endomorphism_dimension(params):
    assert endomorphism_dimension(*params) == (8, 8)


def test_endomorphism_dimension_duplicate_and_guard():
    assert endomorphism_dimension(*M2211, duplicate=True) == (8, 9)
    with pytest.raises(ValueError):
        endomorphism_dimension(2, 2, 2, 1, 1, -5)


def test_fingerprint_is_stable(mod):
    e = generator_operator("e1", mod)
    assert e.fingerprint() == generator_operator("e1", TensorModule(*M2211)).fingerprint()
