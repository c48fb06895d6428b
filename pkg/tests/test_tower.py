from fractions import Fraction

import pytest

from walledbrauer.diagrams import WalledBrauer
from walledbrauer.tower import (OmegaTable, PhiModel, StrippingFailed, TowerContext,
                                central_element, ebar_coefficients, is_central, omega_extract,
                                phi_k, regular_monomial_independence, strip,
                                verify_affine_relations, verify_tower, y_element, z_closed_form,
                                z_element)
import oracles as O

D1 = Fraction(7, 3)


def ctx(r, t):
    return TowerContext(r, t, 5, D1)


def test_y_examples():
    c = ctx(2, 2)
    A = c.alg
    assert y_element(1, "row", c) == A.scalar(D1)
    assert y_element(1, "bar", c) == A.scalar(-D1)
    y2 = y_element(2, "row", c)
    assert y2 == A.scalar(D1) + A.e(2, 1) - A.s(1)
    assert len(y2) == 3
    with pytest.raises(IndexError):
        y_element(3, "row", c)


def test_y_matches_oracle():
    c = ctx(3, 3)
    for i in range(1, 4):
        assert O.element_from_package(y_element(i, "row", c)) == O.y_row(i, 3, 3, D1)


def test_central_examples():
    c11 = ctx(1, 1)
    assert central_element(c11) == c11.alg.e1()
    assert is_central(central_element(c11))
    assert is_central(central_element(ctx(2, 1)))
    c30 = ctx(3, 0)
    assert is_central(central_element(c30))


def test_omega_low_values():
    c = ctx(3, 3)
    for k in (1, 2, 3):
        B = WalledBrauer(k - 1, k - 1, 5)
        assert omega_extract(0, k, c) == B.scalar(5)
        assert omega_extract(0, k, c, bar=True) == B.scalar(5)
        assert omega_extract(1, k, c) == B.scalar(5 * D1)
        assert omega_extract(1, k, c, bar=True) == B.scalar(-5 * D1)


def test_omega_22_frozen():
    # independent brute force in tests/oracles.py: -2 e_1 + 335/9
    w = omega_extract(2, 2, ctx(2, 2))
    assert O.element_from_package(w) == O.omega(2, 2, 5, D1)
    B = WalledBrauer(1, 1, 5)
    assert w == -2 * B.e1() + B.scalar(Fraction(335, 9))


@pytest.mark.parametrize("a", [2, 3])
def test_omega_matches_oracle_level3(a):
    assert O.element_from_package(omega_extract(a, 3, ctx(3, 3))) == O.omega(a, 3, 5, D1)


def test_omega_guards():
    with pytest.raises(ValueError):
        omega_extract(1, 2, TowerContext(2, 2, 0, 1))
    with pytest.raises(ResourceWarning):
        omega_extract(6, 2, ctx(2, 2))


def test_strip_rejects_missing_edges():
    A = WalledBrauer(2, 2, 5)
    with pytest.raises(StrippingFailed):
        strip(A.one(), 2)


def test_omega_table_central():
    t = OmegaTable(ctx(3, 3), 3, 4)
    for (a, k), w in t.omega.items():
        if k > 1:
            assert is_central(w)
            assert is_central(t.omegabar[a, k])


def test_z_closed_forms():
    c = ctx(3, 3)
    for k in range(2, 5):
        for j in range(1, k):
            assert z_element(j, k, c) == z_closed_form(j, k, c)
            assert z_element(j, k, c, bar=True) == z_closed_form(j, k, c, bar=True)


def test_verify_tower_33():
    rep = verify_tower(3, 3, 5, "7/3")
    assert rep.passed, rep.table()
    ids = {r.id for r in rep.records}
    assert {f"y-{i}" for i in range(1, 10)} <= ids
    assert {"sys", "z-closed", "central", "omega-central", "omega-y"} <= ids


def test_verify_tower_negative_control():
    rep = verify_tower(3, 3, 5, "7/3", corrupt="y")
    assert not rep.passed
    assert {"y-1", "sys"} <= {r.id for r in rep.failures()}


def test_phi_examples():
    assert phi_k("e1", 1, 1, 1, 5, 7) == WalledBrauer(2, 2, 5).e(2, 2)
    x = phi_k("x1", 1, 1, 1, 5, 7)
    assert x == y_element(2, "row", TowerContext(2, 2, 5, Fraction(7, 5)))
    assert phi_k("s1", 1, 2, 1, 5, 7) == WalledBrauer(3, 2, 5).s(2)
    with pytest.raises(ValueError):
        PhiModel(1, 1, 1, 0, 7)


@pytest.mark.parametrize("r,t,k", [(1, 1, 1), (1, 1, 2), (2, 1, 1)])
def test_phi_relations(r, t, k):
    rep = verify_affine_relations(r, t, k, 5, 7)
    assert rep.passed, rep.table()
    assert sum(x.id.startswith("aff") for x in rep.records) == 26


def test_phi_relation_8_and_13_records():
    rep = verify_affine_relations(2, 1, 1, 5, 7)
    by = {x.id: x for x in rep.records}
    assert by["aff08"].status == "pass" and by["aff08"].instances > 0
    assert by["aff13"].status == "pass" and by["aff13"].instances > 0


def test_phi_negative_control():
    rep = verify_affine_relations(1, 1, 1, 5, 7, corrupt="x1")
    assert "aff08" in {x.id for x in rep.failures()}


def test_ebar_coefficients_recursion():
    tab = ebar_coefficients(4, lambda i: Fraction(i + 2), 5)
    for k in range(1, 5):
        assert tab[k, k] == (-1) ** k
        for i in range(1, k):
            assert tab[k, i] == 5 * tab[k - 1, i] - tab[k - 1, i - 1]


def test_freeness():
    rep = regular_monomial_independence(1, 1, 0, 5, 7)
    assert rep.extra == {"monomials": 2, "rank": 2}
    rep = regular_monomial_independence(1, 1, 1, 5, 7)
    assert rep.passed and rep.extra["rank"] == rep.extra["monomials"]
    rep = regular_monomial_independence(1, 1, 2, 5, 7)
    assert rep.passed
    bad = regular_monomial_independence(1, 1, 2, 5, 7, duplicate=True)
    assert bad.extra["monomials"] - bad.extra["rank"] == 1
    with pytest.raises(ResourceWarning):
        regular_monomial_independence(2, 2, 1, 5, 7)
