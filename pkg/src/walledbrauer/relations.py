"""Defining relations of the walled Brauer algebra and its affine version.

A *model* is any object providing ``r``, ``t``, ``one()``, ``s(i)``, ``sb(j)``,
``e1()`` and, for the affine relations, ``x1()``, ``xb1()``, ``omega(a)``,
``omegabar(a)`` and ``omega_max``; plus ``equal(a, b)`` returning None when
``a == b`` and a JSON-friendly witness otherwise.  Elements must support
``+``, ``-``, ``*`` and scalar multiplication.
"""
from __future__ import annotations

from .report import Report, Record, PASS, FAIL


def _pw(x, k, one):
    out = one
    for _ in range(k):
        out = out * x
    return out


def _braid(gen, n):
    return [(f"i={i}", gen(i) * gen(i + 1) * gen(i), gen(i + 1) * gen(i) * gen(i + 1))
            for i in range(1, n - 1)]


def _far(gen, n):
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append((f"i={i},j={j}", gen(i) * gen(j), gen(j) * gen(i)))
    return out


def _inv(gen, n, M):
    return [(f"i={i}", gen(i) * gen(i), M.one()) for i in range(1, n)]


def _comm(a, b):
    return a * b, b * a


# ---------------------------------------------------------------- presentation

def _p4(M):
    e = M.e1()
    return [(f"i={i}",) + _comm(M.s(i), e) for i in range(2, M.r)]


def _p5(M):
    if M.r < 2:
        return []
    e = M.e1()
    return [("", e * M.s(1) * e, e)]


def _p6(M):
    e = M.e1()
    return [("", e * e, M.omega(0) * e)]


def _p7(M):
    return [(f"i={i},j={j}",) + _comm(M.s(i), M.sb(j))
            for i in range(1, M.r) for j in range(1, M.t)]


def _p11(M):
    e = M.e1()
    return [(f"i={i}",) + _comm(M.sb(i), e) for i in range(2, M.t)]


def _p12(M):
    if M.t < 2:
        return []
    e = M.e1()
    return [("", e * M.sb(1) * e, e)]


def _p13(M):
    if M.r < 2 or M.t < 2:
        return []
    e, s, sb = M.e1(), M.s(1), M.sb(1)
    return [("", e * s * sb * e * s, e * s * sb * e * sb)]


def _p14(M):
    if M.r < 2 or M.t < 2:
        return []
    e, s, sb = M.e1(), M.s(1), M.sb(1)
    return [("", s * e * s * sb * e, sb * e * s * sb * e)]


PRESENTATION = [
    ("wb01", "s_i^2 = 1", lambda M: _inv(M.s, M.r, M)),
    ("wb02", "s_i s_j = s_j s_i for |i-j| > 1", lambda M: _far(M.s, M.r)),
    ("wb03", "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", lambda M: _braid(M.s, M.r)),
    ("wb04", "s_i e_1 = e_1 s_i for i >= 2", _p4),
    ("wb05", "e_1 s_1 e_1 = e_1", _p5),
    ("wb06", "e_1^2 = delta e_1", _p6),
    ("wb07", "s_i sbar_j = sbar_j s_i", _p7),
    ("wb08", "sbar_i^2 = 1", lambda M: _inv(M.sb, M.t, M)),
    ("wb09", "sbar_i sbar_j = sbar_j sbar_i for |i-j| > 1", lambda M: _far(M.sb, M.t)),
    ("wb10", "sbar_i sbar_{i+1} sbar_i = sbar_{i+1} sbar_i sbar_{i+1}",
     lambda M: _braid(M.sb, M.t)),
    ("wb11", "sbar_i e_1 = e_1 sbar_i for i >= 2", _p11),
    ("wb12", "e_1 sbar_1 e_1 = e_1", _p12),
    ("wb13", "e_1 s_1 sbar_1 e_1 s_1 = e_1 s_1 sbar_1 e_1 sbar_1", _p13),
    ("wb14", "s_1 e_1 s_1 sbar_1 e_1 = sbar_1 e_1 s_1 sbar_1 e_1", _p14),
]


# ---------------------------------------------------------------- affine

def _a8(M):
    e, x, xb = M.e1(), M.x1(), M.xb1()
    z = 0 * M.one()
    return [("left", e * (x + xb), z), ("right", (x + xb) * e, z)]


def _a9(M):
    if M.r < 2:
        return []
    s = M.s(1)
    y = s * M.x1() * s
    return [("",) + _comm(M.e1(), y)]


def _a10(M):
    x = M.x1()
    return [(f"i={i}",) + _comm(M.s(i), x) for i in range(2, M.r)]


def _a11(M):
    xb = M.xb1()
    return [(f"i={i}",) + _comm(M.s(i), xb) for i in range(1, M.r)]


def _central(M, w, a):
    gens = [("e1", M.e1()), ("x1", M.x1()), ("xb1", M.xb1())]
    gens += [(f"s{i}", M.s(i)) for i in range(1, M.r)]
    gens += [(f"sb{j}", M.sb(j)) for j in range(1, M.t)]
    return [(f"a={a},central:{name}",) + _comm(w, g) for name, g in gens]


def _a12(M):
    e, x, one = M.e1(), M.x1(), M.one()
    out = []
    for a in range(M.omega_max + 1):
        w = M.omega(a)
        out.append((f"a={a}", e * _pw(x, a, one) * e, w * e))
        if getattr(M, "omega_is_element", False):
            out.extend(_central(M, w, a))
    return out


def _a13(M):
    if M.r < 2:
        return []
    s, x = M.s(1), M.x1()
    y = s * x * s - s
    return [("",) + _comm(x, y)]


def _a19(M):
    return _p13(M)


def _a20(M):
    return _p14(M)


def _a21(M):
    x, y = M.x1(), M.e1() + M.xb1()
    return [("",) + _comm(x, y)]


def _a22(M):
    if M.t < 2:
        return []
    sb = M.sb(1)
    y = sb * M.xb1() * sb
    return [("",) + _comm(M.e1(), y)]


def _a23(M):
    xb = M.xb1()
    return [(f"i={i}",) + _comm(M.sb(i), xb) for i in range(2, M.t)]


def _a24(M):
    x = M.x1()
    return [(f"i={i}",) + _comm(M.sb(i), x) for i in range(1, M.t)]


def _a25(M):
    e, xb, one = M.e1(), M.xb1(), M.one()
    out = []
    for a in range(M.omega_max + 1):
        w = M.omegabar(a)
        out.append((f"a={a}", e * _pw(xb, a, one) * e, w * e))
        if getattr(M, "omega_is_element", False):
            out.extend(_central(M, w, a))
    return out


def _a26(M):
    if M.t < 2:
        return []
    sb, xb = M.sb(1), M.xb1()
    y = sb * xb * sb - sb
    return [("",) + _comm(xb, y)]


AFFINE = [
    ("aff01", "s_i^2 = 1", lambda M: _inv(M.s, M.r, M)),
    ("aff02", "s_i s_j = s_j s_i for |i-j| > 1", lambda M: _far(M.s, M.r)),
    ("aff03", "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}", lambda M: _braid(M.s, M.r)),
    ("aff04", "s_i e_1 = e_1 s_i for i >= 2", _p4),
    ("aff05", "e_1 s_1 e_1 = e_1", _p5),
    ("aff06", "e_1^2 = omega_0 e_1", _p6),
    ("aff07", "s_i sbar_j = sbar_j s_i", _p7),
    ("aff08", "e_1 (x_1 + xbar_1) = (x_1 + xbar_1) e_1 = 0", _a8),
    ("aff09", "e_1 s_1 x_1 s_1 = s_1 x_1 s_1 e_1", _a9),
    ("aff10", "s_i x_1 = x_1 s_i for i >= 2", _a10),
    ("aff11", "s_i xbar_1 = xbar_1 s_i", _a11),
    ("aff12", "e_1 x_1^k e_1 = omega_k e_1 (omega_k central)", _a12),
    ("aff13", "x_1 (s_1 x_1 s_1 - s_1) = (s_1 x_1 s_1 - s_1) x_1", _a13),
    ("aff14", "sbar_i^2 = 1", lambda M: _inv(M.sb, M.t, M)),
    ("aff15", "sbar_i sbar_j = sbar_j sbar_i for |i-j| > 1", lambda M: _far(M.sb, M.t)),
    ("aff16", "sbar_i sbar_{i+1} sbar_i = sbar_{i+1} sbar_i sbar_{i+1}",
     lambda M: _braid(M.sb, M.t)),
    ("aff17", "sbar_i e_1 = e_1 sbar_i for i >= 2", _p11),
    ("aff18", "e_1 sbar_1 e_1 = e_1", _p12),
    ("aff19", "e_1 s_1 sbar_1 e_1 s_1 = e_1 s_1 sbar_1 e_1 sbar_1", _a19),
    ("aff20", "s_1 e_1 s_1 sbar_1 e_1 = sbar_1 e_1 s_1 sbar_1 e_1", _a20),
    ("aff21", "x_1 (e_1 + xbar_1) = (e_1 + xbar_1) x_1", _a21),
    ("aff22", "e_1 sbar_1 xbar_1 sbar_1 = sbar_1 xbar_1 sbar_1 e_1", _a22),
    ("aff23", "sbar_i xbar_1 = xbar_1 sbar_i for i >= 2", _a23),
    ("aff24", "sbar_i x_1 = x_1 sbar_i", _a24),
    ("aff25", "e_1 xbar_1^k e_1 = omegabar_k e_1 (omegabar_k central)", _a25),
    ("aff26", "xbar_1 (sbar_1 xbar_1 sbar_1 - sbar_1) = (sbar_1 xbar_1 sbar_1 - sbar_1) xbar_1",
     _a26),
]

FAMILIES = {fid: (fid, anchor, fn) for fid, anchor, fn in PRESENTATION + AFFINE}


def check_family(M, family):
    """Evaluate one relation family on a model; returns a Record."""
    fid, anchor, fn = family
    instances = fn(M)
    for label, lhs, rhs in instances:
        w = M.equal(lhs, rhs)
        if w is not None:
            return Record(fid, anchor, FAIL, {"instance": label, "difference": w},
                          len(instances))
    return Record(fid, anchor, PASS, None, len(instances))


def verify_families(M, families, suite, params, jobs=1, rebuild=None):
    """Check each family; with ``jobs > 1`` and a picklable ``rebuild`` callable
    (returning a fresh model) families are distributed over worker processes."""
    report = Report(suite, params)
    if jobs > 1 and rebuild is not None and len(families) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futs = [ex.submit(_check_remote, rebuild, fam[0]) for fam in families]
            for f in futs:
                report.add(f.result())
    else:
        for fam in families:
            report.add(check_family(M, fam))
    return report


def _check_remote(rebuild, fid):
    return check_family(rebuild(), FAMILIES[fid])
