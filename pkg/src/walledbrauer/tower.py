"""Jucys-Murphy type elements of B_{r,t}(delta), the omega tables, the
homomorphisms phi_k into B_{r+k,t+k}(omega_0) and the bounded-degree
freeness certificate for regular monomials."""
from __future__ import annotations

from fractions import Fraction
from functools import partial
from itertools import product

from . import words as W
from .diagrams import WalledBrauer, WalledDiagram
from .linalg import SparseMatrix, as_rational, rank
from .perms import ENYANG, coset_reps, subgroup
from .relations import AFFINE, verify_families
from .report import Report


class StrippingFailed(RuntimeError):
    pass


class TowerContext:
    """Sizes r, t with delta (= omega_0) and delta_1 for the y elements."""

    def __init__(self, r, t, delta, delta1):
        self.r, self.t = r, t
        self.delta = as_rational(delta)
        self.delta1 = as_rational(delta1)
        self.alg = WalledBrauer(r, t, self.delta)

    def at(self, r, t):
        return TowerContext(r, t, self.delta, self.delta1)

    def __repr__(self):
        return f"TowerContext({self.r}, {self.t}, delta={self.delta}, delta1={self.delta1})"


def y_element(i, side, ctx):
    """y_i = delta_1 + sum_{j<i} e_{i,j} - L_i, or ybar_i = -delta_1 + sum_{j<i} e_{j,i} - Lbar_i."""
    A = ctx.alg
    if side == "row":
        if not 1 <= i <= ctx.r:
            raise IndexError(f"y_{i} needs 1 <= i <= r={ctx.r}")
        x = A.scalar(ctx.delta1) - A.jucys_murphy(i)
        for j in range(1, min(i, ctx.t + 1)):
            x = x + A.e(i, j)
        return x
    if side == "bar":
        if not 1 <= i <= ctx.t:
            raise IndexError(f"ybar_{i} needs 1 <= i <= t={ctx.t}")
        x = A.scalar(-ctx.delta1) - A.jucys_murphy(i, bar=True)
        for j in range(1, min(i, ctx.r + 1)):
            x = x + A.e(j, i)
        return x
    raise ValueError("side must be 'row' or 'bar'")


def central_element(ctx):
    """c_{r,t} = sum e_{i,j} - sum L_i - sum Lbar_j."""
    A = ctx.alg
    x = A.zero()
    for i in range(1, ctx.r + 1):
        for j in range(1, ctx.t + 1):
            x = x + A.e(i, j)
    for i in range(1, ctx.r + 1):
        x = x - A.jucys_murphy(i)
    for j in range(1, ctx.t + 1):
        x = x - A.jucys_murphy(j, bar=True)
    return x


def generators(alg):
    out = [("e1", alg.e1())] if alg.r and alg.t else []
    out += [(f"s{i}", alg.s(i)) for i in range(1, alg.r)]
    out += [(f"sb{j}", alg.sb(j)) for j in range(1, alg.t)]
    return out


def is_central(x, alg=None):
    alg = alg or x.parent
    return all(x * g == g * x for _, g in generators(alg))


def strip(x, k):
    """Remove the horizontal edges [k, kbar] (top and bottom) from every diagram
    of an element of B_{k,k}; the result lives in B_{k-1,k-1}."""
    big = x.parent
    small = WalledBrauer(k - 1, k - 1, big.delta)
    out = {}
    for D, c in x:
        top = (D.vertex(0, k), D.vertex(0, -k))
        bot = (D.vertex(1, k), D.vertex(1, -k))
        if not (D.has_edge(*top) and D.has_edge(*bot)):
            raise StrippingFailed(f"diagram {D} lacks the edges [{k},{k}bar]")
        N = 2 * (k - 1)
        P = [0] * (2 * N)
        for v, w in enumerate(D.partner):
            rv, lv = D.label(v)
            if abs(lv) == k:
                continue
            rw, lw = D.label(w)
            P[small_vertex(k - 1, rv, lv)] = small_vertex(k - 1, rw, lw)
        out[WalledDiagram(k - 1, k - 1, P)] = c
    return small.element(out)


def small_vertex(n, row, label):
    from .diagrams import vertex_id
    return vertex_id(n, n, row, label)


_OMEGA_CACHE = {}


def omega_extract(a, k, ctx, bar=False):
    """omega_{a,k} (or omegabar_{a,k}) in B_{k-1,k-1}, from e_k y_k^a e_k = omega_{a,k} e_k."""
    if ctx.delta == 0:
        raise ValueError("omega extraction needs delta != 0")
    if k > 3 or a > 5:
        raise ResourceWarning("omega extraction limited to k <= 3, a <= 5")
    key = (a, k, ctx.delta, ctx.delta1, bar)
    if key in _OMEGA_CACHE:
        return _OMEGA_CACHE[key]
    c = ctx.at(k, k)
    e = c.alg.e(k, k)
    y = y_element(k, "bar" if bar else "row", c)
    x = e * (y ** a) * e
    w = strip(x, k)
    # the stripped element must reproduce e_k y_k^a e_k
    if c.alg.embed(w) * e != x:
        raise StrippingFailed("stripped element does not reproduce e_k y^a e_k")
    _OMEGA_CACHE[key] = w
    return w


class OmegaTable:
    """omega_{a,k} and omegabar_{a,k} for a <= amax, built once."""

    def __init__(self, ctx, kmax, amax):
        self.ctx = ctx
        self.omega = {}
        self.omegabar = {}
        for k in range(1, kmax + 1):
            for a in range(amax + 1):
                self.omega[a, k] = omega_extract(a, k, ctx)
                self.omegabar[a, k] = omega_extract(a, k, ctx, bar=True)


def z_element(j, k, ctx, bar=False):
    """z_{j,k} = s_{j,k-1} (y_{k-1} + e_{k-1}) s_{k-1,j} (or the barred mirror)."""
    A = ctx.alg
    y = y_element(k - 1, "bar" if bar else "row", ctx) + A.e(k - 1, k - 1)
    return A.cycle(j, k - 1, bar) * y * A.cycle(k - 1, j, bar)


def z_closed_form(j, k, ctx, bar=False):
    """Closed form of z_{j,k}: +-delta_1 + sum_{l<k} e - sum_{s<k, s != j} (s, j)."""
    A = ctx.alg
    x = A.scalar(-ctx.delta1 if bar else ctx.delta1)
    for l in range(1, k):
        x = x + (A.e(l, j) if bar else A.e(j, l))
    for s_ in range(1, k):
        if s_ != j:
            x = x - A.transposition(s_, j, bar)
    return x


def ebar_coefficients(kmax, omega, omega0):
    """a_{k,i} with e_1 xbar_1^k = sum_i a_{k,i} e_1 x_1^i.

    ``omega(i)`` gives omega_i (any ring element commuting with everything
    involved); coefficients are returned as functions of that ring, built by
    the recursion a_{k,k} = (-1)^k, a_{k,i} = omega_0 a_{k-1,i} - a_{k-1,i-1},
    a_{k,0} = -sum_{i=1}^{k-1} a_{k-1,i} omega_i."""
    table = {(0, 0): 1}
    for k in range(1, kmax + 1):
        table[k, k] = (-1) ** k
        for i in range(1, k):
            table[k, i] = omega0 * table[k - 1, i] - table[k - 1, i - 1]
        acc = 0
        for i in range(1, k):
            acc = acc + table[k - 1, i] * omega(i)
        table[k, 0] = -acc
    return table


# ---------------------------------------------------------------- phi_k

class PhiModel:
    """Images of the affine generators under phi_k in B_{r+k,t+k}(omega_0)."""

    omega_is_element = True

    def __init__(self, r, t, k, omega0, omega1, omega_max=4, corrupt=None):
        omega0, omega1 = as_rational(omega0), as_rational(omega1)
        if omega0 == 0:
            raise ValueError("phi_k needs omega_0 != 0")
        self.r, self.t, self.k = r, t, k
        self.omega0, self.omega1 = omega0, omega1
        self.delta1 = as_rational(Fraction(omega1) / omega0)
        self.ctx = TowerContext(r + k, t + k, omega0, self.delta1)
        self.alg = self.ctx.alg
        self.omega_max = omega_max
        self.corrupt = corrupt
        self._cache = {}

    def one(self):
        return self.alg.one()

    def s(self, i):
        if not 1 <= i < self.r:
            raise IndexError(f"s_{i} out of range")
        return self.alg.s(i + self.k)

    def sb(self, j):
        if not 1 <= j < self.t:
            raise IndexError(f"sbar_{j} out of range")
        return self.alg.sb(j + self.k)

    def e1(self):
        return self.alg.e(self.k + 1, self.k + 1)

    def x1(self):
        if "x1" not in self._cache:
            y = y_element(self.k + 1, "row", self.ctx)
            if self.corrupt == "x1":
                y = y + self.alg.one()
            self._cache["x1"] = y
        return self._cache["x1"]

    def xb1(self):
        if "xb1" not in self._cache:
            self._cache["xb1"] = y_element(self.k + 1, "bar", self.ctx)
        return self._cache["xb1"]

    def omega(self, a):
        key = ("w", a)
        if key not in self._cache:
            w = omega_extract(a, self.k + 1, self.ctx)
            self._cache[key] = self.alg.embed(w)
        return self._cache[key]

    def omegabar(self, a):
        key = ("wb", a)
        if key not in self._cache:
            w = omega_extract(a, self.k + 1, self.ctx, bar=True)
            self._cache[key] = self.alg.embed(w)
        return self._cache[key]

    def equal(self, a, b):
        if a == b:
            return None
        return (a - b).to_json()

    def image(self, w):
        return W.evaluate(w, self)


def phi_k(gen, k, r, t, omega0, omega1):
    """Image of an affine generator ("s<i>", "sb<j>", "e1", "x1", "xb1",
    "omega<a>", "omegabar<a>") under phi_k."""
    M = PhiModel(r, t, k, omega0, omega1)
    if gen == "e1":
        return M.e1()
    if gen == "x1":
        return M.x1()
    if gen == "xb1":
        return M.xb1()
    if gen.startswith("omegabar"):
        return M.omegabar(int(gen[8:]))
    if gen.startswith("omega"):
        return M.omega(int(gen[5:]))
    if gen.startswith("sb"):
        return M.sb(int(gen[2:]))
    if gen.startswith("s"):
        return M.s(int(gen[1:]))
    raise ValueError(f"unknown generator {gen!r}")


def verify_affine_relations(r, t, k, omega0, omega1, omega_max=4, corrupt=None, jobs=1):
    if r + t + 2 * k > 6:
        raise ResourceWarning("phi_k check limited to r+t+2k <= 6")
    M = PhiModel(r, t, k, omega0, omega1, omega_max, corrupt)
    params = {"r": r, "t": t, "k": k, "omega0": M.omega0, "omega1": M.omega1,
              "delta1": M.delta1, "omega_max": omega_max}
    if corrupt:
        params["corrupt"] = corrupt
    rebuild = partial(PhiModel, r, t, k, omega0, omega1, omega_max, corrupt)
    rep = verify_families(M, AFFINE, "verify-phi", params, jobs, rebuild)
    # e_1 xbar^a = sum a_{a,i} e_1 x^i on the images
    e, x, xb = M.e1(), M.x1(), M.xb1()
    tab = ebar_coefficients(min(omega_max, 3), M.omega, M.omega0)
    ok, wit = True, None
    for a in range(min(omega_max, 3) + 1):
        lhs = e * (xb ** a)
        rhs = M.alg.zero()
        for i in range(a + 1):
            c = tab[a, i]
            rhs = rhs + c * e * x ** i
        if lhs != rhs:
            ok, wit = False, {"a": a, "difference": (lhs - rhs).to_json()}
            break
    rep.check("ebar-recursion", "e_1 xbar_1^a = sum_i a_{a,i} e_1 x_1^i", ok, wit,
              min(omega_max, 3) + 1)
    return rep


# ---------------------------------------------------------------- freeness

def enyang_basis(r, t):
    """Words c^{-1} e^f w d spanning B_{r,t}: f = 0..min(r,t), c, d coset
    representatives of the first-strands convention, w in S_{r-f} x S_{t-f}
    acting on strands f+1.. ."""
    out = []
    for f in range(min(r, t) + 1):
        reps = coset_reps(r, t, f, ENYANG)
        ws = [g for g in subgroup(r, t, f, ENYANG) if _fixes_first(g, f)]
        for c in reps:
            for w in ws:
                for d in reps:
                    wd = (W.word(c.inverse_word()) * W.e_power(f)
                          * W.perm_word(*w) * W.word(d.word))
                    out.append(((f, c.cycles, w, d.cycles), wd))
    return out


def _fixes_first(g, f):
    row, bar = g
    return all(row(i) == i for i in range(1, f + 1)) and all(bar(j) == j for j in range(1, f + 1))


def regular_monomials(r, t, degree):
    """(label, word) for prod x_i^alpha_i * c^{-1} e^f w d * prod xbar_j^beta_j
    with |alpha|, |beta| <= degree."""
    alphas = [a for a in product(range(degree + 1), repeat=r) if sum(a) <= degree]
    betas = [b for b in product(range(degree + 1), repeat=t) if sum(b) <= degree]
    out = []
    for label, b in enyang_basis(r, t):
        for a in alphas:
            for be in betas:
                out.append(((a, label, be), W.x_power(a) * b * W.xb_power(be)))
    return out


def regular_monomial_independence(r, t, degree, omega0, omega1, duplicate=False):
    """Map the regular monomials of bounded degree through phi_degree and report
    the rank of their diagram coordinates."""
    if degree > 2 or (r, t) not in ((1, 1), (2, 1), (1, 2)):
        raise ResourceWarning("freeness check limited to degree <= 2 and r+t <= 3")
    k = degree
    M = PhiModel(r, t, k, omega0, omega1)
    mons = regular_monomials(r, t, degree)
    if duplicate:
        mons.append(mons[-1])
    rows = [M.image(w) for _, w in mons]
    rk = rank(SparseMatrix(rows))
    rep = Report("verify-freeness", {"r": r, "t": t, "degree": degree, "k": k,
                                     "omega0": M.omega0, "omega1": M.omega1})
    ok = rk == len(mons)
    wit = None if ok else {"monomials": len(mons), "rank": rk}
    rep.check("regular-monomials", "regular monomials are linearly independent under phi_k",
              ok, wit, len(mons))
    rep.extra.update({"monomials": len(mons), "rank": rk})
    return rep


# ---------------------------------------------------------------- tower suite

class _Tower:
    """Elements of B_{r,t} used by the tower identities; ``corrupt="y"``
    flips the sign of the Jucys-Murphy term in y_i (negative control)."""

    def __init__(self, ctx, corrupt=None):
        self.ctx, self.A, self.corrupt = ctx, ctx.alg, corrupt
        self._y = {}

    def y(self, i, bar=False):
        key = (i, bar)
        if key not in self._y:
            y = y_element(i, "bar" if bar else "row", self.ctx)
            if self.corrupt == "y" and not bar:
                y = y + 2 * self.A.jucys_murphy(i)
            self._y[key] = y
        return self._y[key]

    def s(self, i, bar=False):
        return self.A.sb(i) if bar else self.A.s(i)

    def L(self, i, bar=False):
        return self.A.jucys_murphy(i, bar)


def _diff(lhs, rhs, **where):
    if lhs == rhs:
        return None
    out = dict(where)
    out["difference"] = (lhs - rhs).to_json()
    return out


def _run(rep, id, anchor, cases):
    """``cases`` yields (where, lhs, rhs); records the first mismatch."""
    n, wit = 0, None
    for where, lhs, rhs in cases:
        n += 1
        if wit is None:
            wit = _diff(lhs, rhs, **where)
    rep.check(id, anchor, wit is None, wit, n)


def _commute(a, b):
    return a * b, b * a


def verify_tower(r=3, t=3, delta=5, delta1="7/3", omega_k=3, omega_a=4, corrupt=None):
    """Identities satisfied by y_i, ybar_i, z_{j,k}, c_{r,t} and the omega
    tables inside B_{r,t}(delta)."""
    ctx = TowerContext(r, t, delta, delta1)
    if r + t > 6:
        raise ResourceWarning("tower check limited to r+t <= 6")
    T, A = _Tower(ctx, corrupt), ctx.alg
    d1 = ctx.delta1
    mn = min(r, t)
    params = {"r": r, "t": t, "delta": ctx.delta, "delta1": d1}
    if corrupt:
        params["corrupt"] = corrupt
    rep = Report("verify-tower", params)
    e = {i: A.e(i, i) for i in range(1, mn + 1)}

    def c1():
        for i in e:
            yield {"i": i}, e[i] * T.y(i), e[i] * (A.scalar(d1) + T.L(i, True) - T.L(i))
            yield {"i": i, "bar": True}, e[i] * T.y(i, True), e[i] * (A.scalar(-d1) + T.L(i) - T.L(i, True))
    _run(rep, "y-1", "e_i y_i = e_i(delta_1 + Lbar_i - L_i)", c1())

    def c2():
        for i in e:
            w = T.y(i) + T.y(i, True)
            yield {"i": i}, e[i] * w, A.zero()
            yield {"i": i, "side": "right"}, w * e[i], A.zero()
    _run(rep, "y-2", "e_i (y_i + ybar_i) = (y_i + ybar_i) e_i = 0", c2())

    def c3():
        for i in e:
            for bar, n in ((False, r), (True, t)):
                if i < n:
                    s = T.s(i, bar)
                    yield ({"i": i, "bar": bar}, *_commute(e[i], s * T.y(i, bar) * s))
    _run(rep, "y-3", "e_i s_i y_i s_i = s_i y_i s_i e_i", c3())

    def c4():
        for i in e:
            yield ({"i": i}, *_commute(T.y(i), e[i] + T.y(i, True)))
    _run(rep, "y-4", "y_i (e_i + ybar_i) = (e_i + ybar_i) y_i", c4())

    def c5():
        for i in e:
            for bar, n in ((False, r), (True, t)):
                if i < n:
                    s = T.s(i, bar)
                    y = T.y(i, bar)
                    yield ({"i": i, "bar": bar}, *_commute(y, s * y * s - s))
    _run(rep, "y-5", "y_i (s_i y_i s_i - s_i) = (s_i y_i s_i - s_i) y_i", c5())

    def c6():
        for bar, n in ((False, r), (True, t)):
            for i in range(1, n + 1):
                for j in range(1, n):
                    if j not in (i - 1, i):
                        yield ({"i": i, "j": j, "bar": bar}, *_commute(T.s(j, bar), T.y(i, bar)))
    _run(rep, "y-6", "s_j y_i = y_i s_j for j != i-1, i", c6())

    def c7():
        for bar, n, m in ((False, r, t), (True, t, r)):
            # s_j on one side against y on the other
            for i in range(1, m + 1):
                for j in range(1, n):
                    if j != i - 1:
                        yield ({"i": i, "j": j, "bar": bar}, *_commute(T.s(j, bar), T.y(i, not bar)))
    _run(rep, "y-7", "s_j ybar_i = ybar_i s_j for j != i-1", c7())

    def c8():
        for i in range(1, mn):
            for bar in (False, True):
                yield ({"i": i, "bar": bar}, *_commute(e[i + 1], T.y(i, bar)))
    _run(rep, "y-8", "e_{i+1} y_i = y_i e_{i+1}", c8())

    def c9():
        for bar, n in ((False, r), (True, t)):
            for i in range(1, min(mn, n - 1) + 1):
                yield ({"i": i, "bar": bar}, *_commute(T.y(i, bar), T.y(i + 1, bar)))
    _run(rep, "y-9", "y_i y_{i+1} = y_{i+1} y_i", c9())

    def c36():
        for bar, n in ((False, r), (True, t)):
            for i in range(1, min(mn, n - 1) + 1):
                s = T.s(i, bar)
                yield ({"i": i, "bar": bar}, s * T.y(i, bar) * s,
                       T.y(i + 1, bar) - s * e[i] * s + s)
    _run(rep, "sys", "s_i y_i s_i = y_{i+1} - s_i e_i s_i + s_i", c36())

    def cz():
        tctx = _Tower(ctx, corrupt)
        for k in range(2, mn + 2):
            for j in range(1, k):
                for bar in (False, True):
                    yv = tctx.y(k - 1, bar) + e[k - 1]
                    z = A.cycle(j, k - 1, bar) * yv * A.cycle(k - 1, j, bar)
                    yield {"j": j, "k": k, "bar": bar}, z, z_closed_form(j, k, ctx, bar)
    _run(rep, "z-closed", "z_{j,k} = +-delta_1 + sum_l e - sum_{s != j} (s, j)", cz())

    c = central_element(ctx)
    gens = generators(A)
    _run(rep, "central", "c_{r,t} = sum e_{i,j} - sum L_i - sum Lbar_j is central",
         ((({"generator": name}), *_commute(c, g)) for name, g in gens))

    if corrupt is None and ctx.delta != 0 and omega_k:
        _omega_checks(rep, ctx, omega_k, omega_a)
    return rep


def _omega_checks(rep, ctx, kmax, amax):
    kmax = min(kmax, ctx.r, ctx.t, 3)
    d, d1 = ctx.delta, ctx.delta1
    tab = OmegaTable(ctx, kmax, amax)

    def scalar_cases(a, value):
        for k in range(1, kmax + 1):
            B = ctx.at(k - 1, k - 1).alg
            yield {"k": k, "bar": False}, tab.omega[a, k], B.scalar(value[0])
            yield {"k": k, "bar": True}, tab.omegabar[a, k], B.scalar(value[1])
    _run(rep, "omega-0", "omega_{0,k} = omegabar_{0,k} = delta", scalar_cases(0, (d, d)))
    _run(rep, "omega-1", "omega_{1,k} = -omegabar_{1,k} = delta delta_1",
         scalar_cases(1, (d * d1, -d * d1)))

    def central_cases():
        for k in range(2, kmax + 1):
            B = ctx.at(k - 1, k - 1).alg
            for a in range(amax + 1):
                for bar in (False, True):
                    w = (tab.omegabar if bar else tab.omega)[a, k]
                    for name, g in generators(B):
                        yield ({"a": a, "k": k, "bar": bar, "generator": name}, *_commute(w, g))
    _run(rep, "omega-central", "omega_{a,k} central in B_{k-1,k-1}", central_cases())

    def y_cases():
        for k in range(1, kmax):
            big = ctx.at(k + 1, k + 1)
            ys = [y_element(k + 1, "row", big), y_element(k + 1, "bar", big)]
            for a in range(min(amax, 3) + 1):
                for bar in (False, True):
                    w = big.alg.embed((tab.omegabar if bar else tab.omega)[a, k + 1])
                    for side, y in zip(("row", "bar"), ys):
                        yield ({"a": a, "k": k, "bar": bar, "y": side}, *_commute(w, y))
    _run(rep, "omega-y", "omega_{a,k+1} commutes with y_{k+1} and ybar_{k+1}", y_cases())
    rep.extra["omega_2_2"] = tab.omega[2, 2].to_json() if kmax >= 2 and amax >= 2 else None
