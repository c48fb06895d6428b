"""The tensor module M = V^{(x)r} (x) K(lambda_pq) (x) (V*)^{(x)t} and the
operators induced by the Casimir element.

A basis vector is a flat tuple in the tensor order r, ..., 1, 0, 1bar, ..., tbar:
``(k_r, ..., k_1, b, k_1bar, ..., k_tbar)`` with ``k`` indices in 1..m+n and
``b`` a Kac basis vector.  Operators are written on the right, as in the
algebra: ``(v)(AB) = ((v)A)B``.  An ``Operator`` keeps the generator word it
came from; its matrix is produced column by column on demand.
"""
from __future__ import annotations

from itertools import product

from . import words as W
from .linalg import Echelon, as_rational
from .perms import ENYANG, coset_reps, subgroup
from .relations import AFFINE, verify_families
from .superalgebra import KacModule, act_natural, parity
from .tower import ebar_coefficients


CORRECTED = "corrected"   # s_i, sbar_j = -pi(Omega); omega_0 = n - m
PRINTED = "printed"       # every generator is +pi(Omega); omega_0 = m - n


class TensorModule:
    def __init__(self, m, n, r, t, p, q, convention=CORRECTED, limit=300000):
        if convention not in (CORRECTED, PRINTED):
            raise ValueError(f"unknown sign convention {convention!r}")
        self.convention = convention
        self.m, self.n, self.r, self.t = m, n, r, t
        self.p, self.q = as_rational(p), as_rational(q)
        self.kac = KacModule(m, n, p, q)
        self.dim = 2 ** (m * n) * (m + n) ** (r + t)
        if self.dim > limit:
            raise ResourceWarning(f"tensor module of dimension {self.dim} exceeds guard {limit}")
        self._gen = {}
        self._basis = None

    @property
    def params(self):
        return {"m": self.m, "n": self.n, "r": self.r, "t": self.t, "p": self.p, "q": self.q}

    @property
    def omega0(self):
        # e_1^2 on v_i (x) vbar_i sums (-1)^{1+[a]} over a, which is n - m
        if self.convention == PRINTED:
            return self.m - self.n
        return self.n - self.m

    @property
    def omega1(self):
        return self.n * self.q - self.m * self.p

    def omegas(self, amax):
        """omega_a = (p+q-m) omega_{a-1} - p(q-m) omega_{a-2}."""
        w = [self.omega0, self.omega1]
        p, q, m = self.p, self.q, self.m
        while len(w) <= amax:
            w.append((p + q - m) * w[-1] - p * (q - m) * w[-2])
        return w[: amax + 1]

    def omegabars(self, amax):
        w = self.omegas(amax)
        tab = ebar_coefficients(amax, lambda i: w[i], self.omega0)
        return [sum(tab[a, i] * w[i] for i in range(a + 1)) for a in range(amax + 1)]

    # positions -----------------------------------------------------------
    def position(self, label):
        """Tensor position of a label: i > 0 unbarred, 0 the Kac factor, -j barred."""
        r, t = self.r, self.t
        if label > 0:
            if label > r:
                raise IndexError(f"label {label} > r")
            return r - label
        if label == 0:
            return r
        if -label > t:
            raise IndexError(f"label {label} beyond t")
        return r - label

    def basis(self):
        if self._basis is None:
            I = range(1, self.m + self.n + 1)
            out = []
            for left in product(I, repeat=self.r):
                for b in self.kac.basis():
                    for right in product(I, repeat=self.t):
                        out.append(left + (b,) + right)
            self._basis = out
        return self._basis

    def factor_parity(self, pos, x):
        if pos == self.r:
            return len(x) % 2
        return parity(x, self.m)

    def vector_parity(self, v):
        return sum(self.factor_parity(i, x) for i, x in enumerate(v)) % 2

    def act_factor(self, g, pos, x):
        if pos < self.r:
            return act_natural(g, x, self.m, self.n).terms
        if pos == self.r:
            return self.kac.act(g, x)
        return act_natural(g, x, self.m, self.n, dual=True).terms

    def casimir_apply(self, a, b, v):
        """pi_{ab}(Omega) on a basis vector; a, b labels with a before b."""
        pa, pb = self.position(a), self.position(b)
        if not pa < pb:
            raise ValueError("casimir_apply needs a before b in the tensor order")
        m, N = self.m, self.m + self.n
        before_a = sum(self.factor_parity(i, v[i]) for i in range(pa)) % 2
        before_b = sum(self.factor_parity(i, v[i]) for i in range(pb)) % 2
        out = {}
        xa, xb = v[pa], v[pb]
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                ya = self.act_factor((i, j), pa, xa)
                if not ya:
                    continue
                yb = self.act_factor((j, i), pb, xb)
                if not yb:
                    continue
                pg = (parity(i, m) + parity(j, m)) % 2
                sgn = -1 if (parity(j, m) + pg * (before_a + before_b)) % 2 else 1
                for u, cu in ya.items():
                    for w, cw in yb.items():
                        nv = list(v)
                        nv[pa], nv[pb] = u, w
                        nv = tuple(nv)
                        out[nv] = out.get(nv, 0) + sgn * cu * cw
        return {k: c for k, c in out.items() if c}

    def _labels(self, L):
        kind = L[0]
        if kind == "s":
            i = L[1]
            if not 1 <= i < self.r:
                raise IndexError(f"s_{i} out of range for r={self.r}")
            return (i + 1, i)
        if kind == "sb":
            j = L[1]
            if not 1 <= j < self.t:
                raise IndexError(f"sbar_{j} out of range for t={self.t}")
            return (-j, -j - 1)
        if kind == "x":
            return (1, 0)
        if kind == "xb":
            return (0, -1)
        if kind == "e":
            return (1, -1)
        raise ValueError(f"unknown generator {L!r}")

    def gen_column(self, L, v):
        key = (L, v)
        col = self._gen.get(key)
        if col is None:
            a, b = self._labels(L)
            col = self.casimir_apply(a, b, v)
            if self.convention == CORRECTED and L[0] in ("s", "sb"):
                col = {w: -c for w, c in col.items()}
            self._gen[key] = col
        return col

    def apply_letter(self, L, vec):
        out = {}
        for v, c in vec.items():
            for w, cw in self.gen_column(L, v).items():
                out[w] = out.get(w, 0) + c * cw
        return {k: x for k, x in out.items() if x}

    def apply(self, word, vec):
        """(vec) word for a ``Word`` combination and a dict vector."""
        total = {}
        for wd, c in word.terms.items():
            cur = vec
            for L in wd:
                cur = self.apply_letter(L, cur)
                if not cur:
                    break
            for k, x in cur.items():
                total[k] = total.get(k, 0) + c * x
        return {k: x for k, x in total.items() if x}

    def operator(self, word):
        return Operator(self, word)

    def diagonal_action(self, g, v):
        """Comultiplied action of E_g on a basis vector (Koszul signs)."""
        m = self.m
        pg = (parity(g[0], m) + parity(g[1], m)) % 2
        out = {}
        before = 0
        for pos, x in enumerate(v):
            sgn = -1 if (pg * before) % 2 else 1
            for u, c in self.act_factor(g, pos, x).items():
                nv = v[:pos] + (u,) + v[pos + 1:]
                out[nv] = out.get(nv, 0) + sgn * c
            before += self.factor_parity(pos, x)
        return {k: c for k, c in out.items() if c}


class Operator:
    """Endomorphism of a TensorModule given by a generator word combination."""

    __slots__ = ("module", "word", "_cols")

    def __init__(self, module, word):
        self.module = module
        self.word = word
        self._cols = {}

    def column(self, v):
        col = self._cols.get(v)
        if col is None:
            col = self.module.apply(self.word, {v: 1})
            self._cols[v] = col
        return col

    def apply(self, vec):
        out = {}
        for v, c in vec.items():
            for w, x in self.column(v).items():
                out[w] = out.get(w, 0) + c * x
        return {k: x for k, x in out.items() if x}

    def matrix(self, domain=None):
        return {v: self.column(v) for v in (domain or self.module.basis())}

    def flatten(self, domain=None):
        out = {}
        for v in (domain or self.module.basis()):
            for w, c in self.column(v).items():
                out[(v, w)] = c
        return out

    def _wrap(self, other):
        if isinstance(other, Operator):
            return other.word
        return W.ONE * as_rational(other)

    def __add__(self, other):
        return Operator(self.module, self.word + self._wrap(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Operator(self.module, self.word - self._wrap(other))

    def __rsub__(self, other):
        return Operator(self.module, self._wrap(other) - self.word)

    def __neg__(self):
        return Operator(self.module, -self.word)

    def __mul__(self, other):
        if isinstance(other, Operator):
            return Operator(self.module, self.word * other.word)
        return Operator(self.module, self.word * as_rational(other))

    def __rmul__(self, other):
        return Operator(self.module, self.word * as_rational(other))

    def __pow__(self, k):
        return Operator(self.module, self.word ** k)

    def sigma(self):
        return Operator(self.module, self.word.sigma())

    def difference_witness(self, other, domain=None):
        """First basis vector on which the two operators differ, or None."""
        diff = Operator(self.module, self.word - other.word)
        for v in (domain or self.module.basis()):
            col = diff.column(v)
            if col:
                return {"vector": _vec_json(v), "image": _col_json(col)}
        return None

    def is_zero(self, domain=None):
        return self.difference_witness(Operator(self.module, W.Word()), domain) is None

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.difference_witness(other) is None

    __hash__ = None

    def fingerprint(self):
        items = sorted((repr(k), str(c)) for k, c in self.flatten().items())
        return hash(tuple(items))


def _vec_json(v):
    return [list(x) if isinstance(x, tuple) else x for x in v]


def _col_json(col, limit=8):
    items = sorted(col.items(), key=lambda kv: repr(kv[0]))[:limit]
    return [{"coef": str(c), "vector": _vec_json(k)} for k, c in items]


class OperatorModel:
    """Generator operators on M for the relation checkers."""

    def __init__(self, module, omega_max=4, corrupt=None):
        self.module = module
        self.r, self.t = module.r, module.t
        self.omega_max = omega_max
        self.corrupt = corrupt
        self.w = module.omegas(omega_max)
        self.wb = module.omegabars(omega_max)

    def _op(self, w):
        return Operator(self.module, w)

    def one(self):
        return self._op(W.ONE)

    def s(self, i):
        return self._op(W.s(i))

    def sb(self, j):
        return self._op(W.sb(j))

    def e1(self):
        return self._op(W.letter(W.E))

    def x1(self):
        w = W.letter(W.X)
        if self.corrupt == "x1":
            w = w + W.ONE
        return self._op(w)

    def xb1(self):
        return self._op(W.letter(W.XB))

    def omega(self, a):
        return self._op(W.ONE * self.w[a])

    def omegabar(self, a):
        return self._op(W.ONE * self.wb[a])

    def equal(self, a, b):
        return a.difference_witness(b)


def generator_operator(name, module):
    """Operator for "s<i>", "sb<j>", "e1", "x1" or "xb1"."""
    if name == "e1":
        w = W.letter(W.E)
    elif name == "x1":
        w = W.letter(W.X)
    elif name == "xb1":
        w = W.letter(W.XB)
    elif name.startswith("sb"):
        w = W.sb(int(name[2:]))
    elif name.startswith("s"):
        w = W.s(int(name[1:]))
    else:
        raise ValueError(f"unknown generator {name!r}")
    return Operator(module, w)


def swap_closed_form(module, i, v, bar=False):
    """Signed swap of the factors at labels i, i+1 (or their barred versions)."""
    a, b = (-i, -i - 1) if bar else (i + 1, i)
    pa, pb = module.position(a), module.position(b)
    x, y = v[pa], v[pb]
    sgn = -1 if parity(x, module.m) and parity(y, module.m) else 1
    nv = list(v)
    nv[pa], nv[pb] = y, x
    return {tuple(nv): sgn}


def _model(m, n, r, t, p, q, omega_max, corrupt, convention=CORRECTED):
    return OperatorModel(TensorModule(m, n, r, t, p, q, convention), omega_max, corrupt)


def verify_realization(m, n, r, t, p, q, omega_max=4, corrupt=None, jobs=1,
                       convention=CORRECTED):
    from functools import partial
    if r < 1 or t < 1:
        raise ValueError("the relation suite needs r, t >= 1")
    M = _model(m, n, r, t, p, q, omega_max, corrupt, convention)
    mod = M.module
    params = dict(mod.params)
    params["convention"] = convention
    params["omega"] = M.w
    if corrupt:
        params["corrupt"] = corrupt
    rebuild = partial(_model, m, n, r, t, p, q, omega_max, corrupt, convention)
    rep = verify_families(M, AFFINE, "verify-schur-weyl", params, jobs, rebuild)
    zero = Operator(mod, W.Word())
    x, xb = M.x1(), M.xb1()
    qr = (x - mod.p) * (x + mod.m - mod.q)
    qb = (xb + mod.p - mod.n) * (xb + mod.q)
    rep.check("quad-row", "(x_1 - p)(x_1 + m - q) = 0", qr.is_zero(),
              qr.difference_witness(zero))
    rep.check("quad-bar", "(xbar_1 + p - n)(xbar_1 + q) = 0", qb.is_zero(),
              qb.difference_witness(zero))
    wb = M.wb
    rep.check("omegabar-01", "omegabar_0 = omega_0 and omegabar_1 = -omega_1",
              wb[0] == M.w[0] and wb[1] == -M.w[1], {"omegabar": [str(x) for x in wb]})
    return rep


# ---------------------------------------------------------------- monomials

def monomial_word(c, alpha, f, beta, w, d):
    """c^{-1} x^alpha e^f xbar^beta w d; c, d CosetReps and w a (row, bar) pair."""
    if any(a not in (0, 1) for a in alpha) or any(b not in (0, 1) for b in beta):
        raise ValueError("exponents must be 0 or 1")
    cw = W.ONE if c is None else W.word(c.inverse_word())
    dw = W.ONE if d is None else W.word(d.word)
    ww = W.ONE if w is None else W.perm_word(*w)
    return cw * W.x_power(alpha) * W.e_power(f) * W.xb_power(beta) * ww * dw


def monomial_specs(r, t):
    out = []
    for f in range(min(r, t) + 1):
        reps = coset_reps(r, t, f, ENYANG)
        ws = [g for g in subgroup(r, t, f, ENYANG)
              if all(g[0](i) == i for i in range(1, f + 1))
              and all(g[1](j) == j for j in range(1, f + 1))]
        for c in reps:
            for alpha in product((0, 1), repeat=r):
                for beta in product((0, 1), repeat=t):
                    for w in ws:
                        for d in reps:
                            out.append((c, alpha, f, beta, w, d))
    return out


def monomial_operator(spec, module):
    return Operator(module, monomial_word(*spec))


def endomorphism_dimension(m, n, r, t, p, q, sample=None, duplicate=False):
    """Rank of the monomial operators flattened over (domain, codomain) pairs.

    With ``sample`` the operators are only evaluated on those domain vectors
    (``"highest"`` selects the vectors with the Kac factor v_lambda); the result
    is then a lower bound, and exact whenever it reaches the operator count."""
    mod = TensorModule(m, n, r, t, p, q)
    if r + t > min(m, n):
        raise ValueError("needs r + t <= min(m, n)")
    specs = monomial_specs(r, t)
    ops = [monomial_operator(sp, mod) for sp in specs]
    if duplicate:
        ops.append(ops[-1])
    domain = None
    if sample == "highest":
        I = range(1, m + n + 1)
        domain = [left + ((),) + right for left in product(I, repeat=r)
                  for right in product(I, repeat=t)]
    elif sample is not None:
        domain = list(sample)
    rk = _rank_ops(ops, domain)
    return rk, len(ops)


def _rank_ops(ops, domain):
    cols = {}
    ech = Echelon()
    for op in ops:
        row = {}
        for k, c in op.flatten(domain).items():
            if k not in cols:
                cols[k] = len(cols)
            row[cols[k]] = c
        ech.add(row)
    return ech.rank
