"""The Lie superalgebra gl(m|n): matrix units, the natural and dual modules,
and the Kac module K(lambda_pq) with its exterior-algebra basis."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .linalg import Element, as_rational


def parity(i, m):
    return 0 if i <= m else 1


def elem_parity(g, m):
    return (parity(g[0], m) + parity(g[1], m)) % 2


class GlElement(Element):
    """Linear combination of matrix units (i, j)."""
    __slots__ = ()


def bracket(a, b, m, n):
    """[E_ij, E_kl] = delta_jk E_il - (-1)^{([i]+[j])([k]+[l])} delta_li E_kj."""
    (i, j), (k, l) = a, b
    for x in (i, j, k, l):
        if not 1 <= x <= m + n:
            raise IndexError(f"index {x} outside 1..{m + n}")
    terms = {}
    if j == k:
        terms[(i, l)] = terms.get((i, l), 0) + 1
    if l == i:
        sgn = -1 if (elem_parity(a, m) * elem_parity(b, m)) % 2 == 0 else 1
        terms[(k, j)] = terms.get((k, j), 0) + sgn
    return GlElement(terms)


def act_natural(g, v, m, n, dual=False):
    """E_ij v_k = delta_jk v_i; on the dual, E_ab vbar_i = -(-1)^{[a]([a]+[b])} delta_ia vbar_b."""
    a, b = g
    if not dual:
        return Element({a: 1}) if b == v else Element()
    if v != a:
        return Element()
    pa, pb = parity(a, m), parity(b, m)
    sgn = -1 if (pa * (pa + pb)) % 2 == 0 else 1
    return Element({b: sgn})


def typicality(p, q, m, n):
    """lambda_pq is typical iff p-q is not an integer, or p-q <= -m, or p-q >= n."""
    d = Fraction(as_rational(p)) - Fraction(as_rational(q))
    if d.denominator != 1:
        return True
    return d <= -m or d >= n


def rho_shift(weight, m, n):
    """lambda^rho with lambda_i + 1 - i (i <= m) and lambda_i + 2m - i (i > m)."""
    out = []
    for i, lam in enumerate(weight, 1):
        out.append(lam + (1 - i if i <= m else 2 * m - i))
    return out


def typical_by_rho(weight, m, n):
    rho = rho_shift(weight, m, n)
    return all(rho[i] + rho[j] != 0 for i in range(m) for j in range(m, m + n))


def weight_pq(p, q, m, n):
    return [as_rational(p)] * m + [-as_rational(q)] * n


class KacModule:
    """K(lambda_pq), basis b^sigma = prod E_{m+i,j}^{sigma_ij} v_lambda.

    A basis vector is a sorted tuple of pairs (i, j), 1 <= i <= n, 1 <= j <= m,
    the factors E_{m+i,j} present, written in lexicographic order from left
    to right."""

    def __init__(self, m, n, p, q):
        self.m, self.n = m, n
        self.p, self.q = as_rational(p), as_rational(q)
        self._cache = {}

    def basis(self):
        pairs = [(i, j) for i in range(1, self.n + 1) for j in range(1, self.m + 1)]
        out = []
        for bits in product((0, 1), repeat=len(pairs)):
            out.append(tuple(pr for pr, b in zip(pairs, bits) if b))
        return sorted(out, key=lambda s: (len(s), s))

    @staticmethod
    def vector_parity(b):
        return len(b) % 2

    def weight(self, b):
        w = weight_pq(self.p, self.q, self.m, self.n)
        for i, j in b:
            w[j - 1] -= 1
            w[self.m + i - 1] += 1
        return w

    def _lower(self, pair, b):
        # E_{m+i,j} . b^tau : insert the factor at its canonical place
        if pair in b:
            return {}
        pos = sum(1 for x in b if x < pair)
        nb = tuple(sorted(b + (pair,)))
        return {nb: -1 if pos % 2 else 1}

    def act(self, g, b):
        """E_g . b as a dict {basis vector: coefficient}."""
        key = (g, b)
        if key in self._cache:
            return self._cache[key]
        m, n = self.m, self.n
        i, j = g
        if not (1 <= i <= m + n and 1 <= j <= m + n):
            raise IndexError(f"E_{g} outside gl({m}|{n})")
        if not b:
            if i == j:
                out = {(): self.p if i <= m else -self.q}
            elif i > m and j <= m:
                out = self._lower((i - m, j), ())
            else:
                out = {}
        else:
            first, tail = b[0], b[1:]
            F = (m + first[0], first[1])
            out = {}
            # g F tail = [g, F] tail + (-1)^{[g]} F (g tail)
            for h, c in bracket(g, F, m, n):
                for v, cv in self.act(h, tail).items():
                    out[v] = out.get(v, 0) + c * cv
            sgn = -1 if elem_parity(g, m) else 1
            for v, cv in self.act(g, tail).items():
                for w, cw in self._lower(first, v).items():
                    out[w] = out.get(w, 0) + sgn * cv * cw
            out = {v: c for v, c in out.items() if c}
        self._cache[key] = out
        return out

    def act_element(self, g, x):
        out = {}
        for b, c in x.items():
            for v, cv in self.act(g, b).items():
                out[v] = out.get(v, 0) + c * cv
        return {v: c for v, c in out.items() if c}


def kac_act(g, b, p, q, m, n):
    return Element(KacModule(m, n, p, q).act(g, b))
