"""Exact rational linear algebra over arbitrary hashable basis keys.

Scalars are Python ints or ``fractions.Fraction``; both are exact and mix
freely.  ``Element`` is a finite formal linear combination of basis keys;
subclasses give it a multiplication by overriding ``_mul_keys``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def as_rational(x):
    """Parse an int, Fraction or an ``"a/b"`` string into an exact scalar."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_rational(Fraction(x.strip()))
    raise TypeError(f"not an exact rational: {x!r}")


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Element:
    """Finite linear combination ``sum c_k * k`` with no zero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                if c:
                    d[k] = d.get(k, 0) + c
            d = {k: _clean(c) for k, c in d.items() if c}
        self.terms = d

    # construction helpers that preserve the subclass and its parent data
    def _new(self, terms):
        obj = object.__new__(type(self))
        obj.terms = terms
        self._copy_context(obj)
        return obj

    def _copy_context(self, obj):
        pass

    @classmethod
    def monomial(cls, key, coef=1):
        return cls({key: coef})

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def support(self):
        return sorted(self.terms)

    def __add__(self, other):
        if not isinstance(other, Element):
            if other == 0:
                return self
            return NotImplemented
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = _clean(v)
            else:
                d.pop(k, None)
        return self._new(d)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return self._new({})
        return self._new({k: _clean(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Element):
            return self.product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def product(self, other):
        d = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                for k, c in self._mul_keys(k1, k2):
                    d[k] = d.get(k, 0) + c * c1 * c2
        return self._new({k: _clean(c) for k, c in d.items() if c})

    def _mul_keys(self, k1, k2):
        raise TypeError(f"{type(self).__name__} has no multiplication")

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*{k!r}" for k, c in sorted(self.terms.items())]
        return " + ".join(parts)


class SparseMatrix:
    """Rows are ``Element``s (or dicts) over a common set of column keys."""

    def __init__(self, rows, columns=None):
        self.rows = [r.terms if isinstance(r, Element) else dict(r) for r in rows]
        if columns is None:
            keys = set()
            for r in self.rows:
                keys.update(r)
            columns = sorted(keys)
        self.columns = list(columns)
        self.index = {k: i for i, k in enumerate(self.columns)}
        if len(self.index) != len(self.columns):
            raise ValueError("duplicate column keys")
        for r in self.rows:
            for k in r:
                if k not in self.index:
                    raise KeyError(f"row key {k!r} missing from column index")

    @property
    def ncols(self):
        return len(self.columns)

    def dense_rows(self):
        """Rows re-keyed by column position."""
        idx = self.index
        return [{idx[k]: v for k, v in r.items() if v} for r in self.rows]


def _reduce(row, pivots):
    # Eliminate pivot columns from ``row`` in increasing column order.
    # Returns the reduced row and the multipliers used.
    used = {}
    row = dict(row)
    done = set()
    while True:
        cands = [c for c in row if c in pivots and c not in done]
        if not cands:
            return row, used
        c = min(cands)
        done.add(c)
        f = row[c]
        prow = pivots[c]
        for k, v in prow.items():
            nv = row.get(k, 0) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
        used[c] = f


class Echelon:
    """Incremental echelon form; pivot = smallest surviving column."""

    def __init__(self, track=False):
        self.pivots = {}
        self.track = track
        self.combos = {}   # pivot column -> {original row index: coefficient}
        self.count = 0

    def add(self, row):
        """Insert a row (dict over int columns).  Returns True if it was independent."""
        idx = self.count
        self.count += 1
        reduced, used = _reduce(row, self.pivots)
        if not reduced:
            return False
        c = min(reduced)
        inv = Fraction(1) / reduced[c]
        prow = {k: _clean(v * inv) for k, v in reduced.items()}
        if self.track:
            combo = {idx: inv}
            for pc, f in used.items():
                for j, g in self.combos[pc].items():
                    combo[j] = combo.get(j, 0) - f * g * inv
            self.combos[c] = {j: g for j, g in combo.items() if g}
        self.pivots[c] = prow
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def express(self, row):
        """Coefficients (by original row index) reproducing ``row``, or None."""
        reduced, used = _reduce(row, self.pivots)
        if reduced:
            return None
        out = {}
        for pc, f in used.items():
            for j, g in self.combos[pc].items():
                out[j] = out.get(j, 0) + f * g
        return out


def rank(M):
    """Rank over the rationals of a ``SparseMatrix`` (or list of rows)."""
    if not isinstance(M, SparseMatrix):
        M = SparseMatrix(M)
    ech = Echelon()
    for r in M.dense_rows():
        ech.add(r)
    return ech.rank


class SpanSolver:
    """Precomputed elimination for repeated ``solve_in_span`` queries."""

    def __init__(self, basis):
        if not basis:
            raise ValueError("basis must be nonempty")
        rows = [b.terms if isinstance(b, Element) else dict(b) for b in basis]
        self.n = len(rows)
        keys = set()
        for r in rows:
            keys.update(r)
        self.index = {k: i for i, k in enumerate(sorted(keys, key=_sort_key))}
        self.echelon = Echelon(track=True)
        for r in rows:
            self.echelon.add({self.index[k]: v for k, v in r.items()})

    @property
    def rank(self):
        return self.echelon.rank

    def solve(self, target):
        terms = target.terms if isinstance(target, Element) else dict(target)
        row = {}
        for k, v in terms.items():
            if k not in self.index:
                return None
            row[self.index[k]] = v
        out = self.echelon.express(row)
        if out is None:
            return None
        return [_clean(out.get(i, 0)) for i in range(self.n)]


def _sort_key(k):
    return (type(k).__name__, k)


def solve_in_span(target, basis):
    """Coefficients ``c`` with ``sum c_i basis[i] == target``; None if not in the span."""
    return SpanSolver(basis).solve(target)


def kernel(M):
    """Basis of ``{v : M v = 0}`` as coefficient lists indexed by column position."""
    if not isinstance(M, SparseMatrix):
        M = SparseMatrix(M)
    n = M.ncols
    ech = Echelon()
    for r in M.dense_rows():
        ech.add(r)
    # back-substitute to reduced row echelon form
    piv = dict(ech.pivots)
    for c in sorted(piv, reverse=True):
        prow = piv[c]
        for c2 in piv:
            if c2 < c and c in piv[c2]:
                f = piv[c2][c]
                row = dict(piv[c2])
                for k, v in prow.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                piv[c2] = row
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, prow in piv.items():
            if fc in prow:
                v[c] = _clean(-prow[fc])
        basis.append(v)
    return basis
