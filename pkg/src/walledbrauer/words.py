"""Formal linear combinations of generator words.

Letters are ``('s', i)``, ``('sb', j)``, ``('e',)`` for e_1, ``('x',)`` for x_1
and ``('xb',)`` for xbar_1.  A word evaluates into any model exposing the
generator methods used by the relation checkers; the anti-involution sigma
fixing every letter is word reversal.
"""
from __future__ import annotations

from .linalg import Element
from .perms import cycle_word

E = ("e",)
X = ("x",)
XB = ("xb",)


def sl(i):
    return ("s", i)


def sbl(j):
    return ("sb", j)


class Word(Element):
    """Element of the free algebra on the letters; keys are tuples of letters."""

    __slots__ = ()

    def _mul_keys(self, k1, k2):
        return ((k1 + k2, 1),)

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Word({(): other})
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = Word({(): other})
        return super().__sub__(other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k):
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def sigma(self):
        return Word({w[::-1]: c for w, c in self.terms.items()})

    def shift(self, k):
        """Apply s_i -> s_{i+k}, sbar_j -> sbar_{j+k} (only for words without e, x)."""
        out = {}
        for w, c in self.terms.items():
            nw = []
            for L in w:
                if L[0] not in ("s", "sb"):
                    raise ValueError("only permutation words can be shifted")
                nw.append((L[0], L[1] + k))
            out[tuple(nw)] = c
        return Word(out)

    def max_indices(self):
        r = t = 0
        for w in self.terms:
            for L in w:
                if L[0] == "s":
                    r = max(r, L[1] + 1)
                elif L[0] == "sb":
                    t = max(t, L[1] + 1)
        return r, t


ONE = Word({(): 1})


def letter(L):
    return Word({(L,): 1})


def word(letters, coef=1):
    return Word({tuple(letters): coef})


def s(i):
    return letter(sl(i))


def sb(j):
    return letter(sbl(j))


def cycle(i, j, bar=False):
    kind = "sb" if bar else "s"
    return word((kind, k) for k in cycle_word(i, j))


def e(i=1, j=1):
    """e_{i,j} = sbar_{j,1} s_{i,1} e_1 s_{1,i} sbar_{1,j}."""
    return cycle(j, 1, True) * cycle(i, 1) * letter(E) * cycle(1, i) * cycle(1, j, True)


def x(i=1):
    """x_i = s_{i-1} x_{i-1} s_{i-1} - s_{i-1}."""
    out = letter(X)
    for k in range(1, i):
        out = s(k) * out * s(k) - s(k)
    return out


def xb(j=1):
    out = letter(XB)
    for k in range(1, j):
        out = sb(k) * out * sb(k) - sb(k)
    return out


def perm_word(row=None, bar=None):
    """Word for (w, wbar) in S_r x S_t from reduced decompositions."""
    letters = []
    if row is not None:
        letters += [sl(i) for i in row.reduced_word()]
    if bar is not None:
        letters += [sbl(j) for j in bar.reduced_word()]
    return word(letters)


def e_power(f):
    """e^f = e_1 e_2 ... e_f (e^0 = 1)."""
    out = ONE
    for i in range(1, f + 1):
        out = out * e(i, i)
    return out


def x_power(alpha):
    out = ONE
    for i, a in enumerate(alpha, 1):
        out = out * x(i) ** a
    return out


def xb_power(beta):
    out = ONE
    for j, b in enumerate(beta, 1):
        out = out * xb(j) ** b
    return out


def evaluate(w, model):
    """Image of a word combination in ``model``."""
    gens = {}

    def gen(L):
        if L not in gens:
            if L[0] == "s":
                gens[L] = model.s(L[1])
            elif L[0] == "sb":
                gens[L] = model.sb(L[1])
            elif L[0] == "e":
                gens[L] = model.e1()
            elif L[0] == "x":
                gens[L] = model.x1()
            elif L[0] == "xb":
                gens[L] = model.xb1()
            else:
                raise ValueError(f"unknown letter {L!r}")
        return gens[L]

    total = None
    for wd, c in sorted(w.terms.items()):
        term = model.one()
        for L in wd:
            term = term * gen(L)
        term = term * c
        total = term if total is None else total + term
    if total is None:
        return model.one() * 0
    return total


def to_text(w):
    """Readable rendering such as ``2*s1.e.x - sb2``."""
    if not w.terms:
        return "0"
    parts = []
    for wd, c in sorted(w.terms.items()):
        body = ".".join(L[0] + (str(L[1]) if len(L) > 1 else "") for L in wd) or "1"
        parts.append(f"{c}*{body}")
    return " + ".join(parts)
