"""Permutations, Jucys-Murphy sums, cycles s_{i,j} and coset representatives.

Permutations act on the right: ``(i)(u*v) = ((i)u)v``.  This is the order in
which diagrams multiply (the left factor is stacked on top), so a product of
permutations here is the same as the product of their diagrams.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb, factorial

from .linalg import Element


class Perm:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        im = list(range(1, n + 1))
        im[i - 1], im[j - 1] = j, i
        return cls(im)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Perm(other.images[a - 1] for a in self.images)

    def inverse(self):
        inv = [0] * self.n
        for i, a in enumerate(self.images, 1):
            inv[a - 1] = i
        return Perm(inv)

    def is_identity(self):
        return all(a == i for i, a in enumerate(self.images, 1))

    def reduced_word(self):
        """Indices i_1..i_l with s_{i_1}*...*s_{i_l} == self, l = length."""
        # peel off right descents: w = w' s_i whenever (w)^{-1} moves i past i+1
        word = []
        w = self
        while not w.is_identity():
            inv = w.inverse().images
            for i in range(1, self.n):
                # (a)w = i+1 and (b)w = i with a < b means w = w' s_i, shorter
                if inv[i] < inv[i - 1]:
                    w = w * Perm.transposition(self.n, i, i + 1)
                    word.append(i)
                    break
        return word[::-1]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


class GroupElement(Element):
    """Element of a group algebra; keys are group elements with ``*``."""

    __slots__ = ()

    def _mul_keys(self, k1, k2):
        return ((k1 * k2, 1),)


def transposition(n, i, j):
    return Perm.transposition(n, i, j)


def jucys_murphy(i, n):
    """L_i = sum_{j<i} (j,i) in the group algebra of S_n; L_1 = 0."""
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")
    return GroupElement({Perm.transposition(n, j, i): 1 for j in range(1, i)})


def cycle(i, j, n):
    """s_{i,j} = s_i s_{i+1} ... s_{j-1} for i < j; identity for i = j; inverse for i > j."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"cycle indices ({i},{j}) out of range 1..{n}")
    if i > j:
        return cycle(j, i, n).inverse()
    w = Perm.identity(n)
    for k in range(i, j):
        w = w * Perm.transposition(n, k, k + 1)
    return w


def cycle_word(i, j):
    """Simple-reflection indices spelling s_{i,j}."""
    if i <= j:
        return list(range(i, j))
    return list(range(i - 1, j - 1, -1))


class CosetRep:
    """A coset representative c = (row permutation, bar permutation) with its word.

    ``word`` is a tuple of letters ``('s', i)`` / ``('sb', j)``; ``cycles`` keeps
    the factorisation as (kind, i, j) triples; ``support`` lists the row
    positions i_k that were chosen (used for the kappa vectors).
    """

    __slots__ = ("f", "row", "bar", "word", "cycles", "support", "convention")

    def __init__(self, f, r, t, cycles, support, convention):
        self.f = f
        self.cycles = tuple(cycles)
        self.support = tuple(support)
        self.convention = convention
        row, bar = Perm.identity(r), Perm.identity(t)
        word = []
        for kind, a, b in self.cycles:
            if kind == "s":
                row = row * cycle(a, b, r)
            else:
                bar = bar * cycle(a, b, t)
            word.extend((kind, k) for k in cycle_word(a, b))
        self.row, self.bar = row, bar
        self.word = tuple(word)

    @property
    def element(self):
        return (self.row, self.bar)

    def inverse_word(self):
        return tuple(reversed(self.word))

    def is_identity(self):
        return self.row.is_identity() and self.bar.is_identity()

    def __repr__(self):
        return f"CosetRep(f={self.f}, cycles={self.cycles})"


ENYANG = "enyang"      # first f strands matched, reps written s_{k,i_k} sb_{k,j_k}
TOP = "top"            # last f strands matched, reps written s_{r-f+1,i} ... s_{r,i_r}


def _reps_enyang(r, t, f):
    out = []
    for rows in combinations(range(1, r + 1), f):
        # rows = (i_1 < ... < i_f); bars j_k in k..t independently
        for bars in product(*[range(k, t + 1) for k in range(1, f + 1)]):
            cycles = []
            for k in range(f, 0, -1):
                cycles.append(("s", k, rows[k - 1]))
                cycles.append(("sb", k, bars[k - 1]))
            out.append(CosetRep(f, r, t, cycles, rows, ENYANG))
    return out


def _reps_top(r, t, f):
    out = []
    ks_r = list(range(r - f + 1, r + 1))
    ks_t = list(range(t - f + 1, t + 1))
    for rows in combinations(range(1, r + 1), f):
        # rows sorted increasingly give i_{r-f+1} < ... < i_r
        for bars in product(*[range(1, k + 1) for k in ks_t]):
            cycles = []
            for idx in range(f):
                cycles.append(("s", ks_r[idx], rows[idx]))
                cycles.append(("sb", ks_t[idx], bars[idx]))
            out.append(CosetRep(f, r, t, cycles, rows, TOP))
    return out


def subgroup(r, t, f, convention):
    """Elements of the subgroup whose right cosets the representatives index.

    ENYANG: S on strands f+1..r, S-bar on f+1..t, and the diagonal copy of S_f
    generated by s_i sb_i (i < f).  TOP: the same with the first r-f / t-f
    strands free and the diagonal acting on the last f strands.
    """
    out = []
    if convention == ENYANG:
        free_r = range(f + 1, r + 1)
        free_t = range(f + 1, t + 1)
        diag_r = list(range(1, f + 1))
        diag_t = list(range(1, f + 1))
    elif convention == TOP:
        free_r = range(1, r - f + 1)
        free_t = range(1, t - f + 1)
        # s_{r-i} pairs with sb_{t-i}: strand r-i+1 <-> t-i+1
        diag_r = list(range(r - f + 1, r + 1))
        diag_t = list(range(t - f + 1, t + 1))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    for pr in _perms_on(list(free_r), r):
        for pt in _perms_on(list(free_t), t):
            for g in permutations(range(f)):
                dr = list(range(1, r + 1))
                dt = list(range(1, t + 1))
                for a, b in enumerate(g):
                    dr[diag_r[a] - 1] = diag_r[b]
                    dt[diag_t[a] - 1] = diag_t[b]
                out.append((pr * Perm(dr), pt * Perm(dt)))
    return out


def _perms_on(points, n):
    for img in permutations(points):
        im = list(range(1, n + 1))
        for a, b in zip(points, img):
            im[a - 1] = b
        yield Perm(im)


def coset_reps(r, t, f, convention=ENYANG, certify=None):
    """Representatives of the right cosets H\\(S_r x S_t) for the chosen convention.

    With ``certify`` (default: when r+t <= 6) the list is checked to partition
    the group exactly; larger sizes are checked by cardinality only.
    """
    if not 0 <= f <= min(r, t):
        raise ValueError(f"need 0 <= f <= min(r,t), got f={f}")
    reps = _reps_enyang(r, t, f) if convention == ENYANG else _reps_top(r, t, f)
    expected = comb(r, f) * comb(t, f) * factorial(f)
    if len(reps) != expected:
        raise AssertionError(f"{len(reps)} representatives, expected {expected}")
    if certify is None:
        certify = r + t <= 6
    if certify and not is_right_transversal(reps, subgroup(r, t, f, convention), r, t):
        raise AssertionError("representatives do not form a right transversal")
    return reps


def is_right_transversal(reps, H, r, t):
    seen = set()
    for c in reps:
        for h in H:
            g = (h[0] * c.row, h[1] * c.bar)
            if g in seen:
                return False
            seen.add(g)
    return len(seen) == factorial(r) * factorial(t)
