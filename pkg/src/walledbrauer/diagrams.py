"""Walled Brauer diagrams and the algebra B_{r,t}(delta) they span.

Each row carries the vertices r, ..., 1, 1bar, ..., tbar.  Internally a vertex
is an integer: position p in 0..N-1 on the top row and N+p on the bottom row,
with N = r+t, where unbarred label i sits at p = i-1 and barred label j at
p = r+j-1.  A diagram is stored as its involution ``partner`` on 0..2N-1.

Products stack the left factor on top of the right one.
"""
from __future__ import annotations

from itertools import permutations

from .linalg import Element, as_rational
from .perms import Perm, cycle_word


class WalledDiagram:
    __slots__ = ("r", "t", "partner", "_hash")

    def __init__(self, r, t, partner, check=True):
        self.r, self.t = r, t
        self.partner = tuple(partner)
        self._hash = hash((r, t, self.partner))
        if check:
            self._validate()

    def _validate(self):
        N = self.r + self.t
        P = self.partner
        if len(P) != 2 * N:
            raise ValueError("matching has the wrong number of vertices")
        for v, w in enumerate(P):
            if not 0 <= w < 2 * N or w == v or P[w] != v:
                raise ValueError(f"not a perfect matching at vertex {v}")
            if v < w:
                same_row = (v < N) == (w < N)
                bar_v = (v % N) >= self.r
                bar_w = (w % N) >= self.r
                if same_row and bar_v == bar_w:
                    raise ValueError("horizontal edge does not cross the wall")
                if not same_row and bar_v != bar_w:
                    raise ValueError("vertical edge crosses the wall")

    # label helpers -------------------------------------------------------
    def vertex(self, row, label):
        """Vertex id of label (positive unbarred, negative barred) on row 0/1."""
        return vertex_id(self.r, self.t, row, label)

    def label(self, v):
        N = self.r + self.t
        row, p = divmod(v, N)
        lab = p + 1 if p < self.r else -(p - self.r + 1)
        return row, lab

    def edges(self):
        """Sorted edge list of ((row, label), (row, label)) pairs."""
        out = []
        for v, w in enumerate(self.partner):
            if v < w:
                out.append(tuple(sorted((self.label(v), self.label(w)))))
        return sorted(out)

    def has_edge(self, a, b):
        return self.partner[a] == b

    def to_json(self):
        return {"r": self.r, "t": self.t,
                "edges": [[[r1, l1], [r2, l2]] for (r1, l1), (r2, l2) in self.edges()]}

    @classmethod
    def from_edges(cls, r, t, edges):
        N = r + t
        P = [None] * (2 * N)
        for (r1, l1), (r2, l2) in edges:
            a, b = vertex_id(r, t, r1, l1), vertex_id(r, t, r2, l2)
            P[a], P[b] = b, a
        if any(x is None for x in P):
            raise ValueError("edge list does not cover every vertex")
        return cls(r, t, P)

    @classmethod
    def from_json(cls, obj):
        return cls.from_edges(obj["r"], obj["t"],
                              [tuple(map(tuple, e)) for e in obj["edges"]])

    def reflect(self):
        """Swap top and bottom rows (the anti-involution on diagrams)."""
        N = self.r + self.t
        P = self.partner
        flip = lambda v: v + N if v < N else v - N
        Q = [0] * (2 * N)
        for v in range(2 * N):
            Q[flip(v)] = flip(P[v])
        return WalledDiagram(self.r, self.t, Q, check=False)

    def horizontal_count(self):
        N = self.r + self.t
        return sum(1 for v in range(N) if self.partner[v] < N)

    def __eq__(self, other):
        return (isinstance(other, WalledDiagram) and self.r == other.r
                and self.t == other.t and self.partner == other.partner)

    def __lt__(self, other):
        return (self.r, self.t, self.partner) < (other.r, other.t, other.partner)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"D{self.edges()}"


def vertex_id(r, t, row, label):
    N = r + t
    if label > 0:
        if label > r:
            raise IndexError(f"unbarred label {label} > r={r}")
        p = label - 1
    elif label < 0:
        if -label > t:
            raise IndexError(f"barred label {-label} > t={t}")
        p = r - label - 1
    else:
        raise IndexError("label 0 is not a vertex")
    return p + N * row


def compose(D1, D2, delta=None):
    """Stack D1 over D2.  Returns (number of closed loops, resulting diagram);
    with ``delta`` given returns a DiagramElement delta^loops * D3 instead."""
    if (D1.r, D1.t) != (D2.r, D2.t):
        raise ValueError("diagrams of different sizes")
    N = D1.r + D1.t
    A, B = D1.partner, D2.partner
    res = [0] * (2 * N)
    seen = [False] * N
    for start in range(2 * N):
        # boundary vertices: top of D1 (start < N) and bottom of D2 (start >= N)
        if start < N:
            side, cur = 0, start
        else:
            side, cur = 1, start
        while True:
            nxt = (A if side == 0 else B)[cur]
            if side == 0:
                if nxt < N:
                    end = nxt
                    break
                m = nxt - N
                seen[m] = True
                side, cur = 1, m
            else:
                if nxt >= N:
                    end = nxt
                    break
                seen[nxt] = True
                side, cur = 0, nxt + N
        res[start] = end
    loops = 0
    for m in range(N):
        if seen[m]:
            continue
        loops += 1
        cur = m
        while True:
            seen[cur] = True
            a = A[cur + N] - N        # along D1 to another middle vertex
            seen[a] = True
            cur = B[a]                # along D2 back to a middle vertex
            if cur == m:
                break
    D3 = WalledDiagram(D1.r, D1.t, res, check=False)
    if delta is None:
        return loops, D3
    alg = WalledBrauer(D1.r, D1.t, delta)
    return alg.element({D3: as_rational(delta) ** loops})


def enumerate_diagrams(r, t, limit=7):
    """All walled (r,t)-diagrams, in a fixed order; there are (r+t)! of them."""
    N = r + t
    if N > limit:
        raise ResourceWarning(f"r+t={N} exceeds the enumeration guard {limit}")
    out = []
    for pi in permutations(range(N)):
        # permutation diagram top p -> bottom pi(p), then swap barred vertices
        # between the two rows
        P = [0] * (2 * N)
        for p in range(N):
            P[p] = N + pi[p]
            P[N + pi[p]] = p
        flip = lambda v: (v + N if v < N else v - N) if (v % N) >= r else v
        Q = [0] * (2 * N)
        for v in range(2 * N):
            Q[flip(v)] = flip(P[v])
        out.append(WalledDiagram(r, t, Q, check=False))
    out.sort()
    return out


class WalledBrauer:
    """The algebra context: sizes and the loop parameter delta."""

    def __init__(self, r, t, delta):
        self.r, self.t = r, t
        self.delta = as_rational(delta)
        self.N = r + t
        self._cache = {}

    def __repr__(self):
        return f"WalledBrauer({self.r}, {self.t}, delta={self.delta})"

    def __eq__(self, other):
        return (isinstance(other, WalledBrauer)
                and (self.r, self.t, self.delta) == (other.r, other.t, other.delta))

    def __hash__(self):
        return hash((self.r, self.t, self.delta))

    def element(self, terms=None):
        return DiagramElement(self, terms)

    def zero(self):
        return self.element()

    def diagram(self, D):
        return self.element({D: 1})

    def identity_diagram(self):
        N = self.N
        return WalledDiagram(self.r, self.t, [v + N for v in range(N)] + list(range(N)),
                             check=False)

    def one(self):
        return self.diagram(self.identity_diagram())

    def scalar(self, c):
        return self.one().scale(as_rational(c))

    def basis(self):
        return enumerate_diagrams(self.r, self.t)

    # generators ------------------------------------------------------------
    def _strands(self, pairs):
        # identity strands except for the listed (top label, bottom label) pairs
        # and horizontal edges given as (row, label, label)
        r, t, N = self.r, self.t, self.N
        P = list(range(N, 2 * N)) + list(range(N))
        touched = {}
        for item in pairs:
            if item[0] == "v":
                _, a, b = item
                touched[vertex_id(r, t, 0, a)] = vertex_id(r, t, 1, b)
            else:
                _, row, a, b = item
                touched[vertex_id(r, t, row, a)] = vertex_id(r, t, row, b)
        for v, w in touched.items():
            P[v], P[w] = w, v
        return WalledDiagram(r, t, P)

    def s_diagram(self, i):
        if not 1 <= i < self.r:
            raise IndexError(f"s_{i} needs 1 <= i < r={self.r}")
        return self._strands([("v", i, i + 1), ("v", i + 1, i)])

    def sb_diagram(self, j):
        if not 1 <= j < self.t:
            raise IndexError(f"sbar_{j} needs 1 <= j < t={self.t}")
        return self._strands([("v", -j, -j - 1), ("v", -j - 1, -j)])

    def e_diagram(self, i=1, j=1):
        """Horizontal edges [i, jbar] on both rows, identity elsewhere."""
        if not (1 <= i <= self.r and 1 <= j <= self.t):
            raise IndexError(f"e_{{{i},{j}}} out of range for ({self.r},{self.t})")
        return self._strands([("h", 0, i, -j), ("h", 1, i, -j)])

    def s(self, i):
        return self.diagram(self.s_diagram(i))

    def sb(self, j):
        return self.diagram(self.sb_diagram(j))

    def e1(self):
        return self.diagram(self.e_diagram(1, 1))

    def perm(self, row=None, bar=None):
        """Diagram of (w, wbar) in S_r x S_t: top i joined to bottom (i)w."""
        r, t, N = self.r, self.t, self.N
        row = row or Perm.identity(r)
        bar = bar or Perm.identity(t)
        P = [0] * (2 * N)
        for i in range(1, r + 1):
            a, b = vertex_id(r, t, 0, i), vertex_id(r, t, 1, row(i))
            P[a], P[b] = b, a
        for j in range(1, t + 1):
            a, b = vertex_id(r, t, 0, -j), vertex_id(r, t, 1, -bar(j))
            P[a], P[b] = b, a
        return self.diagram(WalledDiagram(r, t, P, check=False))

    def transposition(self, i, j, bar=False):
        n = self.t if bar else self.r
        p = Perm.transposition(n, i, j)
        return self.perm(bar=p) if bar else self.perm(row=p)

    def cycle(self, i, j, bar=False):
        """s_{i,j} (or its barred version) as a product of simple generators."""
        x = self.one()
        gen = self.sb if bar else self.s
        for k in cycle_word(i, j):
            x = x * gen(k)
        return x

    def e(self, i, j):
        """e_{i,j} = sb_{j,1} s_{i,1} e_1 s_{1,i} sb_{1,j}, evaluated as a product."""
        key = ("e", i, j)
        if key not in self._cache:
            x = (self.cycle(j, 1, bar=True) * self.cycle(i, 1) * self.e1()
                 * self.cycle(1, i) * self.cycle(1, j, bar=True))
            if x != self.diagram(self.e_diagram(i, j)):
                raise AssertionError(f"e_{{{i},{j}}} word disagrees with its diagram")
            self._cache[key] = x
        return self._cache[key]

    def jucys_murphy(self, i, bar=False):
        x = self.zero()
        for j in range(1, i):
            x = x + self.transposition(j, i, bar)
        return x

    def embed(self, x):
        """Include an element of a smaller B_{a,b} on strands 1..a, 1bar..bbar."""
        a, b = x.parent.r, x.parent.t
        if a > self.r or b > self.t:
            raise ValueError("cannot embed a larger algebra")
        out = {}
        for D, c in x:
            out[self._embed_diagram(D)] = c
        return self.element(out)

    def _embed_diagram(self, D):
        a, b = D.r, D.t
        r, t, N = self.r, self.t, self.N
        P = list(range(N, 2 * N)) + list(range(N))
        for v, w in enumerate(D.partner):
            rv, lv = D.label(v)
            rw, lw = D.label(w)
            P[vertex_id(r, t, rv, lv)] = vertex_id(r, t, rw, lw)
        return WalledDiagram(r, t, P, check=False)


class DiagramElement(Element):
    __slots__ = ("parent",)

    def __init__(self, parent, terms=None):
        super().__init__(terms)
        self.parent = parent

    def _copy_context(self, obj):
        obj.parent = self.parent

    def product(self, other):
        if not isinstance(other, DiagramElement) or other.parent != self.parent:
            raise ValueError("elements of different algebras")
        delta = self.parent.delta
        d = {}
        for D1, c1 in self.terms.items():
            for D2, c2 in other.terms.items():
                loops, D3 = compose(D1, D2)
                c = c1 * c2
                if loops:
                    c = c * delta ** loops
                d[D3] = d.get(D3, 0) + c
        return self._new({k: v for k, v in d.items() if v})

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.parent.scalar(other)
        return super().__add__(other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = self.parent.scalar(other)
        return super().__sub__(other)

    def __rsub__(self, other):
        return (-self) + other

    def __pow__(self, k):
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def sigma(self):
        return self._new({D.reflect(): c for D, c in self.terms.items()})

    def to_json(self):
        return [{"coef": str(c), "diagram": D.to_json()} for D, c in sorted(self.terms.items())]


def sigma(x):
    """Anti-involution fixing s_i, sbar_j, e_1: reflect each diagram top <-> bottom."""
    return x.sigma()


class DiagramModel:
    """Generators of B_{r,t}(delta) for the relation checkers.

    ``corrupt`` names a generator ("s1", "sb1" or "e1") to replace by a wrong
    element; used as a negative control.  ``mirror`` realises the generators
    inside B_{t,r} through s_i -> sbar_i, sbar_j -> s_j, e_1 -> e_1.
    """

    def __init__(self, alg, corrupt=None, mirror=False):
        self.alg = WalledBrauer(alg.t, alg.r, alg.delta) if mirror else alg
        self.r, self.t = alg.r, alg.t
        self.mirror = mirror
        self.corrupt = corrupt
        self.omega_max = 0

    def one(self):
        return self.alg.one()

    def omega(self, a):
        if a != 0:
            raise ValueError("only omega_0 = delta exists in B_{r,t}")
        return self.alg.scalar(self.alg.delta)

    def _bad(self, name, good):
        if self.corrupt != name:
            return good
        if name == "e1":
            return good * 2
        return good * self.e1_true()

    def e1_true(self):
        return self.alg.e1()

    def s(self, i):
        x = self.alg.sb(i) if self.mirror else self.alg.s(i)
        return self._bad(f"s{i}", x)

    def sb(self, j):
        x = self.alg.s(j) if self.mirror else self.alg.sb(j)
        return self._bad(f"sb{j}", x)

    def e1(self):
        return self._bad("e1", self.alg.e1())

    def equal(self, a, b):
        if a == b:
            return None
        return (a - b).to_json()


def _presentation_model(r, t, delta, corrupt, mirror):
    return DiagramModel(WalledBrauer(r, t, delta), corrupt, mirror)


def verify_presentation(r, t, delta, corrupt=None, mirror=False, jobs=1):
    """Check the fourteen defining relations on diagrams; returns a Report."""
    from functools import partial
    from .relations import PRESENTATION, verify_families
    if r + t > 6:
        raise ResourceWarning("presentation check limited to r+t <= 6")
    M = _presentation_model(r, t, delta, corrupt, mirror)
    params = {"r": r, "t": t, "delta": M.alg.delta}
    if corrupt:
        params["corrupt"] = corrupt
    if mirror:
        params["mirror"] = True
    rebuild = partial(_presentation_model, r, t, delta, corrupt, mirror)
    return verify_families(M, PRESENTATION, "verify-diagrams", params, jobs, rebuild)


def verify_diagrams(r, t, delta, corrupt=None, jobs=1, samples=40, seed=0):
    """Presentation relations plus enumeration, closure, associativity, the
    anti-involution and the B_{t,r} mirror."""
    import random
    from math import factorial
    rep = verify_presentation(r, t, delta, corrupt, jobs=jobs)
    A = WalledBrauer(r, t, delta)
    basis = enumerate_diagrams(r, t)
    rep.check("enumerate", "(r+t)! walled diagrams", len(basis) == factorial(r + t),
              {"count": len(basis)}, 1)
    index = set(basis)
    bad = None
    for D1 in basis:
        for D2 in basis:
            if compose(D1, D2)[1] not in index:
                bad = {"left": D1.to_json(), "right": D2.to_json()}
                break
        if bad:
            break
    rep.check("closure", "products land in the enumerated basis", bad is None, bad,
              len(basis) ** 2)
    rng = random.Random(seed)
    assoc, anti = None, None
    for _ in range(samples):
        a, b, c = (A.diagram(rng.choice(basis)) for _ in range(3))
        if assoc is None and (a * b) * c != a * (b * c):
            assoc = {"triple": [x.to_json() for x in (a, b, c)]}
        if anti is None and (a * b).sigma() != b.sigma() * a.sigma():
            anti = {"pair": [x.to_json() for x in (a, b)]}
    rep.check("associative", "(D1 D2) D3 = D1 (D2 D3)", assoc is None, assoc, samples)
    rep.check("sigma", "sigma(D1 D2) = sigma(D2) sigma(D1)", anti is None, anti, samples)
    mirror = verify_presentation(r, t, delta, mirror=True)
    mbad = [x.id for x in mirror.failures()]
    rep.check("mirror", "s_i, e_1, sbar_j -> sbar_i, e_1, s_j satisfy the relations in B_{t,r}",
              not mbad, {"families": mbad}, len(mirror.records))
    return rep
