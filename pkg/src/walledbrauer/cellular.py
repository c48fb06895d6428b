"""Bipartitions, the level-two Hecke cellular basis, the weakly cellular basis of
the level two walled Brauer algebra and its Gram matrices.

Everything is computed inside the tensor-module realization: an algebra
element is a generator word, and its coordinates come from expanding the
flattened operator in the (certified full-rank) cellular basis.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from . import words as W
from .linalg import SpanSolver, as_rational, rank, SparseMatrix
from .perms import TOP, Perm, coset_reps
from .superalgebra import typicality
from .tensor import CORRECTED, TensorModule
from .report import Report


# ---------------------------------------------------------------- partitions

def partitions(k, maxpart=None):
    if maxpart is None:
        maxpart = k
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, maxpart), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return out


def bipartitions(k):
    out = []
    for a in range(k, -1, -1):
        for l1 in partitions(a):
            for l2 in partitions(k - a):
                out.append((l1, l2))
    return out


def _check_partition(p):
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {p!r}")


def bipartition(l1, l2=()):
    l1, l2 = tuple(x for x in l1 if x), tuple(x for x in l2 if x)
    _check_partition(l1)
    _check_partition(l2)
    return (l1, l2)


def size(lam):
    return sum(lam[0]) + sum(lam[1])


def _partial(p, i):
    return sum(p[:i])


def dominance(lam, mu):
    """True iff mu dominates lam (both bipartitions of the same size)."""
    if size(lam) != size(mu):
        raise ValueError("dominance needs bipartitions of the same size")
    L = max(len(lam[0]), len(mu[0]), 1)
    if any(_partial(lam[0], i) > _partial(mu[0], i) for i in range(1, L + 1)):
        return False
    a, b = sum(lam[0]), sum(mu[0])
    L = max(len(lam[1]), len(mu[1]), 1)
    return all(a + _partial(lam[1], i) <= b + _partial(mu[1], i) for i in range(0, L + 1))


def label_dominates(big, small):
    """(f, (lam, mu)) >= (l, (alpha, beta)) in the label poset."""
    f, (l1, l2) = big
    g, (a1, a2) = small
    if f != g:
        return f > g
    return dominance(a1, l1) and dominance(a2, l2)


def label_strictly_above(big, small):
    return big != small and label_dominates(big, small)


def labels(r, t):
    out = []
    for f in range(min(r, t), -1, -1):
        for l1 in bipartitions(r - f):
            for l2 in bipartitions(t - f):
                out.append((f, (l1, l2)))
    return out


# ---------------------------------------------------------------- tableaux
# A tableau of a bipartition is a pair of tuples of rows.

def _shape_boxes(lam):
    return [(c, i, j) for c in (0, 1) for i, row in enumerate(lam[c]) for j in range(row)]


def canonical_tableaux(lam):
    """(t^lam, t_lam): rows of both components first to last, and columns of
    the second component then the first."""
    k = 1
    top = [[[None] * row for row in lam[c]] for c in (0, 1)]
    for c in (0, 1):
        for i, row in enumerate(lam[c]):
            for j in range(row):
                top[c][i][j] = k
                k += 1
    k = 1
    bot = [[[None] * row for row in lam[c]] for c in (0, 1)]
    for c in (1, 0):
        cols = lam[c][0] if lam[c] else 0
        for j in range(cols):
            for i, row in enumerate(lam[c]):
                if j < row:
                    bot[c][i][j] = k
                    k += 1
    freeze = lambda T: tuple(tuple(tuple(r) for r in comp) for comp in T)
    return freeze(top), freeze(bot)


def is_standard(T):
    for comp in T:
        for i, row in enumerate(comp):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(comp[i - 1][j] >= row[j] for j in range(len(row))):
                return False
    return True


def standard_tableaux(lam):
    boxes = _shape_boxes(lam)
    k = len(boxes)
    out = []
    for perm in permutations(range(1, k + 1)):
        T = [[[None] * row for row in lam[c]] for c in (0, 1)]
        for (c, i, j), v in zip(boxes, perm):
            T[c][i][j] = v
        T = tuple(tuple(tuple(r) for r in comp) for comp in T)
        if is_standard(T):
            out.append(T)
    tl = canonical_tableaux(lam)[0]
    out.sort(key=lambda T: (T != tl, T))
    return out


def tableau_entries(T):
    return [v for comp in T for row in comp for v in row]


def d_of(T, lam=None):
    """The permutation w with t^lam w = T (entries of t^lam sent by w)."""
    if lam is None:
        lam = tuple(tuple(len(r) for r in comp) for comp in T)
    top = canonical_tableaux(lam)[0]
    k = size(lam)
    images = [0] * k
    for a, b in zip(tableau_entries(top), tableau_entries(T)):
        images[a - 1] = b
    return Perm(images) if k else Perm([])


def row_stabilizer(lam):
    """Elements of the Young subgroup fixing the rows of t^lam."""
    top = canonical_tableaux(lam)[0]
    rows = [row for comp in top for row in comp]
    k = size(lam)
    out = []
    for choice in product(*[list(permutations(row)) for row in rows]):
        images = list(range(1, k + 1))
        for row, img in zip(rows, choice):
            for a, b in zip(row, img):
                images[a - 1] = b
        out.append(Perm(images) if k else Perm([]))
    return out


# ---------------------------------------------------------------- Hecke cells

def _side_letters(side):
    return "sb" if side == "bar" else "s"


def _perm_letters(w, side):
    kind = _side_letters(side)
    return W.word((kind, i) for i in w.reduced_word())


def hecke_cell_element(lam, s, t, v, side="abstract", offset=0):
    """m_st = d(s)^{-1} pi_a m_lambda d(t) with pi_a = prod_{i<=a} (Y_i - v).

    ``side`` fixes Y_i: "abstract" uses x_i itself, "row" uses -x_i and "bar"
    uses -xbar_i (the substitution turning the Hecke generator into the walled
    Brauer one)."""
    if not (is_standard(s) and is_standard(t)):
        raise ValueError("tableaux must be standard")
    v = as_rational(v)
    a = sum(lam[0])
    if side == "abstract" or side == "row":
        xi = W.x
    elif side == "bar":
        xi = W.xb
    else:
        raise ValueError(f"unknown side {side!r}")
    sign = 1 if side == "abstract" else -1
    pi = W.ONE
    for i in range(1, a + 1):
        pi = pi * (xi(i) * sign - v)
    m = W.Word()
    for w in row_stabilizer(lam):
        m = m + _perm_letters(w, side)
    ds, dt = d_of(s, lam), d_of(t, lam)
    return _perm_letters(ds, side).sigma() * pi * m * _perm_letters(dt, side)


def row_parameters(m, n, p, q):
    """(u, v) for the row Hecke algebra: Y_1 = -x_1 has roots -p and m - q."""
    return -as_rational(p), m - as_rational(q)


def bar_parameters(m, n, p, q):
    """(u, v) for the bar Hecke algebra: Y_1 = -xbar_1 has roots q and p - n."""
    return as_rational(q), as_rational(p) - n


# ---------------------------------------------------------------- the basis

def kappa_vectors(c, r):
    """All 0/1 r-tuples supported on the rows matched by c."""
    out = []
    for bits in product((0, 1), repeat=len(c.support)):
        k = [0] * r
        for i, b in zip(c.support, bits):
            k[i - 1] = b
        out.append(tuple(k))
    return out


def frak_e(f, r, t):
    """e_{r,t} e_{r-1,t-1} ... e_{r-f+1,t-f+1}."""
    out = W.ONE
    for k in range(f):
        out = out * W.e(r - k, t - k)
    return out


def delta_set(label, r, t):
    """Index set of the cell module: (tableau pair, coset rep, kappa)."""
    f, (l1, l2) = label
    reps = coset_reps(r, t, f, TOP)
    out = []
    for T1 in standard_tableaux(l1):
        for T2 in standard_tableaux(l2):
            for c in reps:
                for k in kappa_vectors(c, r):
                    out.append(((T1, T2), c, k))
    return out


def delta_count(r, t):
    """sum over labels of |delta(f, lambda)|^2 (pure combinatorics)."""
    return sum(len(delta_set(lab, r, t)) ** 2 for lab in labels(r, t))


class CellElement:
    __slots__ = ("label", "left", "right", "word", "index")

    def __init__(self, label, left, right, word, index):
        self.label, self.left, self.right, self.word, self.index = label, left, right, word, index

    def __repr__(self):
        return f"C[{self.label}]({_idx_text(self.left)} | {_idx_text(self.right)})"


def _idx_text(ix):
    (T1, T2), c, k = ix
    return f"{T1},{T2};{c.cycles};{k}"


def _m_pair(label, s, t, m, n, p, q):
    """Product a*b of the row and bar Hecke cell elements."""
    f, (l1, l2) = label
    _, vr = row_parameters(m, n, p, q)
    _, vb = bar_parameters(m, n, p, q)
    a = hecke_cell_element(l1, s[0], t[0], vr, "row")
    b = hecke_cell_element(l2, s[1], t[1], vb, "bar")
    return a * b


def cell_word(label, left, right, r, t, m, n, p, q):
    """x^{kappa_d} d^{-1} e^f m_st c x^{kappa_c}."""
    f = label[0]
    s, d, kd = left
    tt, c, kc = right
    return (W.x_power(kd) * W.word(d.inverse_word()) * frak_e(f, r, t)
            * _m_pair(label, s, tt, m, n, p, q) * W.word(c.word) * W.x_power(kc))


class CellularBasis:
    """The cellular basis in the tensor-module realization, with coordinates.

    ``faithful`` records whether the flattened operators reached full rank,
    which certifies that the realization is faithful."""

    def __init__(self, m, n, r, t, p, q, convention=CORRECTED, sample="auto"):
        self.m, self.n, self.r, self.t = m, n, r, t
        self.p, self.q = as_rational(p), as_rational(q)
        self.module = TensorModule(m, n, r, t, p, q, convention)
        self.labels = labels(r, t)
        self.delta = {lab: delta_set(lab, r, t) for lab in self.labels}
        self.elements = []
        self.lookup = {}
        for lab in self.labels:
            for left in self.delta[lab]:
                for right in self.delta[lab]:
                    wd = cell_word(lab, left, right, r, t, m, n, p, q)
                    el = CellElement(lab, left, right, wd, len(self.elements))
                    self.lookup[(lab, _key(left), _key(right))] = el
                    self.elements.append(el)
        self.expected = 2 ** (r + t) * _fact(r + t)
        self.domain = self._domain(sample)
        self._solver = SpanSolver([self.flatten(el.word) for el in self.elements])
        self.rank = self._solver.rank
        if self.rank < len(self.elements) and self.domain is not None:
            self.domain = None
            self._solver = SpanSolver([self.flatten(el.word) for el in self.elements])
            self.rank = self._solver.rank
        self.faithful = self.rank == self.expected == len(self.elements)

    def _domain(self, sample):
        if sample == "full":
            return None
        I = range(1, self.m + self.n + 1)
        return [l + ((),) + rr for l in product(I, repeat=self.r) for rr in product(I, repeat=self.t)]

    def operator(self, word):
        return self.module.operator(word)

    def flatten(self, word):
        return self.module.operator(word).flatten(self.domain)

    def coordinates(self, word):
        """Coordinates in the cellular basis, or None outside the span."""
        return self._solver.solve(self.flatten(word))

    def element(self, label, left, right):
        return self.lookup[(label, _key(left), _key(right))]

    def support(self, coords):
        return [self.elements[i] for i, c in enumerate(coords) if c]


def _key(ix):
    T, c, k = ix
    return (T, c.cycles, k)


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def cellular_basis(m, n, r, t, p, q, convention=CORRECTED, require_faithful=True):
    B = CellularBasis(m, n, r, t, p, q, convention)
    if require_faithful and not B.faithful:
        raise ValueError(f"cellular operators have rank {B.rank} < {B.expected}: "
                         "realization is not faithful at these parameters")
    return B


# ---------------------------------------------------------------- Gram matrices

def gram_matrix(B, label, check=True):
    """phi_{f,lambda}(C_t, C_t') read off C_{s t} C_{t' s} with s the first index.

    With ``check`` also verifies that the product has no other component on the
    same label and none on lower or incomparable labels; a violation raises."""
    idx = B.delta[label]
    s = idx[0]
    target = B.element(label, s, s).index
    G = []
    for tt in idx:
        row = []
        for tp in idx:
            prod_ = B.element(label, s, tt).word * B.element(label, tp, s).word
            co = B.coordinates(prod_)
            if co is None:
                raise ArithmeticError("product left the span of the cellular basis")
            if check:
                for el in B.support(co):
                    if el.index != target and not label_strictly_above(el.label, label):
                        raise ArithmeticError(f"cell product has a term on {el.label}")
            row.append(co[target])
        G.append(row)
    return G


def gram_rank(G):
    if not G:
        return 0
    return rank(SparseMatrix([{j: c for j, c in enumerate(row) if c} for row in G]))


def triangularity_check(B, limit=None):
    """Right multiplication by generators stays in the same row index modulo
    strictly higher labels.  Returns (checked, failures)."""
    gens = [W.letter(W.E), W.letter(W.X), W.letter(W.XB)]
    gens += [W.s(i) for i in range(1, B.r)] + [W.sb(j) for j in range(1, B.t)]
    fails, checked = [], 0
    for el in B.elements[:limit]:
        for g in gens:
            co = B.coordinates(el.word * g)
            checked += 1
            if co is None:
                fails.append((el, W.to_text(g), "outside span"))
                continue
            for other in B.support(co):
                same = other.label == el.label and _key(other.left) == _key(el.left)
                if not same and not label_strictly_above(other.label, el.label):
                    fails.append((el, W.to_text(g), repr(other)))
                    break
    return checked, fails


def sigma_check(B):
    """sigma(C_st) = C_ts modulo strictly higher labels."""
    fails = []
    for el in B.elements:
        co = B.coordinates(el.word.sigma())
        mate = B.element(el.label, el.right, el.left).index
        if co is None:
            fails.append((el, "outside span"))
            continue
        for i, c in enumerate(co):
            other = B.elements[i]
            if i == mate:
                if c != 1:
                    fails.append((el, f"coefficient {c} on the transpose"))
            elif c and not label_strictly_above(other.label, el.label):
                fails.append((el, repr(other)))
    return len(B.elements), fails


def commutation_check(B):
    """e^f m_st = m_st e^f as operators for every label and tableau pair."""
    bad = []
    count = 0
    for lab in B.labels:
        f, (l1, l2) = lab
        if not f:
            continue
        ef = frak_e(f, B.r, B.t)
        for s in product(standard_tableaux(l1), standard_tableaux(l2)):
            for tt in product(standard_tableaux(l1), standard_tableaux(l2)):
                mst = _m_pair(lab, s, tt, B.m, B.n, B.p, B.q)
                a, b = B.operator(ef * mst), B.operator(mst * ef)
                count += 1
                if a.difference_witness(b, B.domain) is not None:
                    bad.append((lab, s, tt))
    return count, bad


# ---------------------------------------------------------------- Kleshchev

def _part(p, i):
    return p[i - 1] if 1 <= i <= len(p) else 0


def kleshchev_test(lam, u1, u2, rule="mirrored"):
    """Kleshchev condition for a bipartition with respect to (u1, u2).

    With k = u1 - u2 an integer the condition is lam1_{k+i} <= lam2_i for all
    i >= 1 (parts beyond the length are 0).  For k < 0 the ``mirrored`` rule
    (default) uses lam2_{|k|+i} <= lam1_i instead; ``literal`` keeps the
    printed inequality, which is then vacuous on i <= -k."""
    k = Fraction(as_rational(u1)) - Fraction(as_rational(u2))
    if k.denominator != 1:
        return True
    k = int(k)
    l1, l2 = lam
    N = max(len(l1), len(l2)) + abs(k) + 1
    if k >= 0 or rule == "literal":
        return all(_part(l1, k + i) <= _part(l2, i) for i in range(max(1, 1 - k), N + 1))
    return all(_part(l2, -k + i) <= _part(l1, i) for i in range(1, N + 1))


def is_kleshchev_label(label, m, n, p, q, rule="mirrored"):
    f, (l1, l2) = label
    return (kleshchev_test(l1, *row_parameters(m, n, p, q), rule=rule)
            and kleshchev_test(l2, *bar_parameters(m, n, p, q), rule=rule))


def omega01(m, n, p, q, convention=CORRECTED):
    p, q = as_rational(p), as_rational(q)
    w0 = (n - m) if convention == CORRECTED else (m - n)
    return w0, n * q - m * p


def classify_irreducibles(m, n, r, t, p, q, rule="mirrored", gram=True, basis=None):
    """Labels of the simple modules with per-label evidence.

    Returns (labels, rows) where each row is a dict with the Kleshchev flag,
    the exclusion flag and, when the realization is faithful, the Gram rank."""
    w0, w1 = omega01(m, n, p, q)
    degenerate = r == t and w0 == 0 and w1 == 0
    B = basis
    if gram and B is None:
        B = CellularBasis(m, n, r, t, p, q)
        if not B.faithful:
            B = None
    rows, chosen = [], []
    for lab in labels(r, t):
        f = lab[0]
        kl = is_kleshchev_label(lab, m, n, p, q, rule)
        excluded = degenerate and f == r
        row = {"label": lab, "kleshchev": kl, "excluded": excluded,
               "gram_rank": None, "gram_size": len(delta_set(lab, r, t))}
        if B is not None:
            row["gram_rank"] = gram_rank(gram_matrix(B, lab))
        ok = kl and not excluded
        row["simple"] = ok
        if ok:
            chosen.append(lab)
        rows.append(row)
    return chosen, rows


def classification_report(m, n, r, t, p, q, rule="mirrored"):
    chosen, rows = classify_irreducibles(m, n, r, t, p, q, rule)
    rep = Report("classify", {"m": m, "n": n, "r": r, "t": t, "p": p, "q": q, "rule": rule})
    for row in rows:
        g = row["gram_rank"]
        if g is None:
            rep.check(f"label {label_text(row['label'])}", "rule only (no faithful realization)",
                      True, None)
            continue
        ok = (g > 0) == row["simple"]
        rep.check(f"label {label_text(row['label'])}",
                  "Kleshchev rule agrees with a nonzero cell form", ok,
                  None if ok else {"kleshchev": row["kleshchev"], "excluded": row["excluded"],
                                   "gram_rank": g})
    rep.extra["irreducibles"] = [label_text(l) for l in chosen]
    rep.extra["rows"] = rows
    return rep


def semisimple_by_rule(m, n, r, t, p, q):
    d = Fraction(as_rational(p)) - Fraction(as_rational(q))
    if d.denominator != 1:
        return True
    return d <= -m - r or d >= n + t


def semisimplicity_test(m, n, r, t, p, q, basis=None):
    """Both the closed-form criterion and the Gram evidence (all forms nondegenerate)."""
    B = basis or cellular_basis(m, n, r, t, p, q)
    rule = semisimple_by_rule(m, n, r, t, p, q)
    evidence = []
    for lab in B.labels:
        G = gram_matrix(B, lab)
        evidence.append((lab, gram_rank(G), len(G)))
    gram_ok = all(rk == size_ for _, rk, size_ in evidence)
    return rule, gram_ok, evidence


def semisimplicity_report(m, n, r, t, p, q):
    rule, gram_ok, evidence = semisimplicity_test(m, n, r, t, p, q)
    rep = Report("semisimple", {"m": m, "n": n, "r": r, "t": t, "p": p, "q": q})
    typical = typicality(p, q, m, n)
    # the closed-form criterion presumes a typical lambda_pq; elsewhere only
    # the Gram evidence is reported
    if typical:
        rep.check("criterion-vs-gram", "semisimple iff every cell form is nondegenerate",
                  rule == gram_ok, None if rule == gram_ok else {"rule": rule, "gram": gram_ok})
    rep.extra.update({"semisimple_rule": rule, "semisimple_gram": gram_ok,
                      "typical": typical,
                      "gram": [{"label": label_text(l), "rank": rk, "size": s}
                               for l, rk, s in evidence]})
    return rep


# ---------------------------------------------------------------- output

def partition_text(p):
    return "(" + ",".join(map(str, p)) + ")" if p else "()"


def bipartition_text(lam):
    return "(" + partition_text(lam[0]) + "," + partition_text(lam[1]) + ")"


def label_text(label):
    f, (l1, l2) = label
    return f"{f}:{bipartition_text(l1)}|{bipartition_text(l2)}"


def classification_tsv(rows):
    lines = ["f\tlambda1\tlambda2\tkleshchev\tgram_rank\tgram_size"]
    for row in rows:
        f, (l1, l2) = row["label"]
        g = "" if row["gram_rank"] is None else str(row["gram_rank"])
        lines.append(f"{f}\t{bipartition_text(l1)}\t{bipartition_text(l2)}\t"
                     f"{str(row['kleshchev']).lower()}\t{g}\t{row['gram_size']}")
    return "\n".join(lines) + "\n"
