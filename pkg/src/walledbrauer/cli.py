"""Command-line driver: ``walledbrauer <suite> [options]``.

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
parameters, 3 when a resource guard refuses the computation."""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .report import Report

OK, FAILED, USAGE, RESOURCE = 0, 1, 2, 3


def rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _default_jobs():
    raw = os.environ.get("WALLEDBRAUER_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _common(sp, fmt="json"):
    sp.add_argument("--out", help="write the report here; the summary table goes to stdout")
    sp.add_argument("--format", choices=("json", "tsv"), default=fmt)
    sp.add_argument("--jobs", type=int, default=None,
                    help="worker processes (default $WALLEDBRAUER_JOBS or 1)")


def _sizes(sp, *names, **defaults):
    for name in names:
        kind = int if name in ("m", "n", "r", "t", "k", "degree") else rational
        sp.add_argument(f"--{name}", type=kind, default=defaults.get(name),
                        required=name not in defaults)


def _tensor_args(sp):
    from .tensor import CORRECTED, PRINTED
    _sizes(sp, "m", "n", "r", "t", "p", "q", r=1, t=1)
    sp.add_argument("--convention", choices=(CORRECTED, PRINTED), default=CORRECTED)


def build_parser():
    ap = argparse.ArgumentParser(prog="walledbrauer",
                                 description="Exact checks for walled Brauer algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-diagrams", help="presentation, enumeration, anti-involution")
    _sizes(sp, "r", "t", "delta", delta=Fraction(5))
    sp.add_argument("--corrupt", choices=("s1", "sb1", "e1"))
    _common(sp)

    sp = sub.add_parser("verify-tower", help="Jucys-Murphy-like elements and omega tables")
    _sizes(sp, "r", "t", "delta", "delta1", r=3, t=3, delta=Fraction(5), delta1=Fraction(7, 3))
    sp.add_argument("--omega-k", type=int, default=3)
    sp.add_argument("--omega-a", type=int, default=4)
    sp.add_argument("--corrupt", choices=("y",))
    _common(sp)

    sp = sub.add_parser("verify-phi", help="affine relations on the images of phi_k")
    _sizes(sp, "r", "t", "k", "omega0", "omega1", k=1, omega0=Fraction(5), omega1=Fraction(7))
    sp.add_argument("--omega-max", type=int, default=4)
    sp.add_argument("--corrupt", choices=("x1",))
    _common(sp)

    sp = sub.add_parser("verify-freeness", help="bounded-degree regular monomials under phi_k")
    _sizes(sp, "r", "t", "degree", "omega0", "omega1", r=1, t=1, degree=2,
           omega0=Fraction(5), omega1=Fraction(7))
    sp.add_argument("--corrupt", choices=("duplicate",))
    _common(sp)

    sp = sub.add_parser("verify-schur-weyl", help="tensor-module realization and dimension")
    _tensor_args(sp)
    sp.add_argument("--omega-max", type=int, default=4)
    sp.add_argument("--sample", choices=("full", "highest"), default="full",
                    help="domain vectors used for the dimension rank")
    sp.add_argument("--corrupt", choices=("x1",))
    _common(sp)

    for name, text in (("cellular-basis", "cellular basis rank and structure checks"),
                       ("gram", "Gram matrices of the cell forms"),
                       ("classify", "irreducible labels against the Kleshchev rule"),
                       ("semisimple", "semisimplicity criterion against the cell forms")):
        sp = sub.add_parser(name, help=text)
        _tensor_args(sp)
        if name == "classify":
            sp.add_argument("--rule", choices=("mirrored", "literal"), default="mirrored")
        _common(sp, "tsv" if name == "classify" else "json")
    return ap


# ---------------------------------------------------------------- suites

def run_diagrams(a):
    from .diagrams import verify_diagrams
    return verify_diagrams(a.r, a.t, a.delta, a.corrupt, a.jobs)


def run_tower(a):
    from .tower import verify_tower
    return verify_tower(a.r, a.t, a.delta, a.delta1, a.omega_k, a.omega_a, a.corrupt)


def run_phi(a):
    from .tower import verify_affine_relations
    return verify_affine_relations(a.r, a.t, a.k, a.omega0, a.omega1, a.omega_max,
                                   a.corrupt, a.jobs)


def run_freeness(a):
    from .tower import regular_monomial_independence
    return regular_monomial_independence(a.r, a.t, a.degree, a.omega0, a.omega1,
                                         duplicate=a.corrupt == "duplicate")


def run_schur_weyl(a):
    from math import factorial
    from .tensor import verify_realization, endomorphism_dimension
    rep = verify_realization(a.m, a.n, a.r, a.t, a.p, a.q, a.omega_max, a.corrupt,
                             a.jobs, a.convention)
    if a.r + a.t <= min(a.m, a.n):
        sample = None if a.sample == "full" else a.sample
        rk, count = endomorphism_dimension(a.m, a.n, a.r, a.t, a.p, a.q, sample)
        target = 2 ** (a.r + a.t) * factorial(a.r + a.t)
        rep.check("dimension", "rank of the monomial operators is 2^(r+t) (r+t)!",
                  rk == count == target, {"rank": rk, "operators": count, "target": target})
        rep.extra["dimension"] = rk
    return rep


def run_cellular(a):
    from .cellular import (cellular_basis, delta_count, triangularity_check,
                           sigma_check, commutation_check)
    B = cellular_basis(a.m, a.n, a.r, a.t, a.p, a.q, a.convention, require_faithful=False)
    rep = Report("cellular-basis", _tensor_params(a))
    cnt = delta_count(a.r, a.t)
    rep.check("count", "sum |delta(f, lambda)|^2 = 2^(r+t) (r+t)!", cnt == B.expected,
              {"count": cnt, "target": B.expected})
    rep.check("rank", "the cellular operators are linearly independent", B.faithful,
              {"rank": B.rank, "elements": len(B.elements)}, len(B.elements))
    if B.faithful:
        for id_, anchor, fn in (
                ("triangular", "C_st h = sum over s' of C_s't modulo higher labels",
                 triangularity_check),
                ("sigma", "sigma(C_st) = C_ts modulo higher labels", sigma_check),
                ("commute", "e^f m_st = m_st e^f", commutation_check)):
            n, fails = fn(B)
            rep.check(id_, anchor, not fails, [repr(f) for f in fails[:5]], n)
    rep.extra.update({"rank": B.rank, "elements": len(B.elements)})
    return rep


def run_gram(a):
    from .cellular import cellular_basis, gram_matrix, gram_rank, label_text
    B = cellular_basis(a.m, a.n, a.r, a.t, a.p, a.q, a.convention)
    rep = Report("gram", _tensor_params(a))
    grams = {}
    for lab in B.labels:
        try:
            G = gram_matrix(B, lab)
            ok, wit = True, None
        except ArithmeticError as exc:
            G, ok, wit = None, False, str(exc)
        rep.check(f"label {label_text(lab)}", "cell product reduces to the cell form", ok, wit,
                  len(B.delta[lab]) ** 2)
        if G is not None:
            grams[label_text(lab)] = {"rank": gram_rank(G),
                                      "matrix": [[str(c) for c in row] for row in G]}
    rep.extra["gram"] = grams
    return rep


def run_classify(a):
    from .cellular import classification_report
    return classification_report(a.m, a.n, a.r, a.t, a.p, a.q, a.rule)


def run_semisimple(a):
    from .cellular import semisimplicity_report
    return semisimplicity_report(a.m, a.n, a.r, a.t, a.p, a.q)


def _tensor_params(a):
    return {"m": a.m, "n": a.n, "r": a.r, "t": a.t, "p": a.p, "q": a.q,
            "convention": a.convention}


SUITES = {
    "verify-diagrams": run_diagrams,
    "verify-tower": run_tower,
    "verify-phi": run_phi,
    "verify-freeness": run_freeness,
    "verify-schur-weyl": run_schur_weyl,
    "cellular-basis": run_cellular,
    "gram": run_gram,
    "classify": run_classify,
    "semisimple": run_semisimple,
}


# ---------------------------------------------------------------- output

def render(rep, fmt):
    if fmt == "json":
        return rep.dumps() + "\n"
    if rep.suite == "classify" and "rows" in rep.extra:
        from .cellular import classification_tsv
        return classification_tsv(rep.extra["rows"])
    lines = ["id\tanchor\tstatus\tinstances"]
    for r in rep.records:
        lines.append(f"{r.id}\t{r.anchor}\t{r.status}\t{r.instances}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if a.jobs is None:
        a.jobs = _default_jobs()
    if a.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return USAGE
    try:
        rep = SUITES[a.command](a)
    except ResourceWarning as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return RESOURCE
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    text = render(rep, a.format)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(rep.table())
    else:
        sys.stdout.write(text)
    for r in rep.failures():
        print(f"FAILED {r.id}: {r.anchor}", file=sys.stderr)
    return OK if rep.passed else FAILED


if __name__ == "__main__":
    sys.exit(main())
