"""Command-line interface: ``leibniz analyze|cyclic|sweep|isocheck``.

Reports go to stdout and start with ``== <command> ==``; wall-clock timings go
to stderr so stdout stays byte-identical between runs.

Exit codes: 0 success, 1 counterexample found, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .cyclic import CyclicSpec, cyclic_report
from .exactlin import Field, Subspace
from .fileformat import AlgebraFileError, LeibnizIdentityError, parse_algebra, parse_field
from .leibcore import (
    LeibnizAlgebra,
    center,
    is_leibniz,
    left_center,
    lower_central_series,
    nilpotency_class,
    r_series,
    right_center,
    upper_central_series,
)
from .verify import (
    DEFAULT_SWEEP,
    SWEEP_CHECKS,
    BudgetExceeded,
    enumerate_leibniz,
    frattini_bruteforce,
    is_isomorphic,
    maximal_subalgebras_bruteforce,
    sweep,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_algebra(path: str, unchecked: bool = False) -> LeibnizAlgebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_algebra(text, unchecked=unchecked)
    except (AlgebraFileError, LeibnizIdentityError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _field(text: str) -> Field:
    try:
        return parse_field(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _subspace_line(name: str, U: Subspace) -> str:
    return f"{name}: dim {U.dim} {U}"


def _series_lines(name: str, rep) -> list[str]:
    tail = " (stabilized)" if rep.stabilized else ""
    return [f"{name}_dims: {rep.dims}{tail}"]


def cmd_analyze(args) -> int:
    A = _read_algebra(args.file, unchecked=args.unchecked)
    out = ["== analyze ==", f"field: {A.field}", f"dim: {A.dim}"]
    ok, witness = is_leibniz(A)
    if not ok:
        i, j, k = witness
        out.append(f"leibniz: no, fails on (e{i + 1}, e{j + 1}, e{k + 1})")
        print("\n".join(out))
        return EXIT_INPUT
    out.append("leibniz: yes")
    cls = nilpotency_class(A)
    out.append(f"nilpotency_class: {'non-nilpotent' if cls is None else cls}")
    out += _series_lines("lower_central_series", lower_central_series(A))
    out += _series_lines("upper_central_series", upper_central_series(A))
    out += _series_lines("r_series", r_series(A))
    out.append(_subspace_line("center", center(A)))
    out.append(_subspace_line("left_center", left_center(A)))
    out.append(_subspace_line("right_center", right_center(A)))
    if args.lattice:
        if not A.field.is_finite:
            raise InputError("--lattice needs a finite field")
        maxes = maximal_subalgebras_bruteforce(A)
        out.append(f"maximal_subalgebras: {len(maxes)}")
        out += [f"  {M}" for M in maxes]
        out.append(_subspace_line("frattini", frattini_bruteforce(A)))
    print("\n".join(out))
    return EXIT_OK


def _parse_alphas(field: Field, text: str) -> list:
    parts = [t.strip() for t in text.split(",")] if text.strip() else []
    try:
        return [field(t) for t in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar in --alphas: {exc}") from None


def cmd_cyclic(args) -> int:
    field = _field(args.field)
    spec = CyclicSpec.of(field, _parse_alphas(field, args.alphas))
    rep = cyclic_report(spec)
    out = ["== cyclic ==", f"field: {field}", f"n: {spec.n}",
           "alphas: " + ", ".join(field.format(a) for a in spec.alphas),
           f"p(x): {rep.p}", f"factorization: {rep.factorization}",
           _subspace_line("frattini", rep.frattini),
           f"maximal_subalgebras: {len(rep.maximal_subalgebras)}"]
    for block, M in zip(rep.primary, rep.maximal_subalgebras):
        out.append(f"  [{block.factor}] {M}")
    out.append(_subspace_line("cartan", rep.cartan))
    out.append(f"minimal_ideals: {len(rep.minimal_ideals)}")
    out += [f"  {I}" for I in rep.minimal_ideals]
    out.append(_subspace_line("socle", rep.socle))
    out.append(_subspace_line("maximal_ideal", rep.maximal_ideal))
    out.append(_subspace_line("fitting_null", rep.fitting[0]))
    out.append(_subspace_line("fitting_one", rep.fitting[1]))
    print("\n".join(out))
    return EXIT_OK


def cmd_sweep(args) -> int:
    field = _field(args.field)
    if not field.is_finite:
        raise InputError("sweeps need a finite field")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in SWEEP_CHECKS]
    if unknown or not checks:
        raise InputError(f"unknown checks {unknown}; choose from {', '.join(SWEEP_CHECKS)}")
    t0 = time.perf_counter()
    census = enumerate_leibniz(field, args.dim, budget=args.budget, sample=args.sample, seed=args.seed,
                               workers=args.workers)
    print(f"census: {time.perf_counter() - t0:.2f} s", file=sys.stderr)
    reports = sweep(census, checks)
    print("== sweep ==")
    for rep in reports:
        print(rep.render(), end="")
        print(f"{rep.statistics['check']}: {rep.seconds:.2f} s", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if any(r.counterexamples for r in reports) else EXIT_OK


def cmd_isocheck(args) -> int:
    A = _read_algebra(args.a)
    B = _read_algebra(args.b)
    if A.field != B.field or A.dim != B.dim:
        raise InputError(f"field/dim mismatch: {A.field} dim {A.dim} vs {B.field} dim {B.dim}")
    if not A.field.is_finite:
        raise InputError("isomorphism search needs a finite field")
    P = is_isomorphic(A, B, budget=args.budget)
    print("== isocheck ==")
    if P is None:
        print("not isomorphic")
    else:
        print("isomorphic")
        print("columns are the images of e1..en:")
        print(P)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leibniz", description="Exact computations in left Leibniz algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structure report for an algebra file")
    p.add_argument("file")
    p.add_argument("--lattice", action="store_true", help="add maximal subalgebras and Frattini (finite fields)")
    p.add_argument("--unchecked", action="store_true", help="do not reject files failing the Leibniz identity")
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("cyclic", help="closed-form report for a cyclic algebra")
    p.add_argument("--field", required=True, help="Q or GF<p>")
    p.add_argument("--alphas", required=True, help="comma separated alpha_2,...,alpha_n")
    p.set_defaults(run=cmd_cyclic)

    p = sub.add_parser("sweep", help="run census checks")
    p.add_argument("--field", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--checks", default=",".join(DEFAULT_SWEEP),
                   help=f"comma separated subset of {', '.join(SWEEP_CHECKS)}")
    p.add_argument("--sample", type=lambda s: int(float(s)), default=None,
                   help="draw this many random tables instead of the full census")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=lambda s: int(float(s)), default=2**27, help="max raw tables to scan")
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("isocheck", help="search for an isomorphism between two algebra files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--budget", type=lambda s: int(float(s)), default=10**7)
    p.set_defaults(run=cmd_isocheck)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
