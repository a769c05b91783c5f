"""Executable checks of the nilpotency, cyclic-structure and non-embedding results.

Every check returns a :class:`TheoremReport`; a nonempty ``counterexamples``
list always carries the offending algebra in file format so it can be
replayed with ``leibniz analyze --unchecked``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable, Iterable

from ..cyclic import (
    CyclicSpec,
    build_cyclic,
    cartan_cyclic,
    frattini_cyclic,
    maximal_ideal_cyclic,
    maximal_subalgebras_cyclic,
    minimal_ideals_cyclic,
    socle_cyclic,
)
from ..exactlin import Field, Matrix, Subspace
from ..fileformat import format_algebra
from ..leibcore import (
    LeibnizAlgebra,
    center,
    induced_algebra,
    is_cartan,
    is_ideal,
    is_nilpotent,
    is_nilpotent_subalgebra,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    normalizer,
    product_space,
    quotient,
    r_series,
    right_normalizer,
    subalgebra_class,
    subalgebra_generated,
)
from .census import Census, DEFAULT_TABLE_BUDGET, enumerate_leibniz, nilpotent_adapted_census
from .iso import is_isomorphic, transport
from .lattice import (
    DEFAULT_SUBSPACE_BUDGET,
    all_ideals,
    all_subalgebras,
    cartan_subalgebras_bruteforce,
    frattini_bruteforce,
    maximal_ideals_bruteforce,
    maximal_subalgebras_bruteforce,
    minimal_ideals_bruteforce,
    socle_bruteforce,
    squares,
)

__all__ = [
    "TheoremReport",
    "is_s_star",
    "condition_k",
    "nilpotency_equivalences",
    "check_quotient_theorem",
    "unique_nilpotent_closure",
    "as_cyclic",
    "cyclic_crosscheck",
    "class_bound",
    "nonembedding_power",
    "nonembedding_frattini",
    "nonembedding_51",
    "nonembedding_52",
    "DEFAULT_SWEEP",
    "SWEEP_CHECKS",
    "sweep",
]


@dataclass
class TheoremReport:
    theorem: str
    universe: str
    counterexamples: list = dc_field(default_factory=list)
    statistics: dict = dc_field(default_factory=dict)
    seconds: float | None = None

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        stats = dict(self.statistics)
        for k, v in other.statistics.items():
            stats[k] = stats.get(k, 0) + v if isinstance(v, int) and not isinstance(v, bool) else v
        secs = None if self.seconds is None and other.seconds is None else (self.seconds or 0) + (other.seconds or 0)
        universe = self.universe if self.universe == other.universe else f"{self.universe}; {other.universe}"
        return TheoremReport(self.theorem, universe, self.counterexamples + other.counterexamples, stats, secs)

    def render(self) -> str:
        """Deterministic text block (timing is deliberately left out)."""
        lines = [f"theorem: {self.theorem}", f"universe: {self.universe}"]
        lines += [f"{k}: {v}" for k, v in self.statistics.items()]
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        for n, cx in enumerate(self.counterexamples, start=1):
            lines.append(f"-- counterexample {n} --")
            for k, v in cx.items():
                if k != "algebra":
                    lines.append(f"{k}: {v}")
            if "algebra" in cx:
                lines.append(cx["algebra"].rstrip("\n"))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# per-algebra predicates
# ---------------------------------------------------------------------------


def _one_generated(A: LeibnizAlgebra, H: Subspace) -> bool:
    return any(subalgebra_generated(A, [h]) == H for h in H.elements())


def is_s_star(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> bool:
    """Every non-abelian subalgebra ``H`` has ``dim H/H^2 >= 2`` or is
    nilpotent and generated by a single element.

    ``H = A`` is included: with proper subalgebras only, every 2-dimensional
    algebra would qualify (its 1-dimensional subalgebras are all abelian),
    including non-nilpotent ones.
    """
    for H in all_subalgebras(A, budget):
        H2 = product_space(A, H, H)
        if H2.is_zero():
            continue
        if H.dim - H2.dim >= 2:
            continue
        if is_nilpotent_subalgebra(A, H) and _one_generated(A, H):
            continue
        return False
    return True


def condition_k(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> bool:
    """The only subalgebra ``K`` with ``K + A^2 = A`` is ``A`` itself."""
    A2 = squares(A)
    for K in all_subalgebras(A, budget):
        if not K.is_full() and (K + A2).is_full():
            return False
    return True


def nilpotency_equivalences(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> TheoremReport:
    """Evaluate (a) nilpotent, (b) normalizer condition, (c) right normalizer
    condition, (d) maximal subalgebras are ideals, (e) ... are right ideals."""
    subs = all_subalgebras(A, budget)
    proper = [U for U in subs if not U.is_full()]
    maxes = maximal_subalgebras_bruteforce(A, budget)
    values = {
        "a_nilpotent": is_nilpotent(A),
        "b_normalizer_condition": all(normalizer(A, U) != U for U in proper),
        "c_right_normalizer_condition": all(right_normalizer(A, U) != U for U in proper),
        "d_maximal_are_ideals": all(is_ideal(A, M) for M in maxes),
        "e_maximal_are_right_ideals": all(is_ideal(A, M, "right") for M in maxes),
    }
    rep = TheoremReport("nilpotency_equivalences", f"{A.field} dim {A.dim}", statistics=dict(values))
    if len(set(values.values())) != 1:
        rep.counterexamples.append({**values, "algebra": format_algebra(A)})
    return rep


def class_bound(c: int, d: int) -> int:
    """``C(c+1, 2) d - C(c, 2)``."""
    return comb(c + 1, 2) * d - comb(c, 2)


def check_quotient_theorem(A: LeibnizAlgebra, N: Subspace, d_offset: int = 1) -> TheoremReport:
    """``A`` nilpotent iff ``A/N^2`` nilpotent, and the class bound when it is.

    Counterexamples are tagged ``claim: quotient_nilpotency`` (the
    biconditional) or ``claim: class_bound`` (class(A) <= class_bound(c, d)
    with c = class(N) and d + d_offset = class(A/N^2)).  The default offset 1
    is the published statement; ``d_offset=0`` is Hall's group-theoretic
    original, where d is the class of the quotient itself.
    """
    if not is_ideal(A, N):
        raise ValueError("N must be a two-sided ideal")
    if not is_nilpotent_subalgebra(A, N):
        raise ValueError("N must be nilpotent")
    N2 = product_space(A, N, N)
    Q, _ = quotient(A, N2)
    nil_a = nilpotency_class(A)
    nil_q = nilpotency_class(Q)
    stats = {"dim_N": N.dim, "dim_N2": N2.dim, "class_A": nil_a, "class_quotient": nil_q}
    rep = TheoremReport("quotient_nilpotency", f"{A.field} dim {A.dim}", statistics=stats)
    if (nil_a is None) != (nil_q is None):
        rep.counterexamples.append({"claim": "quotient_nilpotency", "N": str(N), "algebra": format_algebra(A)})
    if nil_a is not None and nil_q is not None:
        c = subalgebra_class(A, N)
        d = nil_q - d_offset
        bound = class_bound(c, d)
        stats.update(class_N=c, d=d, bound=bound)
        if nil_a > bound:
            rep.counterexamples.append({"claim": "class_bound", "N": str(N), "class_A": nil_a, "c": c, "d": d,
                                        "bound": bound, "algebra": format_algebra(A)})
    return rep


def unique_nilpotent_closure(A: LeibnizAlgebra, budget: int = DEFAULT_SUBSPACE_BUDGET) -> tuple[int, list[Subspace]]:
    """Nonzero nilpotent subalgebras whose normal closure is all of ``A``."""
    hits = [H for H in all_subalgebras(A, budget)
            if not H.is_zero() and is_nilpotent_subalgebra(A, H) and normal_closure(A, H).is_full()]
    return len(hits), hits


# ---------------------------------------------------------------------------
# cyclic algebras: formula versus lattice
# ---------------------------------------------------------------------------


def _push(P: Matrix, U: Subspace) -> Subspace:
    return Subspace.span(U.field, P.nrows, [P.apply(v) for v in U.basis])


def as_cyclic(A: LeibnizAlgebra) -> tuple[CyclicSpec, Matrix] | None:
    """Find a generator ``a`` whose powers ``a, a^2, ..., a^n`` form a basis.

    Returns the cyclic spec and the matrix whose columns are those powers, or
    ``None`` when ``A`` is not one-generated (finite fields only).
    """
    n = A.dim
    if n == 0:
        return None
    full = A.full_space()
    for a in full.elements():
        if not any(a):
            continue
        powers = [a]
        while len(powers) < n:
            powers.append(A.mul(a, powers[-1]))
        if not Subspace.span(A.field, n, powers).is_full():
            if subalgebra_generated(A, [a]).is_full():
                raise AssertionError("one-generated algebra whose powers do not span")
            continue
        P = Matrix.from_columns(A.field, powers, n)
        B = transport(A, P)
        alphas = tuple(B.sc[0][n - 1][1:])
        assert not B.sc[0][n - 1][0], "alpha_1 must vanish"
        C, spec = build_cyclic(A.field, alphas)
        assert B.sc == C.sc, "power basis does not give the cyclic table"
        return spec, P
    return None


def cyclic_crosscheck(field: Field, n: int, budget: int = DEFAULT_SUBSPACE_BUDGET) -> dict[str, TheoremReport]:
    """Compare every closed form with the brute-force lattice for all ``q^(n-1)`` specs."""
    import itertools

    universe = f"cyclic specs over {field}, n = {n}"
    names = ["frattini", "maximal_subalgebras", "cartan", "minimal_ideals", "socle", "maximal_ideal"]
    reports = {k: TheoremReport(k, universe, statistics={"specs": 0}) for k in names}
    for alphas in itertools.product(range(field.p), repeat=n - 1):
        A, spec = build_cyclic(field, alphas)
        tag = {"alphas": alphas, "algebra": format_algebra(A)}
        for r in reports.values():
            r.statistics["specs"] += 1
        phi = frattini_cyclic(spec)
        phi_b = frattini_bruteforce(A, budget)
        if phi != phi_b:
            reports["frattini"].counterexamples.append({**tag, "formula": str(phi), "lattice": str(phi_b)})
        ms = set(maximal_subalgebras_cyclic(spec))
        ms_b = set(maximal_subalgebras_bruteforce(A, budget))
        if ms != ms_b or len(ms) != len(maximal_subalgebras_cyclic(spec)):
            reports["maximal_subalgebras"].counterexamples.append(
                {**tag, "formula": sorted(map(str, ms)), "lattice": sorted(map(str, ms_b))})
        cart = cartan_cyclic(spec)
        carts_b = cartan_subalgebras_bruteforce(A, budget)
        if not is_cartan(A, cart) or carts_b != [cart]:
            reports["cartan"].counterexamples.append(
                {**tag, "formula": str(cart), "lattice": [str(c) for c in carts_b]})
        mins = minimal_ideals_cyclic(spec)
        mins_b = minimal_ideals_bruteforce(A, budget)
        if set(mins) != set(mins_b) or len(mins) != len(mins_b):
            reports["minimal_ideals"].counterexamples.append(
                {**tag, "formula": sorted(map(str, mins)), "lattice": sorted(map(str, mins_b))})
        soc = socle_cyclic(spec)
        soc_sum = A.zero_space()
        for I in mins:
            soc_sum = soc_sum + I
        soc_b = socle_bruteforce(A, budget)
        if soc != soc_b or soc != soc_sum:
            reports["socle"].counterexamples.append({**tag, "formula": str(soc), "lattice": str(soc_b)})
        mi = maximal_ideal_cyclic(spec)
        mi_b = maximal_ideals_bruteforce(A, budget)
        if mi_b != [mi] or mi != squares(A):
            reports["maximal_ideal"].counterexamples.append(
                {**tag, "formula": str(mi), "lattice": [str(m) for m in mi_b], "A2": str(squares(A))})
    return reports


# ---------------------------------------------------------------------------
# non-embedding
# ---------------------------------------------------------------------------


def _universe(field: Field, dim: int, budget: int, sample: int | None, seed: int, nilpotent_only: bool) -> Census:
    total = field.p ** (dim**3)
    if total <= budget:
        return enumerate_leibniz(field, dim, budget=budget)
    if nilpotent_only:
        return nilpotent_adapted_census(field, dim, sample=sample, seed=seed)
    if sample is None:
        return enumerate_leibniz(field, dim, budget=budget)  # raises BudgetExceeded
    return enumerate_leibniz(field, dim, sample=sample, seed=seed)


def nonembedding_power(A: LeibnizAlgebra, search_dim_max: int, sample: int | None = None, seed: int = 0,
                    budget: int = DEFAULT_TABLE_BUDGET) -> TheoremReport:
    """No nilpotent ``N`` (dim <= search_dim_max) has some ``N^i``, ``i >= 2``, isomorphic to ``A``.

    Dimensions whose raw census fits in ``budget`` are scanned exhaustively;
    larger ones use the adapted nilpotent census (exhaustive, or ``sample``
    random adapted tables).
    """
    if not A.field.is_finite:
        raise ValueError("non-embedding search needs a finite field")
    if A.is_abelian() or not is_nilpotent(A) or center(A).dim != 1:
        raise ValueError("precondition: A must be nilpotent, non-abelian, with one-dimensional center")
    t0 = time.perf_counter()
    field = A.field
    stats = {"algebras": 0, "nilpotent": 0, "powers_compared": 0}
    universes = []
    rep = TheoremReport("power_nonembedding", "", statistics=stats)
    for d in range(1, search_dim_max + 1):
        census = _universe(field, d, budget, sample, seed, nilpotent_only=True)
        universes.append(census.describe())
        for N in census:
            stats["algebras"] += 1
            lower = lower_central_series(N)
            if lower.stabilized:
                continue
            stats["nilpotent"] += 1
            for i, term in enumerate(lower.terms[1:], start=2):
                if term.dim != A.dim:
                    continue
                stats["powers_compared"] += 1
                P = is_isomorphic(induced_algebra(N, term), A)
                if P is not None:
                    rep.counterexamples.append({"i": i, "power": str(term), "algebra": format_algebra(N)})
    rep.universe = "; ".join(universes)
    rep.seconds = time.perf_counter() - t0
    return rep


def nonembedding_frattini(B: LeibnizAlgebra, search_dim_max: int, sample: int | None = None, seed: int = 0,
                    budget: int = DEFAULT_TABLE_BUDGET) -> TheoremReport:
    """No census algebra ``A`` has an ideal isomorphic to ``B`` inside its Frattini subalgebra."""
    if not B.field.is_finite:
        raise ValueError("non-embedding search needs a finite field")
    if not is_nilpotent(B) or B.dim < 2 or r_series(B).terms[0].dim != 1:
        raise ValueError("precondition: B must be nilpotent with dim(R_1(B)) = 1 and dim(B) >= 2")
    t0 = time.perf_counter()
    field = B.field
    stats = {"algebras": 0, "frattini_large_enough": 0, "ideals_compared": 0}
    universes = []
    rep = TheoremReport("frattini_nonembedding", "", statistics=stats)
    for d in range(B.dim, search_dim_max + 1):
        census = _universe(field, d, budget, sample, seed, nilpotent_only=False)
        universes.append(census.describe())
        for A in census:
            stats["algebras"] += 1
            phi = frattini_bruteforce(A)
            if phi.dim < B.dim:
                continue
            stats["frattini_large_enough"] += 1
            for I in all_ideals(A):
                if I.dim != B.dim or not I <= phi:
                    continue
                stats["ideals_compared"] += 1
                if is_isomorphic(induced_algebra(A, I), B) is not None:
                    rep.counterexamples.append({"ideal": str(I), "frattini": str(phi), "algebra": format_algebra(A)})
    rep.universe = "; ".join(universes)
    rep.seconds = time.perf_counter() - t0
    return rep


# names used by the public API contract
nonembedding_51 = nonembedding_power
nonembedding_52 = nonembedding_frattini


# ---------------------------------------------------------------------------
# census sweeps
# ---------------------------------------------------------------------------


def _check_sstar(A):
    s, nil = is_s_star(A), is_nilpotent(A)
    return None if s == nil else {"s_star": s, "nilpotent": nil}


def _check_conditionk(A):
    k, nil = condition_k(A), is_nilpotent(A)
    return None if k == nil else {"condition_k": k, "nilpotent": nil}


def _check_equivalences(A):
    rep = nilpotency_equivalences(A)
    return None if rep.ok else dict(rep.statistics)


def _check_frattini(A):
    phi = frattini_bruteforce(A)
    found = as_cyclic(A)
    if found is not None:
        spec, P = found
        formula = _push(P, frattini_cyclic(spec))
        if formula != phi:
            return {"claim": "cyclic_frattini_formula", "formula": str(formula), "lattice": str(phi)}
    if is_nilpotent(A) and phi != squares(A):
        return {"claim": "nilpotent frattini = A^2", "frattini": str(phi), "A2": str(squares(A))}
    return None


def _nilpotent_ideals(A):
    return [N for N in all_ideals(A) if is_nilpotent_subalgebra(A, N)]


def _check_quotient(A):
    for N in _nilpotent_ideals(A):
        bad = [cx for cx in check_quotient_theorem(A, N).counterexamples if cx["claim"] == "quotient_nilpotency"]
        if bad:
            return {"N": bad[0]["N"]}
    return None


def _check_class_bound(A):
    for N in _nilpotent_ideals(A):
        bad = [cx for cx in check_quotient_theorem(A, N).counterexamples if cx["claim"] == "class_bound"]
        if bad:
            return {k: v for k, v in bad[0].items() if k not in ("algebra", "claim")}
    return None


def _check_lemmas(A):
    subs = all_subalgebras(A)
    gap = A.dim - squares(A).dim
    nil = is_nilpotent(A)
    if nil and not A.is_abelian() and gap < 2 and not _one_generated(A, A.full_space()):
        return {"claim": "small_top_nilpotent_is_one_generated", "dim_A_over_A2": gap}
    if not nil and all(is_nilpotent_subalgebra(A, H) for H in subs if not H.is_full()) and gap > 1:
        return {"claim": "minimal_non_nilpotent_has_small_top", "dim_A_over_A2": gap}
    return None


# CLI check name -> (report id, per-algebra check returning None or a counterexample)
SWEEP_CHECKS: dict[str, tuple[str, Callable]] = {
    "sstar": ("s_star_iff_nilpotent", _check_sstar),
    "conditionk": ("condition_k_iff_nilpotent", _check_conditionk),
    "frattini": ("frattini_formulas", _check_frattini),
    "equivalences": ("nilpotency_equivalences", _check_equivalences),
    "thm31": ("quotient_nilpotency", _check_quotient),
    "classbound": ("class_bound", _check_class_bound),
    "lemmas": ("small_top_lemmas", _check_lemmas),
}

DEFAULT_SWEEP = ("sstar", "conditionk", "frattini", "equivalences", "thm31")


def sweep(census: Census, checks: Iterable[str] = DEFAULT_SWEEP) -> list[TheoremReport]:
    """Run the selected per-algebra checks over every member of ``census``."""
    checks = list(checks)
    unknown = [c for c in checks if c not in SWEEP_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")
    reports = []
    algebras = list(census)
    for name in checks:
        theorem, fn = SWEEP_CHECKS[name]
        t0 = time.perf_counter()
        rep = TheoremReport(theorem, census.describe(), statistics={"check": name, "algebras": len(algebras)})
        for A in algebras:
            bad = fn(A)
            if bad is not None:
                rep.counterexamples.append({**bad, "algebra": format_algebra(A)})
        rep.seconds = time.perf_counter() - t0
        reports.append(rep)
    return reports
