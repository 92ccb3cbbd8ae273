"""Verification battery: each check returns a :class:`CheckResult` with instance counts.

The same functions back ``grmeasure check`` and the acceptance tests.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import sympy

from ..config import DEFAULT_BUDGET
from ..families import (
    KRONECKER2,
    BimoduleSpec,
    TubeHandle,
    bimodule_preprojective_dims,
    four_subspace_tube_module,
    kronecker_indec_inventory,
    kronecker_preprojective,
    preprojective_dim_sequence,
    pruefer_measure,
    subspace_quiver,
)
from ..families.polys import tube_parameters
from ..grcore import (
    GRMeasure,
    IndecRegistry,
    algebra_bounds,
    all_gr_filtrations,
    check_gr_bound,
    gr_measure,
    gr_submodules,
    is_piling,
    is_piling_oracle,
    complement_length_check,
    measure_compare,
    measure_to_rational,
    register_indecomposables,
    sing_additivity_check,
    takeoff_prefix,
)
from ..grcore.engine import gr_classes, lattice_of
from ..quiverrep import hom_dim, is_iso, simple_at
from ..sublattice import sub_as_rep


@dataclass
class CheckResult:
    name: str
    passed: bool
    instances: int
    failures: int = 0
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}: {self.instances} instances, {self.failures} failures. {self.detail}".rstrip()

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "instances": self.instances,
            "failures": self.failures,
            "detail": self.detail,
        }


@lru_cache(maxsize=None)
def kronecker_registry(p: int, max_length: int) -> IndecRegistry:
    """Family-mode registry of the 2-Kronecker quiver, shared between checks."""
    return register_indecomposables(KRONECKER2, p, max_length, mode="family")


def _classes(reg: IndecRegistry, max_length: int, min_length: int = 1) -> list[int]:
    return [j for j in reg.indices_up_to(max_length) if reg[j].length >= min_length]


def _sub_rep(U):
    return sub_as_rep(U)[0]


# ---------------------------------------------------------------------------


def check_measure_order(seed: int = 0, random_pairs: int = 100_000, exhaustive_upto: int = 12) -> CheckResult:
    """Set order against exact rationals: every pair of subsets of {1..n} plus seeded random pairs."""
    n = exhaustive_upto
    subsets = [s for r in range(n + 1) for s in itertools.combinations(range(1, n + 1), r)]
    # rank of each subset in the exact rational order (equal values share a rank)
    by_value = sorted(range(len(subsets)), key=lambda i: measure_to_rational(subsets[i]))
    rank = [0] * len(subsets)
    prev = None
    r = -1
    for i in by_value:
        q = measure_to_rational(subsets[i])
        if q != prev:
            r += 1
            prev = q
        rank[i] = r
    fails = count = 0
    for s, x in zip(subsets, rank):
        for t, y in zip(subsets, rank):
            count += 1
            if measure_compare(s, t) != (x > y) - (x < y):
                fails += 1
    rng = random.Random(seed)
    for _ in range(random_pairs):
        s = [i for i in range(1, 21) if rng.random() < 0.4]
        t = [i for i in range(1, 21) if rng.random() < 0.4]
        x, y = measure_to_rational(s), measure_to_rational(t)
        count += 1
        if measure_compare(s, t) != (x > y) - (x < y):
            fails += 1
    detail = f"all pairs of subsets of {{1..{n}}} + {random_pairs} random pairs in {{1..20}} (seed {seed})"
    return CheckResult("measure-order", fails == 0, count, fails, detail)


def check_piling(max_length: int = 6, budget: int = DEFAULT_BUDGET) -> CheckResult:
    """Prefix test against the definition for every indecomposable submodule of every registered module."""
    reg = kronecker_registry(2, max_length)
    fails = count = 0
    for j in _classes(reg, max_length):
        Y = reg[j].rep
        L = lattice_of(Y, budget)
        for U in L.indecomposables(proper=False):
            count += 1
            if is_piling(U, reg) != is_piling_oracle(U, budget):
                fails += 1
    return CheckResult("piling", fails == 0, count, fails, f"GF(2) 2-Kronecker registry up to length {max_length}")


def _gr_inclusions(reg: IndecRegistry, max_length: int):
    for j in _classes(reg, max_length, min_length=2):
        Y = reg[j].rep
        for U in gr_submodules(Y, reg):
            yield j, U


def check_bounds(max_length: int = 7) -> CheckResult:
    reg = kronecker_registry(2, max_length)
    b = algebra_bounds(KRONECKER2, 2)
    fails = count = 0
    for _, U in _gr_inclusions(reg, max_length):
        count += 1
        if not check_gr_bound(U, b):
            fails += 1
    ok = fails == 0 and b.pq == 9
    return CheckResult("bounds", ok, count, fails, f"|Y| <= {b.pq}|X| on GR inclusions up to length {max_length}")


def check_takeoff(length_bound: int = 10) -> CheckResult:
    reg = kronecker_registry(2, length_bound)
    terms = takeoff_prefix(reg, 3, bound="ar")
    P2, P3 = kronecker_preprojective(2, 2), kronecker_preprojective(2, 3)
    simples = [simple_at(KRONECKER2, v, 2) for v in KRONECKER2.vertices]
    checks = [
        terms[0].measure == GRMeasure([1]),
        len(terms[0].classes) == 2,
        all(any(is_iso(reg[j].rep, S) is not None for j in terms[0].classes) for S in simples),
        terms[1].measure == GRMeasure([1, 3]),
        len(terms[1].classes) == 1 and is_iso(reg[terms[1].classes[0]].rep, P2) is not None,
        terms[2].measure == GRMeasure([1, 3, 5]),
        len(terms[2].classes) == 1 and is_iso(reg[terms[2].classes[0]].rep, P3) is not None,
    ]
    shown = "; ".join(f"I_{i + 1}={t.measure} by {','.join(t.labels)}" for i, t in enumerate(terms))
    return CheckResult("takeoff", all(checks), len(checks), checks.count(False), shown + f" (certified, registry complete to {length_bound})")


BIMODULE_ROWS = {
    "general": ["(1, 0)", "(a, 1)", "(a*b - 1, b)", "(a**2*b - 2*a, a*b - 1)"],
    "left-extension": ["(1, 0)", "(a, 1)", "(a - 1, 1)", "(a**2 - 2*a, a - 1)"],
    "right-extension": ["(1, 0)", "(1, 1)", "(b - 1, b)", "(b - 2, b - 1)"],
}


def check_bimodule() -> CheckResult:
    a, b = sympy.symbols("a b", positive=True, integer=True)
    specs = {
        "general": BimoduleSpec("general", a, b),
        "left-extension": BimoduleSpec("left-extension", a, 1),
        "right-extension": BimoduleSpec("right-extension", 1, b),
    }
    fails = count = 0
    for case, rows in BIMODULE_ROWS.items():
        for k, want in enumerate(rows, start=1):
            got = bimodule_preprojective_dims(specs[case], k)
            exp = sympy.sympify(want, locals={"a": a, "b": b})
            count += 1
            if any(sympy.expand(sympy.sympify(x) - y) != 0 for x, y in zip(got, exp)):
                fails += 1
    return CheckResult("bimodule", fails == 0, count, fails, "P_1..P_4 rows of the three cases, symbolic")


def _tube_handles(ps=(2, 3), max_boundary: int = 4):
    for p in ps:
        for par in tube_parameters(p, max_boundary // 2):
            yield TubeHandle(p, par)


def check_tubes(ts=(2, 3)) -> CheckResult:
    """M[t] has exactly one Gabriel-Roiter submodule and it is isomorphic to M[t-1]."""
    fails = count = 0
    bad = []
    for h in _tube_handles():
        for t in ts:
            M = h.module(t)
            reg = kronecker_registry(h.p, M.length - 1)
            subs = gr_submodules(M, reg)
            count += 1
            prev = h.module(t - 1)
            if len(subs) != 1 or is_iso(_sub_rep(subs[0]), prev) is None:
                fails += 1
                bad.append(f"{h.label(t)}/GF({h.p})")
    return CheckResult("tubes", fails == 0, count, fails, "unique GR submodule ≅ M[t-1]" + (f"; failing {bad}" if bad else ""))


def check_filtrations(ts=(1, 2, 3)) -> CheckResult:
    fails = count = 0
    for h in _tube_handles():
        M1 = h.module(1)
        for t in ts:
            M = h.module(t)
            reg = kronecker_registry(h.p, max(M.length - 1, 1))
            for F in all_gr_filtrations(M, reg):
                count += 1
                if not any(U.length == M1.length and is_iso(_sub_rep(U), M1) is not None for U in F.chain):
                    fails += 1
    return CheckResult("filtrations", fails == 0, count, fails, "every GR filtration of M[t], t<=3, passes through M[1]")


def check_four_subspace() -> CheckResult:
    M = four_subspace_tube_module(3)
    subs = gr_submodules(M)
    ok = len(subs) == 4 and all(U.length == 5 for U in subs)
    return CheckResult("four-subspace", ok, 1, int(not ok), f"{len(subs)} GR submodules of lengths {[U.length for U in subs]}; μ = {gr_measure(M)}")


def check_pruefer() -> CheckResult:
    h = TubeHandle.of(2, "x")
    mu1 = gr_measure(h.module(1))
    val = pruefer_measure(mu1, h.boundary_length)
    ok = mu1 == GRMeasure([1, 2]) and val == Fraction(5, 6)
    return CheckResult("pruefer", ok, 1, int(not ok), f"μ(M[1]) = {mu1}, s = {h.boundary_length}, value {val}")


def check_coxeter(t_max: int = 5) -> CheckResult:
    seq = preprojective_dim_sequence(subspace_quiver(4), "c", t_max)
    totals = [sum(d) for d in seq[1:]]
    want = [6 * t + 1 for t in range(1, t_max + 1)]
    fails = sum(x != y for x, y in zip(totals, want))
    return CheckResult("coxeter", fails == 0 and len(totals) == t_max, t_max, fails, f"totals {totals}")


def check_preinjective(max_length: int = 7) -> CheckResult:
    reg = kronecker_registry(2, max_length)
    hits = []
    count = 0
    for j in _classes(reg, max_length, min_length=2):
        for i in gr_classes(reg, reg[j].rep):
            count += 1
            if reg[i].kind == "preinjective":
                hits.append(f"{reg[i].label} ⊂ {reg[j].label}")
    return CheckResult("preinjective", not hits, count, len(hits), "GR submodule classes up to length 7" + (f": {hits}" if hits else ""))


def check_complements(max_length: int = 6, budget: int = DEFAULT_BUDGET) -> CheckResult:
    reg = kronecker_registry(2, max_length)
    fails = count = 0
    for _, U in _gr_inclusions(reg, max_length):
        count += 1
        if not complement_length_check(U, budget):
            fails += 1
    return CheckResult("complements", fails == 0, count, fails, f"GR inclusions up to length {max_length}")


def check_classification(max_length: int = 4, budget: int = DEFAULT_BUDGET) -> CheckResult:
    exh = register_indecomposables(KRONECKER2, 2, max_length, mode="exhaustive", budget=budget)
    fam = kronecker_indec_inventory(2, max_length)
    dims_exh = Counter(e.rep.dim_vector for e in exh)
    dims_fam = Counter(it.rep.dim_vector for it in fam)
    missing = [it.label for it in fam if exh.find(it.rep) is None]
    ok = len(exh) == len(fam) and dims_exh == dims_fam and not missing
    return CheckResult(
        "classification",
        ok,
        len(exh),
        int(not ok),
        f"exhaustive {len(exh)} classes vs inventory {len(fam)}" + (f"; missing {missing}" if missing else ""),
    )


def check_sing(max_length: int = 7, max_hom: int = 12) -> CheckResult:
    reg = kronecker_registry(2, max_length)
    fails = count = skipped = 0
    for _, U in _gr_inclusions(reg, max_length):
        if hom_dim(_sub_rep(U), U.parent) > max_hom:
            skipped += 1
            continue
        count += 1
        if not sing_additivity_check(U):
            fails += 1
    return CheckResult("sing", fails == 0, count, fails, f"GR inclusions up to length {max_length} with dim Hom <= {max_hom} ({skipped} larger skipped)")


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "measure-order": check_measure_order,
    "piling": check_piling,
    "bounds": check_bounds,
    "takeoff": check_takeoff,
    "bimodule": check_bimodule,
    "tubes": check_tubes,
    "filtrations": check_filtrations,
    "four-subspace": check_four_subspace,
    "pruefer": check_pruefer,
    "coxeter": check_coxeter,
    "preinjective": check_preinjective,
    "complements": check_complements,
    "classification": check_classification,
    "sing": check_sing,
}


def run_checks(names: list[str], seed: int = 0, budget: int = DEFAULT_BUDGET) -> list[CheckResult]:
    out = []
    for name in names:
        fn = CHECKS[name]
        kwargs = {}
        if name == "measure-order":
            kwargs["seed"] = seed
        if name in ("piling", "complements", "classification"):
            kwargs["budget"] = budget
        out.append(fn(**kwargs))
    return out
